// Copyright 2026 The wdynmo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs acceptance criteria 1-10 and prints one line per criterion. The first
// argument is the path of the wdynmo executable, used for criterion 10.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "harness.h"

namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

wdynmo::bench::Verdict Determinism(const std::string& cli) {
  namespace fs = std::filesystem;
  wdynmo::bench::Verdict verdict{10, "determinism", false, ""};
  const fs::path dir = fs::temp_directory_path();
  const fs::path first = dir / "wdynmo_acceptance_1.csv";
  const fs::path second = dir / "wdynmo_acceptance_2.csv";
  for (const fs::path& out : {first, second}) {
    const std::string command = "\"" + cli + "\" bench --rng-seed 1 --out \"" +
                                out.string() + "\" 2>/dev/null";
    if (std::system(command.c_str()) != 0) {
      verdict.detail = "bench run failed: " + command;
      return verdict;
    }
  }
  const std::string a = ReadFile(first);
  const std::string b = ReadFile(second);
  verdict.passed = !a.empty() && a == b;
  verdict.detail = std::to_string(a.size()) + " and " +
                   std::to_string(b.size()) + " bytes, " +
                   (a == b ? "identical" : "different");
  fs::remove(first);
  fs::remove(second);
  return verdict;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <path to wdynmo>\n", argv[0]);
    return 2;
  }
  wdynmo::bench::Options options;
  wdynmo::bench::Results results;
  bool all_passed = true;
  for (int c = 1; c <= wdynmo::bench::kNumCriteria; ++c) {
    const std::size_t before = results.verdicts.size();
    wdynmo::bench::RunCriterion(c, options, results);
    for (std::size_t i = before; i < results.verdicts.size(); ++i) {
      all_passed &= results.verdicts[i].passed;
      std::cout << wdynmo::bench::FormatVerdict(results.verdicts[i])
                << std::endl;
    }
  }
  const wdynmo::bench::Verdict determinism = Determinism(argv[1]);
  all_passed &= determinism.passed;
  std::cout << wdynmo::bench::FormatVerdict(determinism) << std::endl;
  return all_passed ? 0 : 1;
}
