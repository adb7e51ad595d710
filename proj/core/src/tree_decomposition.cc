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

#include "wdynmo/tree_decomposition.h"

#include <algorithm>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "wdynmo/errors.h"

namespace wdynmo {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void CheckIsTree(const TreeDecomposition& td) {
  const int k = static_cast<int>(td.bags.size());
  if (k == 0) {
    if (!td.tree_edges.empty()) {
      throw DomainError("tree edges given without bags");
    }
    return;
  }
  if (static_cast<int>(td.tree_edges.size()) != k - 1) {
    throw DomainError("tree decomposition with " + std::to_string(k) +
                      " bags needs " + std::to_string(k - 1) +
                      " tree edges, got " +
                      std::to_string(td.tree_edges.size()));
  }
  DisjointSets sets(k);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || a >= k || b < 0 || b >= k) {
      throw DomainError("tree edge refers to a missing bag");
    }
    if (!sets.Union(a, b)) {
      throw DomainError("tree edges of the decomposition contain a cycle");
    }
  }
}

std::vector<std::set<VertexId>> UndirectedNeighbors(
    const WeightedInstance& graph) {
  std::vector<std::set<VertexId>> nbrs(graph.num_vertices());
  for (const WeightedEdge& e : graph.edges()) {
    nbrs[e.from].insert(e.to);
    nbrs[e.to].insert(e.from);
  }
  return nbrs;
}

// Shared by the elimination-order constructions. `next` picks the next
// vertex to eliminate given the current fill graph and the eliminated flags.
template <typename NextVertex>
TreeDecomposition Eliminate(const WeightedInstance& graph, NextVertex next) {
  const int n = graph.num_vertices();
  auto nbrs = UndirectedNeighbors(graph);
  std::vector<char> eliminated(n, 0);
  std::vector<int> bag_of(n, -1);
  std::vector<int> position(n, 0);
  TreeDecomposition td;
  std::vector<std::vector<VertexId>> later(n);

  for (int step = 0; step < n; ++step) {
    VertexId v = next(nbrs, eliminated);
    eliminated[v] = 1;
    position[v] = step;
    std::vector<VertexId> bag(nbrs[v].begin(), nbrs[v].end());
    later[v] = bag;
    for (VertexId a : bag) {
      nbrs[a].erase(v);
      for (VertexId b : bag) {
        if (a != b) nbrs[a].insert(b);
      }
    }
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    bag_of[v] = static_cast<int>(td.bags.size());
    td.bags.push_back(std::move(bag));
  }

  // Each bag hangs below the bag of its earliest-eliminated later neighbor.
  // Bags without one are roots of separate components; chain them together.
  int previous_root = -1;
  for (VertexId v = 0; v < n; ++v) {
    if (later[v].empty()) continue;
    VertexId parent = *std::min_element(
        later[v].begin(), later[v].end(),
        [&](VertexId a, VertexId b) { return position[a] < position[b]; });
    td.tree_edges.emplace_back(bag_of[v], bag_of[parent]);
  }
  std::vector<VertexId> roots;
  for (VertexId v = 0; v < n; ++v) {
    if (later[v].empty()) roots.push_back(v);
  }
  std::sort(roots.begin(), roots.end(),
            [&](VertexId a, VertexId b) { return bag_of[a] < bag_of[b]; });
  for (VertexId r : roots) {
    if (previous_root >= 0) {
      td.tree_edges.emplace_back(previous_root, bag_of[r]);
    }
    previous_root = bag_of[r];
  }
  return td;
}

[[noreturn]] void Fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line), message);
}

}  // namespace

int TreeDecomposition::width() const {
  std::size_t largest = 0;
  for (const auto& bag : bags) largest = std::max(largest, bag.size());
  return static_cast<int>(largest) - 1;
}

bool ValidateTreeDecomposition(const TreeDecomposition& td,
                               const WeightedInstance& graph) {
  CheckIsTree(td);
  const int n = graph.num_vertices();
  const int k = static_cast<int>(td.bags.size());

  std::vector<std::vector<VertexId>> bags(k);
  std::vector<std::vector<int>> bags_of(n);
  for (int i = 0; i < k; ++i) {
    bags[i] = td.bags[i];
    std::sort(bags[i].begin(), bags[i].end());
    bags[i].erase(std::unique(bags[i].begin(), bags[i].end()), bags[i].end());
    for (VertexId v : bags[i]) {
      if (v < 0 || v >= n) {
        throw DomainError("bag " + std::to_string(i) +
                          " holds invalid vertex " + std::to_string(v));
      }
      bags_of[v].push_back(i);
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (bags_of[v].empty()) return false;
  }

  for (const WeightedEdge& e : graph.edges()) {
    VertexId a = e.from;
    VertexId b = e.to;
    if (bags_of[a].size() > bags_of[b].size()) std::swap(a, b);
    bool covered = std::any_of(
        bags_of[a].begin(), bags_of[a].end(), [&](int bag) {
          return std::binary_search(bags[bag].begin(), bags[bag].end(), b);
        });
    if (!covered) return false;
  }

  // Bags holding v induce a subforest of the tree; it is connected iff it
  // has exactly (#bags - 1) edges.
  std::vector<int> induced_edges(n, 0);
  for (auto [a, b] : td.tree_edges) {
    const auto& small = bags[a].size() <= bags[b].size() ? bags[a] : bags[b];
    const auto& large = bags[a].size() <= bags[b].size() ? bags[b] : bags[a];
    for (VertexId v : small) {
      if (std::binary_search(large.begin(), large.end(), v)) {
        ++induced_edges[v];
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (induced_edges[v] != static_cast<int>(bags_of[v].size()) - 1) {
      return false;
    }
  }
  return true;
}

TreeDecomposition EliminationDecomposition(const WeightedInstance& graph,
                                           std::span<const VertexId> order) {
  const int n = graph.num_vertices();
  if (static_cast<int>(order.size()) != n) {
    throw DomainError("elimination order must list every vertex once");
  }
  std::vector<char> seen(n, 0);
  for (VertexId v : order) {
    graph.CheckVertex(v);
    if (seen[v]++) throw DomainError("elimination order repeats a vertex");
  }
  std::size_t step = 0;
  return Eliminate(graph, [&](const auto&, const auto&) {
    return order[step++];
  });
}

TreeDecomposition MinFillDecomposition(const WeightedInstance& graph) {
  return Eliminate(graph, [](const std::vector<std::set<VertexId>>& nbrs,
                             const std::vector<char>& eliminated) {
    VertexId best = -1;
    std::size_t best_fill = std::numeric_limits<std::size_t>::max();
    std::size_t best_degree = best_fill;
    for (VertexId v = 0; v < static_cast<VertexId>(nbrs.size()); ++v) {
      if (eliminated[v]) continue;
      std::size_t fill = 0;
      for (auto a = nbrs[v].begin(); a != nbrs[v].end(); ++a) {
        for (auto b = std::next(a); b != nbrs[v].end(); ++b) {
          if (!nbrs[*a].contains(*b)) ++fill;
        }
      }
      if (fill < best_fill ||
          (fill == best_fill && nbrs[v].size() < best_degree)) {
        best = v;
        best_fill = fill;
        best_degree = nbrs[v].size();
      }
    }
    return best;
  });
}

TreeDecomposition ReadTreeDecomposition(std::istream& in, int* num_vertices) {
  TreeDecomposition td;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int declared_bags = 0;
  int n = 0;
  std::vector<char> defined;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head) || head == "c") continue;
    if (head == "s") {
      std::string kind;
      int max_bag = 0;
      if (have_header) Fail(line_no, "duplicate 's' line");
      if (!(tokens >> kind >> declared_bags >> max_bag >> n) || kind != "td" ||
          declared_bags < 0 || n < 0) {
        Fail(line_no, "expected 's td <bags> <width+1> <n>'");
      }
      have_header = true;
      td.bags.resize(declared_bags);
      defined.assign(declared_bags, 0);
      continue;
    }
    if (!have_header) Fail(line_no, "missing 's td' header");
    if (head == "b") {
      int id = 0;
      if (!(tokens >> id) || id < 1 || id > declared_bags) {
        Fail(line_no, "bag id out of range");
      }
      if (defined[id - 1]++) Fail(line_no, "bag defined twice");
      long long v = 0;
      while (tokens >> v) {
        if (v < 1 || v > n) Fail(line_no, "vertex out of range");
        td.bags[id - 1].push_back(static_cast<VertexId>(v - 1));
      }
      if (!tokens.eof()) Fail(line_no, "malformed bag line");
      continue;
    }
    int a = 0;
    int b = 0;
    std::istringstream edge(line);
    if (!(edge >> a >> b) || a < 1 || b < 1 || a > declared_bags ||
        b > declared_bags) {
      Fail(line_no, "malformed tree edge line");
    }
    std::string extra;
    if (edge >> extra) Fail(line_no, "trailing tokens on tree edge line");
    td.tree_edges.emplace_back(a - 1, b - 1);
  }
  if (!have_header) Fail(line_no, "missing 's td' header");
  if (num_vertices != nullptr) *num_vertices = n;
  return td;
}

void WriteTreeDecomposition(std::ostream& out, const TreeDecomposition& td,
                            int num_vertices) {
  out << "s td " << td.bags.size() << ' ' << (td.width() + 1) << ' '
      << num_vertices << '\n';
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << (i + 1);
    for (VertexId v : td.bags[i]) out << ' ' << (v + 1);
    out << '\n';
  }
  for (auto [a, b] : td.tree_edges) out << (a + 1) << ' ' << (b + 1) << '\n';
}

}  // namespace wdynmo
