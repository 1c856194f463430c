// Copyright 2026 The Authors.
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

// Generators and brute-force oracles shared by the unit tests. Oracles
// here are written straight from the definitions and never call the
// library routine they are compared against.

#ifndef PM_TESTS_SUPPORT_HPP_
#define PM_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pm/catalog.hpp"
#include "pm/construct.hpp"
#include "pm/core.hpp"

namespace pm::testing {

inline int gf2_rank(std::vector<std::uint32_t> vectors) {
  int r = 0;
  for (int col = 31; col >= 0; --col) {
    auto pivot = std::find_if(vectors.begin() + r, vectors.end(),
                              [col](std::uint32_t v) { return v >> col & 1; });
    if (pivot == vectors.end()) continue;
    std::iter_swap(vectors.begin() + r, pivot);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (static_cast<int>(i) != r && (vectors[i] >> col & 1)) vectors[i] ^= vectors[r];
    }
    ++r;
  }
  return r;
}

// A GF(2)-representable k-polymatroid: element i is a set of at most k
// random vectors in GF(2)^dim, rank is the rank of the union, optionally
// truncated. Always satisfies the axioms.
inline Polymatroid random_polymatroid(SplitMix64& rng, int n, int k) {
  const int dim = 1 + static_cast<int>(rng.below(5));
  std::vector<std::vector<std::uint32_t>> blocks(n);
  for (auto& b : blocks) {
    const int size = static_cast<int>(rng.below(k + 1));
    for (int j = 0; j < size; ++j) b.push_back(static_cast<std::uint32_t>(rng.below(1u << dim)));
  }
  const int cap = rng.below(3) == 0 ? static_cast<int>(rng.below(dim + 1)) : dim;
  std::vector<int> table(std::size_t{1} << n);
  for (Mask s = 0; s < table.size(); ++s) {
    std::vector<std::uint32_t> vs;
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) vs.insert(vs.end(), blocks[i].begin(), blocks[i].end());
    }
    table[s] = std::min(gf2_rank(vs), cap);
  }
  return Polymatroid(default_labels(n), k, table);
}

// Arbitrary small integer table; usually violates some axiom.
inline Polymatroid random_table(SplitMix64& rng, int n, int max_value) {
  std::vector<int> table(std::size_t{1} << n);
  for (auto& v : table) v = static_cast<int>(rng.below(max_value + 1));
  table[0] = rng.below(4) == 0 ? 1 : 0;
  return Polymatroid(default_labels(n), std::max(1, max_value), table);
}

// Axioms checked over every pair of subsets.
inline bool oracle_is_polymatroid(const Polymatroid& p) {
  if (p.rank(0) != 0) return false;
  for (int e = 0; e < p.size(); ++e) {
    if (p.rank(bit(e)) > p.k()) return false;
  }
  const Mask full = p.ground();
  for (Mask x = 0; x <= full; ++x) {
    for (Mask y = 0; y <= full; ++y) {
      if ((x & y) == x && p.rank(x) > p.rank(y)) return false;
      if (p.rank(x) + p.rank(y) < p.rank(x | y) + p.rank(x & y)) return false;
    }
  }
  return true;
}

inline bool oracle_split(const Polymatroid& p, Mask within, Mask x) {
  return p.rank(x) + p.rank(within & ~x) == p.rank(within);
}

// M|X connected, straight from the definition.
inline bool oracle_connected_on(const Polymatroid& p, Mask x) {
  for (Mask z = (x - 1) & x; z; z = (z - 1) & x) {
    if (oracle_split(p, x, z)) return false;
  }
  return true;
}

inline std::vector<std::string> sorted_labels(const Polymatroid& p, Mask s) {
  std::vector<std::string> out;
  for (int i = 0; i < p.size(); ++i) {
    if (s >> i & 1) out.push_back(p.label(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Lexicographically least separating side, if any.
inline std::optional<std::vector<std::string>> oracle_least_separator(const Polymatroid& p) {
  std::optional<std::vector<std::string>> best;
  for (Mask x = 1; x < p.ground(); ++x) {
    if (!oracle_split(p, p.ground(), x)) continue;
    auto labels = sorted_labels(p, x);
    if (!best || labels < *best) best = labels;
  }
  return best;
}

// Maximal nonempty sets whose restriction is connected, as sorted label
// lists, sorted.
inline std::vector<std::vector<std::string>> oracle_components(const Polymatroid& p) {
  std::vector<Mask> conn;
  for (Mask x = 1; x <= p.ground() && p.size() > 0; ++x) {
    if (oracle_connected_on(p, x)) conn.push_back(x);
  }
  std::vector<std::vector<std::string>> out;
  for (Mask x : conn) {
    const bool maximal = std::none_of(conn.begin(), conn.end(),
                                      [x](Mask y) { return y != x && (x & y) == x; });
    if (maximal) out.push_back(sorted_labels(p, x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rank of an edge subset of a graph: vertices minus connected components
// of the spanning subgraph, by depth-first search.
inline int graph_rank(int vertices, const std::vector<std::pair<int, int>>& edges, Mask s) {
  std::vector<std::vector<int>> adj(vertices);
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (!(s >> i & 1)) continue;
    adj[edges[i].first].push_back(edges[i].second);
    adj[edges[i].second].push_back(edges[i].first);
  }
  std::vector<bool> seen(vertices, false);
  int comps = 0;
  for (int v = 0; v < vertices; ++v) {
    if (seen[v]) continue;
    ++comps;
    std::vector<int> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return vertices - comps;
}

// Rank of a labeled subset in `p`.
inline int rank_of(const Polymatroid& p, std::vector<std::string> labels) {
  return p.rank(p.mask_of(labels));
}

}  // namespace pm::testing

#endif  // PM_TESTS_SUPPORT_HPP_
