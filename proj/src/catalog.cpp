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

#include "pm/catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "pm/construct.hpp"
#include "pm/core.hpp"

namespace pm {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  SplitMix64 g(seed ^ (salt * 0xD1B54A32D192ED03ULL));
  g.next();
  return g.next();
}

std::vector<int> isomorphism_key(const Polymatroid& p) {
  const int n = p.size();
  const Mask e = p.ground();
  using Signature = std::vector<int>;
  std::vector<Signature> sig(n);
  for (int i = 0; i < n; ++i) {
    Signature pairs;
    for (int j = 0; j < n; ++j) {
      if (j != i) pairs.push_back(p.rank(bit(i) | bit(j)));
    }
    std::sort(pairs.begin(), pairs.end());
    sig[i] = {p.rank(bit(i)), p.rank(e & ~bit(i))};
    sig[i].insert(sig[i].end(), pairs.begin(), pairs.end());
  }
  std::map<Signature, std::vector<int>> by_sig;
  for (int i = 0; i < n; ++i) by_sig[sig[i]].push_back(i);
  std::vector<std::vector<int>> groups;
  for (auto& [s, members] : by_sig) groups.push_back(members);

  std::vector<int> best;
  std::vector<int> table(std::size_t{1} << n);
  std::vector<Mask> lift(table.size(), 0);
  while (true) {
    std::vector<int> order;
    for (const auto& g : groups) order.insert(order.end(), g.begin(), g.end());
    table[0] = p.rank(0);
    bool worse = false;
    bool better = best.empty();
    for (Mask s = 1; s < table.size() && !worse; ++s) {
      lift[s] = lift[s & (s - 1)] | bit(order[std::countr_zero(s)]);
      table[s] = p.rank(lift[s]);
      if (!better) {
        if (table[s] < best[s]) better = true;
        else if (table[s] > best[s]) worse = true;
      }
    }
    if (better) best = table;
    // Odometer over per-group permutations.
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (std::next_permutation(groups[g].begin(), groups[g].end())) break;
    }
    if (g == groups.size()) break;
  }
  return best;
}

std::vector<std::vector<std::pair<int, int>>> connected_graphs(int vertices) {
  std::vector<std::pair<int, int>> all;
  for (int u = 0; u < vertices; ++u) {
    for (int v = u + 1; v < vertices; ++v) all.emplace_back(u, v);
  }
  auto is_connected_graph = [&](std::uint32_t edges) {
    if (vertices <= 1) return true;
    std::uint32_t reached = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (!(edges >> k & 1)) continue;
        const auto [u, v] = all[k];
        const bool hu = reached >> u & 1, hv = reached >> v & 1;
        if (hu != hv) {
          reached |= (1u << u) | (1u << v);
          grew = true;
        }
      }
    }
    return reached == (1u << vertices) - 1;
  };
  std::vector<int> perm(vertices);
  auto canonical = [&](std::uint32_t edges) {
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = ~0u;
    do {
      std::uint32_t mapped = 0;
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (!(edges >> k & 1)) continue;
        int u = perm[all[k].first], v = perm[all[k].second];
        if (u > v) std::swap(u, v);
        const auto it = std::find(all.begin(), all.end(), std::make_pair(u, v));
        mapped |= 1u << (it - all.begin());
      }
      best = std::min(best, mapped);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  std::set<std::uint32_t> seen;
  for (std::uint32_t edges = 0; edges < (1u << all.size()); ++edges) {
    if (!is_connected_graph(edges)) continue;
    seen.insert(canonical(edges));
  }
  std::vector<std::vector<std::pair<int, int>>> out;
  for (std::uint32_t edges : seen) {
    std::vector<std::pair<int, int>> list;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (edges >> k & 1) list.push_back(all[k]);
    }
    out.push_back(std::move(list));
  }
  return out;
}

namespace {

// Partitions of {0..m-1} into singletons and pairs with at least one pair
// and at most `max_blocks` blocks, each block listed by increasing least
// member.
void pairings(int m, int max_blocks, std::vector<std::vector<int>>& current,
              std::vector<bool>& used, std::vector<std::vector<std::vector<int>>>& out) {
  int first = 0;
  while (first < m && used[first]) ++first;
  if (first == m) {
    const bool has_pair = std::any_of(current.begin(), current.end(),
                                      [](const auto& b) { return b.size() == 2; });
    if (has_pair && static_cast<int>(current.size()) <= max_blocks) out.push_back(current);
    return;
  }
  if (static_cast<int>(current.size()) >= max_blocks) return;
  used[first] = true;
  current.push_back({first});
  pairings(m, max_blocks, current, used, out);
  current.pop_back();
  for (int j = first + 1; j < m; ++j) {
    if (used[j]) continue;
    used[j] = true;
    current.push_back({first, j});
    pairings(m, max_blocks, current, used, out);
    current.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

class Deduper {
 public:
  bool insert(const Polymatroid& p) {
    if (p.size() <= 7) return iso_.insert(isomorphism_key(p)).second;
    return labeled_.insert(state_key(p.relabeled(default_labels(p.size())))).second;
  }

 private:
  std::set<std::vector<int>> iso_;
  std::set<std::string> labeled_;
};

std::string graph_name(const std::vector<std::pair<int, int>>& edges) {
  std::string out = "graph[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(edges[i].first) + std::to_string(edges[i].second);
  }
  return out + "]";
}

}  // namespace

Catalog generate_catalog(int max_n, std::uint64_t seed) {
  if (max_n < 1 || max_n > kMaxCatalogN) {
    throw InputError("catalog size bound must be in [1, " + std::to_string(kMaxCatalogN) + "]");
  }
  const int max_matroid = max_n + 2;
  Catalog out;
  out.push_back({"counterexample", canonical_counterexample()});
  const Polymatroid u23 = uniform_matroid(2, 3);
  for (int n = 1; u23.size() + n <= max_matroid; ++n) {
    out.push_back({"unique_ordering(U(2,3)," + std::to_string(n) + ")",
                   unique_ordering_family(u23, n)});
  }

  Deduper dedup;
  std::vector<CatalogEntry> matroids;
  for (int m = 1; m <= max_matroid; ++m) {
    for (int r = 0; r <= m; ++r) {
      Polymatroid u = uniform_matroid(r, m);
      if (dedup.insert(u)) {
        matroids.push_back({"U(" + std::to_string(r) + "," + std::to_string(m) + ")", u});
      }
    }
  }
  for (int v = 2; v <= 5; ++v) {
    for (const auto& edges : connected_graphs(v)) {
      if (static_cast<int>(edges.size()) > max_matroid) continue;
      Polymatroid g = cycle_matroid(v, edges);
      if (dedup.insert(g)) matroids.push_back({graph_name(edges), g});
    }
  }
  out.insert(out.end(), matroids.begin(), matroids.end());

  for (std::size_t src = 0; src < matroids.size(); ++src) {
    const Polymatroid& m = matroids[src].poly;
    std::vector<std::vector<std::vector<int>>> all;
    std::vector<std::vector<int>> current;
    std::vector<bool> used(m.size(), false);
    pairings(m.size(), max_n, current, used, all);
    std::vector<std::size_t> chosen(all.size());
    std::iota(chosen.begin(), chosen.end(), 0);
    if (all.size() > kPairingBudget) {
      SplitMix64 rng(mix_seed(seed, src));
      for (std::size_t i = 0; i < kPairingBudget; ++i) {
        std::swap(chosen[i], chosen[i + rng.below(chosen.size() - i)]);
      }
      chosen.resize(kPairingBudget);
      std::sort(chosen.begin(), chosen.end());
    }
    for (std::size_t idx : chosen) {
      const auto& blocks = all[idx];
      std::vector<Block> spec;
      std::string name = matroids[src].name + "/";
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        Block block{default_label(static_cast<int>(b)), {}};
        if (b) name += '|';
        for (int member : blocks[b]) {
          block.members.push_back(m.label(member));
          name += m.label(member);
        }
        spec.push_back(std::move(block));
      }
      Polymatroid c = compress({m, spec});
      if (dedup.insert(c)) out.push_back({std::move(name), std::move(c)});
    }
  }
  return out;
}

}  // namespace pm
