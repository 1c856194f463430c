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

#ifndef PM_CATALOG_HPP_
#define PM_CATALOG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "pm/polymatroid.hpp"

namespace pm {

struct CatalogEntry {
  std::string name;
  Polymatroid poly;
};

using Catalog = std::vector<CatalogEntry>;

inline constexpr int kMaxCatalogN = 8;
// Pairings per source matroid above which a seeded sample is taken.
inline constexpr std::size_t kPairingBudget = 256;

// Deterministic catalog of small polymatroids:
//   * the canonical counterexample and unique-ordering instances,
//   * uniform matroids U(r,m), m <= max_n + 2,
//   * cycle matroids of connected simple graphs on <= 5 vertices with
//     <= max_n + 2 edges,
//   * compressions of those matroids by pairings into <= max_n blocks.
// Matroids and compressions are deduplicated up to isomorphism for
// n <= 7 and up to labeled equality above. Throws InputError if
// max_n > kMaxCatalogN.
Catalog generate_catalog(int max_n, std::uint64_t seed);

// Connected simple graphs on `vertices` vertices, one per isomorphism
// class, as edge lists.
std::vector<std::vector<std::pair<int, int>>> connected_graphs(int vertices);

// Seeded splitmix64 stream; the only randomness source in the library, so
// results are identical across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// A canonical rank table for `p` up to relabeling. Equal tables mean
// isomorphic polymatroids. Used for catalog deduplication only.
std::vector<int> isomorphism_key(const Polymatroid& p);

}  // namespace pm

#endif  // PM_CATALOG_HPP_
