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

#include <doctest.h>

#include <set>

#include "pm/catalog.hpp"
#include "pm/construct.hpp"
#include "pm/core.hpp"
#include "support.hpp"

using namespace pm;

TEST_CASE("splitmix64 reference stream") {
  // First outputs for seed 0 of the published reference generator.
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFULL);
  CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(g.next() == 0x06C45D188009454FULL);
  CHECK(mix_seed(42, 1) == mix_seed(42, 1));
  CHECK(mix_seed(42, 1) != mix_seed(42, 2));
}

TEST_CASE("connected graph counts") {
  // Connected unlabeled graphs on 1..5 vertices: 1, 1, 2, 6, 21.
  CHECK(connected_graphs(1).size() == 1);
  CHECK(connected_graphs(2).size() == 1);
  CHECK(connected_graphs(3).size() == 2);
  CHECK(connected_graphs(4).size() == 6);
  CHECK(connected_graphs(5).size() == 21);
}

TEST_CASE("isomorphism key is invariant under relabeling and reordering") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const Polymatroid p = testing::random_polymatroid(rng, n, 2);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
    const Polymatroid q = Polymatroid::from_function(default_labels(n), 2, [&](Mask s) {
      Mask t = 0;
      for (int i = 0; i < n; ++i) {
        if (s >> i & 1) t |= bit(perm[i]);
      }
      return p.rank(t);
    });
    CHECK(isomorphism_key(p) == isomorphism_key(q));
    CHECK(isomorphism_key(p) == isomorphism_key(p.relabeled(default_labels(n)).sorted()));
  }
  CHECK(isomorphism_key(uniform_matroid(1, 3)) != isomorphism_key(uniform_matroid(2, 3)));
}

TEST_CASE("catalog contents") {
  const Catalog c = generate_catalog(4, 42);
  REQUIRE(!c.empty());
  CHECK(c[0].name == "counterexample");
  CHECK(equals(c[0].poly, canonical_counterexample()));
  CHECK(c[1].name == "unique_ordering(U(2,3),1)");
  std::set<std::string> names;
  std::set<std::vector<int>> keys;
  bool has_graph = false, has_uniform = false, has_compressed = false;
  for (const auto& e : c) {
    CAPTURE(e.name);
    CHECK(validate(e.poly).empty());
    CHECK(e.poly.size() <= 6);
    CHECK(names.insert(e.name).second);
    has_graph = has_graph || e.name.rfind("graph[", 0) == 0;
    has_uniform = has_uniform || e.name.rfind("U(", 0) == 0;
    if (e.name.find('/') != std::string::npos) {
      has_compressed = true;
      CHECK(e.poly.size() <= 4);
      CHECK(e.poly.k() == 2);
    }
    if (e.name.rfind("unique", 0) != 0 && e.name != "counterexample") {
      CHECK(keys.insert(isomorphism_key(e.poly)).second);
    }
  }
  CHECK(has_graph);
  CHECK(has_uniform);
  CHECK(has_compressed);
}

TEST_CASE("catalog is deterministic and rejects bad bounds") {
  const Catalog a = generate_catalog(3, 7);
  const Catalog b = generate_catalog(3, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(state_key(a[i].poly) == state_key(b[i].poly));
  }
  CHECK_THROWS_AS(generate_catalog(0, 1), InputError);
  CHECK_THROWS_AS(generate_catalog(kMaxCatalogN + 1, 1), InputError);
}
