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

#include "pm/chains.hpp"
#include "pm/construct.hpp"
#include "support.hpp"

using namespace pm;

namespace {

const Polymatroid kM = canonical_counterexample();
const Polymatroid kLineZ = single_line("z");

// Rank table of `q` listed in sorted-label order; equal iff equals().
std::vector<int> by_label(const Polymatroid& q) {
  const Polymatroid s = q.sorted();
  return {s.table().begin(), s.table().end()};
}

// Every constrained ordering by trying all permutations and operation
// vectors, without memoization.
std::set<std::vector<RemovalStep>> oracle_constrained(const Polymatroid& m, const Polymatroid& n) {
  std::vector<std::string> removed;
  for (const auto& l : m.labels()) {
    if (!n.index_of(l)) removed.push_back(l);
  }
  std::sort(removed.begin(), removed.end());
  const std::vector<int> target = by_label(n);
  std::set<std::vector<RemovalStep>> out;
  do {
    for (Mask ops = 0; ops < (Mask{1} << removed.size()); ++ops) {
      Polymatroid cur = m;
      std::vector<RemovalStep> seq;
      bool ok = true;
      for (std::size_t i = 0; i < removed.size() && ok; ++i) {
        const Op op = (ops >> i & 1) ? Op::kContract : Op::kDelete;
        const Mask e = cur.mask_of(std::vector<std::string>{removed[i]});
        cur = op == Op::kDelete ? deletion(cur, e) : contraction(cur, e);
        seq.push_back({op, removed[i]});
        ok = testing::oracle_connected_on(cur, cur.ground());
      }
      if (ok && cur.labels_of(cur.ground()) == n.labels_of(n.ground()) && by_label(cur) == target) {
        out.insert(seq);
      }
    }
  } while (std::next_permutation(removed.begin(), removed.end()));
  return out;
}

}  // namespace

TEST_CASE("labeled minor witnesses") {
  const auto w = has_labeled_minor(kM, kLineZ);
  REQUIRE(w.has_value());
  CHECK(w->deleted == LabelSet{"x", "y"});
  CHECK(w->contracted.empty());
  const Polymatroid point({"z"}, 1, {0, 1});
  const auto wp = has_labeled_minor(kM, point);
  REQUIRE(wp.has_value());
  CHECK(wp->deleted.empty());
  CHECK(wp->contracted == LabelSet{"x", "y"});
  const auto self = has_labeled_minor(kM, kM);
  REQUIRE(self.has_value());
  CHECK(self->deleted.empty());
  CHECK(self->contracted.empty());
  CHECK_FALSE(has_labeled_minor(kM, Polymatroid({"z"}, 3, {0, 3})).has_value());
  CHECK_THROWS_AS(has_labeled_minor(kM, single_line("w")), InputError);
}

TEST_CASE("removal step on the counterexample") {
  const RemovalStep s = find_removal_step(kM, kLineZ);
  CHECK(s == RemovalStep{Op::kDelete, "x"});
  CHECK(format_step(s) == "delete x");
  CHECK_THROWS_AS(find_removal_step(kM, kM), PreconditionError);
  CHECK_THROWS_AS(find_removal_step(deletion(kM, LabelSet{"y"}), kLineZ), PreconditionError);
  CHECK_THROWS_AS(find_removal_step(kM, Polymatroid({"z"}, 3, {0, 3})), PreconditionError);
}

TEST_CASE("admissible chains") {
  const RemovalChain c = find_admissible_chain(kM, kLineZ);
  REQUIRE(c.steps.size() == 2);
  CHECK(format_step(c.steps[0]) == "delete x");
  CHECK(format_step(c.steps[1]) == "delete y");
  CHECK(c.intermediates_connected == std::vector<bool>{true, true});
  CHECK(find_admissible_chain(kM, kM).steps.empty());

  const Polymatroid u23 = uniform_matroid(2, 3);
  const RemovalChain f = find_admissible_chain(unique_ordering_family(u23, 2), u23);
  REQUIRE(f.steps.size() == 2);
  CHECK(f.steps[0] == RemovalStep{Op::kDelete, "f1"});
  CHECK(f.steps[1] == RemovalStep{Op::kDelete, "f2"});
}

TEST_CASE("orderings on the counterexample") {
  const auto orders = enumerate_admissible_orderings(kM, kLineZ);
  CHECK(orders == std::vector<std::vector<std::string>>{{"x", "y"}});
  const auto seqs = enumerate_constrained_orderings(kM, kLineZ);
  CHECK(seqs.size() >= 2);
  CHECK(count_constrained_orderings(kM, kLineZ) == seqs.size());
}

TEST_CASE("singleton removal sets have exactly one ordering") {
  const Polymatroid m = unique_ordering_family(uniform_matroid(2, 3), 1);
  const Polymatroid n = uniform_matroid(2, 3);
  CHECK(enumerate_admissible_orderings(m, n) == std::vector<std::vector<std::string>>{{"f1"}});
  CHECK(count_constrained_orderings(m, n) == 1);
  const auto seqs = enumerate_constrained_orderings(m, n);
  REQUIRE(seqs.size() == 1);
  CHECK(seqs[0] == std::vector<RemovalStep>{{Op::kDelete, "f1"}});
}

TEST_CASE("one-element M with empty N has two constrained orderings") {
  // Deletion and contraction of a lone element coincide; see the
  // uniqueness checker, which requires |E(M)| >= 2.
  const Polymatroid one({"e"}, 1, {0, 1});
  CHECK(count_constrained_orderings(one, Polymatroid()) == 2);
}

TEST_CASE("unique ordering family has flexible constrained orderings") {
  const Polymatroid n = uniform_matroid(2, 3);
  for (int lines = 2; lines <= 3; ++lines) {
    const Polymatroid m = unique_ordering_family(n, lines);
    CHECK(enumerate_admissible_orderings(m, n).size() == 1);
    CHECK(count_constrained_orderings(m, n) >= 2);
  }
}

TEST_CASE("enumeration cap") {
  const Polymatroid big = uniform_matroid(1, 10);
  CHECK_THROWS_AS(count_constrained_orderings(big, uniform_matroid(1, 1)), PreconditionError);
}

TEST_CASE("property: enumerators match the permutation oracle") {
  SplitMix64 rng(29);
  int pairs = 0;
  for (int trial = 0; trial < 20000 && pairs < 150; ++trial) {
    const int size = 2 + static_cast<int>(rng.below(4));
    const Polymatroid m = testing::random_polymatroid(rng, size, 2);
    if (!connected(m)) continue;
    Mask d = 0, c = 0;
    for (int i = 0; i < size; ++i) {
      const auto r = rng.below(3);
      if (r == 1) d |= bit(i);
      if (r == 2) c |= bit(i);
    }
    if (!(d | c)) continue;
    const Polymatroid n = minor(m, d, c);
    if (!connected(n)) continue;
    ++pairs;
    const auto expected = oracle_constrained(m, n);
    const auto seqs = enumerate_constrained_orderings(m, n);
    CHECK(std::is_sorted(seqs.begin(), seqs.end()));
    CHECK(std::set<std::vector<RemovalStep>>(seqs.begin(), seqs.end()) == expected);
    CHECK(count_constrained_orderings(m, n) == expected.size());
    std::set<std::vector<std::string>> elements;
    for (const auto& s : expected) {
      std::vector<std::string> e;
      for (const auto& step : s) e.push_back(step.element);
      elements.insert(e);
    }
    const auto orders = enumerate_admissible_orderings(m, n);
    CHECK(std::set<std::vector<std::string>>(orders.begin(), orders.end()) == elements);
    // The theorem guarantees a chain for 2-polymatroids.
    const RemovalChain chain = find_admissible_chain(m, n);
    CHECK(expected.count(chain.steps) == 1);
    CHECK(std::all_of(chain.intermediates_connected.begin(), chain.intermediates_connected.end(),
                      [](bool b) { return b; }));
  }
  CHECK(pairs >= 100);
}

TEST_CASE("theorem counterexample signal on a non-polymatroid table") {
  // Chains do not validate their input. On this arbitrary table, no
  // removal of a, b or c keeps M connected with N = M\{a,b}/c as a minor.
  const Polymatroid m(default_labels(4), 3, {0, 0, 1, 3, 2, 3, 0, 3, 0, 2, 3, 1, 1, 1, 0, 1});
  const Polymatroid n = minor(m, bit(0) | bit(1), bit(2));
  REQUIRE(connected(m));
  try {
    find_removal_step(m, n);
    FAIL("expected TheoremCounterexample");
  } catch (const TheoremCounterexample& e) {
    CHECK(equals(e.m(), m));
    CHECK(equals(e.n(), n));
  }
}
