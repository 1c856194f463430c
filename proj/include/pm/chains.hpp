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

// Labeled minors and connectivity-preserving removal sequences.
//
// A minor N of M is "labeled": E(N) is a subset of E(M) and N arises by
// deleting and contracting the rest. No isomorphism search is done.
//
// Tie-breaking everywhere is lexicographic on element labels, with Delete
// tried before Contract.

#ifndef PM_CHAINS_HPP_
#define PM_CHAINS_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pm/core.hpp"

namespace pm {

enum class Op { kDelete, kContract };

std::string_view op_name(Op op);

struct RemovalStep {
  Op op;
  std::string element;

  friend bool operator==(const RemovalStep&, const RemovalStep&) = default;
  // Element label first, then Delete before Contract.
  friend std::strong_ordering operator<=>(const RemovalStep& a, const RemovalStep& b) {
    if (auto c = a.element <=> b.element; c != 0) return c;
    return a.op <=> b.op;
  }
};

struct RemovalChain {
  std::vector<RemovalStep> steps;
  // intermediates_connected[i] is the connectivity of the polymatroid
  // after steps[0..i].
  std::vector<bool> intermediates_connected;
};

struct MinorWitness {
  LabelSet deleted;
  LabelSet contracted;
};

// Hard cap on |E(M) - E(N)| for the enumerators.
inline constexpr int kMaxRemovalSet = 8;

// Raised when the removal search finds no qualifying step. For
// 2-polymatroids this would refute a proven theorem, so it signals a bug;
// for k > 2 it is a genuine counterexample candidate.
class TheoremCounterexample : public Error {
 public:
  TheoremCounterexample(Polymatroid m, Polymatroid n);
  const Polymatroid& m() const { return m_; }
  const Polymatroid& n() const { return n_; }

 private:
  Polymatroid m_;
  Polymatroid n_;
};

Polymatroid apply_step(const Polymatroid& p, Op op, int element);
Polymatroid apply_step(const Polymatroid& p, const RemovalStep& step);

// Whether some partition (D, C) of E(M) - E(N) has M \ D / C == N. The
// witness is the least such pair, D compared first in lexicographic subset
// order. Throws InputError if E(N) is not a subset of E(M).
std::optional<MinorWitness> has_labeled_minor(const Polymatroid& m, const Polymatroid& n);

// A step (op, e), e outside E(N), after which M is still connected and
// still has N as a minor. Requires M and N connected, N a labeled minor of
// M, N != M (PreconditionError otherwise). Throws TheoremCounterexample if
// no step qualifies.
RemovalStep find_removal_step(const Polymatroid& m, const Polymatroid& n);

// Repeats find_removal_step down to N. Allows N == M (empty chain).
RemovalChain find_admissible_chain(const Polymatroid& m, const Polymatroid& n);

// Every ordering of E(M) - E(N) whose elements can be removed one at a
// time, each by some operation, keeping every intermediate connected and
// ending at N. Sorted lexicographically.
std::vector<std::vector<std::string>> enumerate_admissible_orderings(const Polymatroid& m,
                                                                     const Polymatroid& n);

// Every sequence of (operation, element) pairs doing the same with the
// operation fixed per step. Sorted.
std::vector<std::vector<RemovalStep>> enumerate_constrained_orderings(const Polymatroid& m,
                                                                      const Polymatroid& n);

// Size of enumerate_constrained_orderings() without materializing it.
std::uint64_t count_constrained_orderings(const Polymatroid& m, const Polymatroid& n);

std::string format_step(const RemovalStep& step);

}  // namespace pm

#endif  // PM_CHAINS_HPP_
