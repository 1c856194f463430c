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

// Rank-function algebra on Polymatroid: axiom validation, minors,
// connectivity, local connectivity and element classification.
//
// Every operation comes in a Mask form (fast, used internally) and a
// LabelSet form (checked, throws InputError on unknown labels).

#ifndef PM_CORE_HPP_
#define PM_CORE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pm/errors.hpp"
#include "pm/polymatroid.hpp"

namespace pm {

enum class Axiom {
  kNormalized,    // r(empty) = 0
  kMonotone,      // X subset Y => r(X) <= r(Y)
  kSubmodular,    // r(X) + r(Y) >= r(X u Y) + r(X n Y)
  kElementBound,  // r({e}) <= k
};

std::string_view axiom_name(Axiom a);

// One violated axiom instance. Monotonicity and submodularity are checked
// in their local forms, which are equivalent to the global ones:
//   monotone:   first = X, second = X+e with r(X) > r(X+e);
//   submodular: first = X+a, second = X+b with
//               r(X+a) + r(X+b) < r(X+a+b) + r(X);
//   normalized: first = second = 0;
//   element bound: first = second = {e}.
struct AxiomViolation {
  Axiom axiom;
  Mask first;
  Mask second;
};

// Every violated axiom instance, in table order. Empty iff `p` is a valid
// k-polymatroid for k = p.k().
std::vector<AxiomViolation> validate(const Polymatroid& p);
std::string describe(const Polymatroid& p, const AxiomViolation& v);

int rank(const Polymatroid& p, const LabelSet& x);

// The minor on `keep` obtained by contracting `contracted` and deleting
// everything else. keep and contracted must be disjoint.
Polymatroid induced_minor(const Polymatroid& p, Mask keep, Mask contracted);

Polymatroid deletion(const Polymatroid& p, Mask t);
Polymatroid contraction(const Polymatroid& p, Mask t);
Polymatroid restriction(const Polymatroid& p, Mask x);
// Throws InputError when d and c overlap.
Polymatroid minor(const Polymatroid& p, Mask d, Mask c);

Polymatroid deletion(const Polymatroid& p, const LabelSet& t);
Polymatroid contraction(const Polymatroid& p, const LabelSet& t);
Polymatroid restriction(const Polymatroid& p, const LabelSet& x);
Polymatroid minor(const Polymatroid& p, const LabelSet& d, const LabelSet& c);

// r(X) + r(Y) - r(X u Y).
int local_connectivity(const Polymatroid& p, Mask x, Mask y);
int local_connectivity(const Polymatroid& p, const LabelSet& x, const LabelSet& y);

// lambda(X) = r(X) + r(E - X) - r(E).
int connectivity(const Polymatroid& p, Mask x);
int connectivity(const Polymatroid& p, const LabelSet& x);

// A nonempty proper subset with connectivity zero.
struct SeparationCertificate {
  Mask side = 0;
};

struct ConnectivityResult {
  bool connected = true;
  // Set iff !connected: the lexicographically least separating side.
  std::optional<SeparationCertificate> certificate;
};

// Polymatroids with fewer than two elements are connected.
ConnectivityResult is_connected(const Polymatroid& p);

// Faster yes/no answer without computing the least certificate.
bool connected(const Polymatroid& p);

// The partition of the ground set into components, blocks sorted in
// lexicographic subset order. Empty for the empty polymatroid.
std::vector<Mask> components(const Polymatroid& p);

// Same label set and the same rank on every subset. Ground-set order and
// k are ignored.
bool equals(const Polymatroid& p, const Polymatroid& q);

// r(S u T) == r(S).
bool spans(const Polymatroid& p, Mask s, Mask t);
bool spans(const Polymatroid& p, const LabelSet& s, const LabelSet& t);

enum class ElementKind { kLoop, kPoint, kLine, kHigher };

struct ElementClass {
  ElementKind kind;
  int rank;
};

std::string_view kind_name(ElementKind kind);
ElementClass element_kind(const Polymatroid& p, int e);
ElementClass element_kind(const Polymatroid& p, std::string_view e);

// Non-loops p, q with r({p,q}) = r({p}) = r({q}). Throws
// PreconditionError if either is a loop or p == q.
bool are_parallel(const Polymatroid& p, std::string_view a, std::string_view b);

// Canonical byte string identifying (labels in ground order, table).
// Two polymatroids with the same key are identical objects.
std::string state_key(const Polymatroid& p);

}  // namespace pm

#endif  // PM_CORE_HPP_
