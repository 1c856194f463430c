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

// Constructions producing polymatroids from polymatroids.

#ifndef PM_CONSTRUCT_HPP_
#define PM_CONSTRUCT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "pm/core.hpp"

namespace pm {

// r(A) = r1(A n E1) + r2(A n E2). Throws InputError on shared labels.
Polymatroid direct_sum(const Polymatroid& p1, const Polymatroid& p2);

// Parallel connection along the shared element `basepoint`:
//   r(A) = min{ r1(A n E1) + r2(A n E2),
//               r1((A n E1) + p) + r2((A n E2) + p) - r1({p}) }.
// Ground order is E1 followed by E2 - p.
Polymatroid parallel_connection(const Polymatroid& p1, const Polymatroid& p2,
                                const std::string& basepoint);

// Parallel connection with the basepoint deleted. Requires each side to
// have at least two elements, the basepoint to be a point on both sides,
// and to have nonzero connectivity on both sides.
Polymatroid two_sum(const Polymatroid& p1, const Polymatroid& p2, const std::string& basepoint);

struct TwoSumDecomposition {
  Polymatroid m1;  // ground X1 + basepoint
  Polymatroid m2;  // ground X2 + basepoint
  std::string basepoint;
};

// Splits `p` along the exact 2-separation (X1, E - X1), which must satisfy
// r(X1) + r(E - X1) = r(E) + 1. The basepoint is named "p#<i>" for the
// least i >= 1 not already used.
TwoSumDecomposition decompose_2_separation(const Polymatroid& p, Mask x1);
TwoSumDecomposition decompose_2_separation(const Polymatroid& p, const LabelSet& x1);

// Adds `label` freely on the flat spanned by `f`:
//   r(X + q) = min(r(X) + 1, r(X u F)).
Polymatroid principal_extension(const Polymatroid& p, Mask f, const std::string& label);
Polymatroid principal_extension(const Polymatroid& p, const LabelSet& f, const std::string& label);

struct NaturalMatroid {
  Polymatroid matroid;
  // For each element of the source, in source order, the labels of the
  // matroid elements standing for it: two copies for a line, itself
  // otherwise.
  std::vector<std::pair<std::string, LabelSet>> copies;
};

// Freely adds two points to every line and deletes the lines. Lines are
// replaced in place by "<line>#1", "<line>#2". Throws PreconditionError if
// some element has rank 3 or more.
NaturalMatroid natural_matroid(const Polymatroid& p);

struct Block {
  std::string label;
  LabelSet members;
};

struct CompressionMap {
  Polymatroid matroid;
  std::vector<Block> blocks;
};

// rank(S) = matroid rank of the union of the members of S. Blocks may
// overlap. k of the result is the largest block size.
Polymatroid induce(const Polymatroid& matroid, const std::vector<Block>& blocks);

// induce() restricted to genuine partitions of a matroid's ground set.
Polymatroid compress(const CompressionMap& cm);

// Convenience inverse of natural_matroid().
CompressionMap compression_of(const NaturalMatroid& nm);

// Ground {x,y,z}, three lines with r(xy) = r(yz) = 3, r(xz) = 4, r(E) = 4.
// Connected, yet deleting or contracting y disconnects it.
Polymatroid canonical_counterexample();

// The line z on its own: the connected minor of canonical_counterexample()
// that y cannot be removed towards.
Polymatroid single_line(const std::string& label);

Polymatroid uniform_matroid(int r, int m, const std::vector<std::string>& labels = {});

// Cycle matroid of a multigraph-free graph given as an edge list over
// vertices 0..vertices-1. Labels default to "a", "b", ... in edge order.
Polymatroid cycle_matroid(int vertices, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<std::string>& labels = {});

// Starting from N + U_{n,n} on E(N) u {b_0..b_{n-1}}, with b_n an element
// of N, replaces the b's by lines f_i = {b_{i-1}, b_i}. The result has
// ground E(N) u {f1..fn}, ranks induced by the matroid, and a unique
// admissible ordering (f1, ..., fn) down to N.
//
// `anchor` names b_n; empty means the first element of N.
Polymatroid unique_ordering_family(const Polymatroid& n_matroid, int n,
                                   const std::string& anchor = {});

// "a", "b", ..., "z", "a1", "b1", ...
std::string default_label(int i);
std::vector<std::string> default_labels(int n);

}  // namespace pm

#endif  // PM_CONSTRUCT_HPP_
