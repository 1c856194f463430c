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

#include "pm/construct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace pm {
namespace {

std::string fresh_label(const Polymatroid& p, const std::string& stem, int first = 1) {
  for (int i = first;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!p.index_of(candidate)) return candidate;
  }
}

struct Overlap {
  // Elements of p2 not shared with p1, in p2 order.
  std::vector<int> rest;
  int p1_index = -1;
  int p2_index = -1;
};

Overlap split_on_basepoint(const Polymatroid& p1, const Polymatroid& p2,
                           const std::string& basepoint) {
  Overlap o;
  auto i1 = p1.index_of(basepoint);
  auto i2 = p2.index_of(basepoint);
  if (!i1 || !i2) {
    throw PreconditionError("basepoint '" + basepoint + "' must belong to both ground sets");
  }
  o.p1_index = *i1;
  o.p2_index = *i2;
  for (int j = 0; j < p2.size(); ++j) {
    if (j == o.p2_index) continue;
    if (p1.index_of(p2.label(j))) {
      throw PreconditionError("ground sets share '" + p2.label(j) +
                              "' besides the basepoint '" + basepoint + "'");
    }
    o.rest.push_back(j);
  }
  return o;
}

}  // namespace

std::string default_label(int i) {
  std::string out(1, static_cast<char>('a' + i % 26));
  if (i >= 26) out += std::to_string(i / 26);
  return out;
}

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(default_label(i));
  return out;
}

Polymatroid direct_sum(const Polymatroid& p1, const Polymatroid& p2) {
  std::vector<std::string> labels = p1.labels();
  for (const auto& l : p2.labels()) {
    if (p1.index_of(l)) throw InputError("direct sum operands share element '" + l + "'");
    labels.push_back(l);
  }
  const int n1 = p1.size();
  const Mask low = p1.ground();
  return Polymatroid::from_function(std::move(labels), std::max(p1.k(), p2.k()), [&](Mask a) {
    return p1.rank(a & low) + p2.rank(a >> n1);
  });
}

Polymatroid parallel_connection(const Polymatroid& p1, const Polymatroid& p2,
                                const std::string& basepoint) {
  const Overlap o = split_on_basepoint(p1, p2, basepoint);
  const int rp = p1.rank(bit(o.p1_index));
  if (rp != p2.rank(bit(o.p2_index))) {
    throw PreconditionError("basepoint '" + basepoint + "' has rank " + std::to_string(rp) +
                            " on the first side and " +
                            std::to_string(p2.rank(bit(o.p2_index))) + " on the second");
  }
  std::vector<std::string> labels = p1.labels();
  for (int j : o.rest) labels.push_back(p2.label(j));
  const int n1 = p1.size();
  const Mask low = p1.ground();
  const Mask p1_bp = bit(o.p1_index);
  const Mask p2_bp = bit(o.p2_index);
  // Bits above n1 in the result map onto p2's non-basepoint elements.
  std::vector<Mask> high_lift(std::size_t{1} << o.rest.size(), 0);
  for (Mask s = 1; s < high_lift.size(); ++s) {
    high_lift[s] = high_lift[s & (s - 1)] | bit(o.rest[std::countr_zero(s)]);
  }
  return Polymatroid::from_function(std::move(labels), std::max(p1.k(), p2.k()), [&](Mask a) {
    const Mask a1 = a & low;
    Mask a2 = high_lift[a >> n1];
    if (a1 & p1_bp) a2 |= p2_bp;
    const int separate = p1.rank(a1) + p2.rank(a2);
    const int glued = p1.rank(a1 | p1_bp) + p2.rank(a2 | p2_bp) - rp;
    return std::min(separate, glued);
  });
}

Polymatroid two_sum(const Polymatroid& p1, const Polymatroid& p2, const std::string& basepoint) {
  const Overlap o = split_on_basepoint(p1, p2, basepoint);
  if (p1.size() < 2 || p2.size() < 2) {
    throw PreconditionError("2-sum operands need at least two elements each");
  }
  for (const Polymatroid* side : {&p1, &p2}) {
    const int i = side == &p1 ? o.p1_index : o.p2_index;
    const char* which = side == &p1 ? "first" : "second";
    if (side->rank(bit(i)) != 1) {
      throw PreconditionError(std::string("basepoint '") + basepoint + "' is not a point of the " +
                              which + " operand (rank " + std::to_string(side->rank(bit(i))) +
                              ")");
    }
    if (connectivity(*side, bit(i)) == 0) {
      throw PreconditionError(std::string("basepoint '") + basepoint +
                              "' is a separator of the " + which + " operand");
    }
  }
  const Polymatroid joined = parallel_connection(p1, p2, basepoint);
  return deletion(joined, bit(o.p1_index));
}

TwoSumDecomposition decompose_2_separation(const Polymatroid& p, Mask x1) {
  if (x1 & ~p.ground()) throw InputError("side is not a subset of the ground set");
  const Mask x2 = p.ground() & ~x1;
  const int excess = p.rank(x1) + p.rank(x2) - p.rank();
  if (excess != 1) {
    throw PreconditionError("(" + format_subset(p, x1) + ", " + format_subset(p, x2) +
                            ") is not an exact 2-separation: r(X1) + r(X2) - r(E) = " +
                            std::to_string(excess));
  }
  TwoSumDecomposition out;
  out.basepoint = fresh_label(p, "p#");
  auto side = [&](Mask own, Mask other) {
    std::vector<std::string> labels;
    std::vector<int> idx;
    for (int i = 0; i < p.size(); ++i) {
      if (own & bit(i)) {
        labels.push_back(p.label(i));
        idx.push_back(i);
      }
    }
    const int m = static_cast<int>(idx.size());
    labels.push_back(out.basepoint);
    std::vector<Mask> lift(std::size_t{1} << m, 0);
    for (Mask s = 1; s < lift.size(); ++s) {
      lift[s] = lift[s & (s - 1)] | bit(idx[std::countr_zero(s)]);
    }
    const int r_other = p.rank(other);
    return Polymatroid::from_function(std::move(labels), p.k(), [&](Mask a) {
      const Mask rest = lift[a & full_mask(m)];
      if (!(a & bit(m))) return p.rank(rest);
      return p.rank(rest | other) - r_other + 1;
    });
  };
  out.m1 = side(x1, x2);
  out.m2 = side(x2, x1);
  return out;
}

TwoSumDecomposition decompose_2_separation(const Polymatroid& p, const LabelSet& x1) {
  return decompose_2_separation(p, p.mask_of(x1));
}

Polymatroid principal_extension(const Polymatroid& p, Mask f, const std::string& label) {
  if (p.index_of(label)) throw InputError("element '" + label + "' already exists");
  std::vector<std::string> labels = p.labels();
  labels.push_back(label);
  const int n = p.size();
  return Polymatroid::from_function(std::move(labels), p.k(), [&](Mask a) {
    const Mask x = a & p.ground();
    if (!(a & bit(n))) return p.rank(x);
    return std::min(p.rank(x) + 1, p.rank(x | f));
  });
}

Polymatroid principal_extension(const Polymatroid& p, const LabelSet& f, const std::string& label) {
  return principal_extension(p, p.mask_of(f), label);
}

NaturalMatroid natural_matroid(const Polymatroid& p) {
  NaturalMatroid out;
  std::vector<std::string> labels;
  // source[j] is the element of p behind matroid element j.
  std::vector<int> source;
  std::vector<int> lines;
  for (int i = 0; i < p.size(); ++i) {
    const ElementClass c = element_kind(p, i);
    if (c.kind == ElementKind::kHigher) {
      throw PreconditionError("element '" + p.label(i) + "' has rank " + std::to_string(c.rank) +
                              "; the natural matroid needs a 2-polymatroid");
    }
    if (c.kind == ElementKind::kLine) {
      LabelSet copies;
      for (int copy = 1; copy <= 2; ++copy) {
        std::string l = p.label(i) + "#" + std::to_string(copy);
        if (p.index_of(l)) throw InputError("copy label '" + l + "' collides with an element");
        labels.push_back(l);
        copies.push_back(l);
        source.push_back(i);
      }
      lines.push_back(i);
      out.copies.emplace_back(p.label(i), std::move(copies));
    } else {
      labels.push_back(p.label(i));
      source.push_back(i);
      out.copies.emplace_back(p.label(i), LabelSet{p.label(i)});
    }
  }
  if (labels.size() > static_cast<std::size_t>(kMaxElements)) {
    throw InputError("natural matroid would have " + std::to_string(labels.size()) +
                     " elements; at most " + std::to_string(kMaxElements) + " are supported");
  }
  Mask line_mask = 0;
  for (int l : lines) line_mask |= bit(l);

  // Rank of X plus c_l free points on each line l is
  //   min over J of r(X u J) + sum_{l not in J} c_l,
  // J ranging over the lines that contribute at least one point.
  out.matroid = Polymatroid::from_function(std::move(labels), 1, [&](Mask a) {
    Mask plain = 0;
    std::vector<int> count(p.size(), 0);
    for (Mask s = a; s; s &= s - 1) {
      const int src = source[std::countr_zero(s)];
      if (line_mask & bit(src)) {
        ++count[src];
      } else {
        plain |= bit(src);
      }
    }
    std::vector<int> touched;
    for (int l : lines) {
      if (count[l]) touched.push_back(l);
    }
    int best = -1;
    for (Mask j = 0; j < (Mask{1} << touched.size()); ++j) {
      Mask with = plain;
      int extra = 0;
      for (std::size_t t = 0; t < touched.size(); ++t) {
        if (j & bit(static_cast<int>(t))) {
          with |= bit(touched[t]);
        } else {
          extra += count[touched[t]];
        }
      }
      const int value = p.rank(with) + extra;
      if (best < 0 || value < best) best = value;
    }
    return best;
  });
  return out;
}

Polymatroid induce(const Polymatroid& matroid, const std::vector<Block>& blocks) {
  std::vector<std::string> labels;
  std::vector<Mask> members;
  int k = 1;
  for (const auto& b : blocks) {
    labels.push_back(b.label);
    members.push_back(matroid.mask_of(b.members));
    k = std::max(k, static_cast<int>(b.members.size()));
  }
  if (labels.size() > static_cast<std::size_t>(kMaxElements)) {
    throw InputError("too many blocks");
  }
  std::vector<Mask> lift(std::size_t{1} << labels.size(), 0);
  for (Mask s = 1; s < lift.size(); ++s) {
    lift[s] = lift[s & (s - 1)] | members[std::countr_zero(s)];
  }
  return Polymatroid::from_function(std::move(labels), k,
                                    [&](Mask a) { return matroid.rank(lift[a]); });
}

Polymatroid compress(const CompressionMap& cm) {
  const Polymatroid& m = cm.matroid;
  for (int i = 0; i < m.size(); ++i) {
    if (m.rank(bit(i)) > 1) {
      throw PreconditionError("compression source is not a matroid: '" + m.label(i) +
                              "' has rank " + std::to_string(m.rank(bit(i))));
    }
  }
  Mask covered = 0;
  for (const auto& b : cm.blocks) {
    if (b.members.empty()) throw InputError("block '" + b.label + "' is empty");
    const Mask s = m.mask_of(b.members);
    if (std::popcount(s) != static_cast<int>(b.members.size()) || (s & covered)) {
      throw InputError("blocks do not partition the ground set: '" + b.label +
                       "' repeats an element");
    }
    covered |= s;
  }
  if (covered != m.ground()) {
    throw InputError("blocks do not partition the ground set: " +
                     format_subset(m, m.ground() & ~covered) + " uncovered");
  }
  return induce(m, cm.blocks);
}

CompressionMap compression_of(const NaturalMatroid& nm) {
  CompressionMap cm{nm.matroid, {}};
  for (const auto& [label, copies] : nm.copies) cm.blocks.push_back({label, copies});
  return cm;
}

Polymatroid canonical_counterexample() {
  // Bits: x = 1, y = 2, z = 4.
  return Polymatroid({"x", "y", "z"}, 2, {0, 2, 2, 3, 2, 4, 3, 4});
}

Polymatroid single_line(const std::string& label) { return Polymatroid({label}, 2, {0, 2}); }

Polymatroid uniform_matroid(int r, int m, const std::vector<std::string>& labels) {
  if (r < 0 || m < 0 || r > m) throw InputError("uniform matroid needs 0 <= r <= m");
  std::vector<std::string> names = labels.empty() ? default_labels(m) : labels;
  if (static_cast<int>(names.size()) != m) throw InputError("wrong number of labels");
  return Polymatroid::from_function(std::move(names), 1,
                                    [r](Mask a) { return std::min(std::popcount(a), r); });
}

Polymatroid cycle_matroid(int vertices, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<std::string>& labels) {
  std::vector<std::string> names =
      labels.empty() ? default_labels(static_cast<int>(edges.size())) : labels;
  if (names.size() != edges.size()) throw InputError("wrong number of labels");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) throw InputError("bad edge endpoint");
  }
  return Polymatroid::from_function(std::move(names), 1, [&](Mask a) {
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int r = 0;
    for (Mask s = a; s; s &= s - 1) {
      auto [u, v] = edges[std::countr_zero(s)];
      const int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        ++r;
      }
    }
    return r;
  });
}

Polymatroid unique_ordering_family(const Polymatroid& n_matroid, int n, const std::string& anchor) {
  const Polymatroid& base = n_matroid;
  if (n < 1) throw InputError("number of lines must be positive");
  if (base.empty()) throw PreconditionError("N must be nonempty");
  for (int i = 0; i < base.size(); ++i) {
    if (base.rank(bit(i)) != 1) {
      throw PreconditionError("N must be a simple matroid: '" + base.label(i) + "' has rank " +
                              std::to_string(base.rank(bit(i))));
    }
    for (int j = i + 1; j < base.size(); ++j) {
      if (base.rank(bit(i) | bit(j)) != 2) {
        throw PreconditionError("N must be simple: '" + base.label(i) + "' and '" +
                                base.label(j) + "' are parallel");
      }
    }
  }
  if (!connected(base)) throw PreconditionError("N must be connected");
  const std::string bn = anchor.empty() ? base.label(0) : anchor;
  base.require_index(bn);

  std::vector<std::string> b_labels;
  for (int i = 0; i < n; ++i) b_labels.push_back(fresh_label(base, "b#", i));
  const Polymatroid ambient = direct_sum(base, uniform_matroid(n, n, b_labels));

  std::vector<Block> blocks;
  for (const auto& l : base.labels()) blocks.push_back({l, {l}});
  for (int i = 1; i <= n; ++i) {
    std::string f = "f" + std::to_string(i);
    if (base.index_of(f)) throw InputError("N already has an element named '" + f + "'");
    blocks.push_back({f, {b_labels[i - 1], i == n ? bn : b_labels[i]}});
  }
  return induce(ambient, blocks).with_k(2);
}

}  // namespace pm
