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

#include "pm/core.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

namespace pm {

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::kNormalized: return "(i) normalized";
    case Axiom::kMonotone: return "(ii) monotone";
    case Axiom::kSubmodular: return "(iii) submodular";
    case Axiom::kElementBound: return "(iv) element bound";
  }
  return "?";
}

std::vector<AxiomViolation> validate(const Polymatroid& p) {
  std::vector<AxiomViolation> out;
  const int n = p.size();
  if (p.rank(0) != 0) out.push_back({Axiom::kNormalized, 0, 0});
  for (Mask x = 0; x <= p.ground(); ++x) {
    for (int a = 0; a < n; ++a) {
      if (x & bit(a)) continue;
      const Mask xa = x | bit(a);
      if (p.rank(x) > p.rank(xa)) out.push_back({Axiom::kMonotone, x, xa});
      for (int b = a + 1; b < n; ++b) {
        if (x & bit(b)) continue;
        const Mask xb = x | bit(b);
        if (p.rank(xa) + p.rank(xb) < p.rank(xa | xb) + p.rank(x)) {
          out.push_back({Axiom::kSubmodular, xa, xb});
        }
      }
    }
    if (x == p.ground()) break;
  }
  for (int e = 0; e < n; ++e) {
    if (p.rank(bit(e)) > p.k()) out.push_back({Axiom::kElementBound, bit(e), bit(e)});
  }
  return out;
}

std::string describe(const Polymatroid& p, const AxiomViolation& v) {
  std::string out = "axiom ";
  out += axiom_name(v.axiom);
  out += ": ";
  switch (v.axiom) {
    case Axiom::kNormalized:
      out += "r({}) = " + std::to_string(p.rank(0));
      break;
    case Axiom::kMonotone:
      out += "r(" + format_subset(p, v.first) + ") = " + std::to_string(p.rank(v.first)) +
             " > r(" + format_subset(p, v.second) + ") = " + std::to_string(p.rank(v.second));
      break;
    case Axiom::kSubmodular:
      out += "X = " + format_subset(p, v.first) + ", Y = " + format_subset(p, v.second) +
             ": r(X) + r(Y) = " + std::to_string(p.rank(v.first) + p.rank(v.second)) +
             " < r(X u Y) + r(X n Y) = " +
             std::to_string(p.rank(v.first | v.second) + p.rank(v.first & v.second));
      break;
    case Axiom::kElementBound:
      out += "r(" + format_subset(p, v.first) + ") = " + std::to_string(p.rank(v.first)) +
             " > k = " + std::to_string(p.k());
      break;
  }
  return out;
}

int rank(const Polymatroid& p, const LabelSet& x) { return p.rank(p.mask_of(x)); }

Polymatroid induced_minor(const Polymatroid& p, Mask keep, Mask contracted) {
  if (keep & contracted) throw InputError("kept and contracted sets overlap");
  std::vector<int> idx;
  std::vector<std::string> labels;
  for (int i = 0; i < p.size(); ++i) {
    if (keep & bit(i)) {
      idx.push_back(i);
      labels.push_back(p.label(i));
    }
  }
  const std::size_t count = std::size_t{1} << idx.size();
  std::vector<int> table(count);
  std::vector<Mask> lift(count, 0);
  const int base = p.rank(contracted);
  table[0] = p.rank(contracted) - base;
  for (Mask s = 1; s < count; ++s) {
    lift[s] = lift[s & (s - 1)] | bit(idx[std::countr_zero(s)]);
    table[s] = p.rank(lift[s] | contracted) - base;
  }
  return Polymatroid(std::move(labels), p.k(), std::move(table));
}

Polymatroid deletion(const Polymatroid& p, Mask t) {
  return induced_minor(p, p.ground() & ~t, 0);
}

Polymatroid contraction(const Polymatroid& p, Mask t) {
  return induced_minor(p, p.ground() & ~t, t);
}

Polymatroid restriction(const Polymatroid& p, Mask x) { return induced_minor(p, x, 0); }

Polymatroid minor(const Polymatroid& p, Mask d, Mask c) {
  if (d & c) throw InputError("deleted set " + format_subset(p, d) +
                              " and contracted set " + format_subset(p, c) + " overlap");
  return induced_minor(p, p.ground() & ~(d | c), c);
}

Polymatroid deletion(const Polymatroid& p, const LabelSet& t) { return deletion(p, p.mask_of(t)); }
Polymatroid contraction(const Polymatroid& p, const LabelSet& t) {
  return contraction(p, p.mask_of(t));
}
Polymatroid restriction(const Polymatroid& p, const LabelSet& x) {
  return restriction(p, p.mask_of(x));
}
Polymatroid minor(const Polymatroid& p, const LabelSet& d, const LabelSet& c) {
  return minor(p, p.mask_of(d), p.mask_of(c));
}

int local_connectivity(const Polymatroid& p, Mask x, Mask y) {
  return p.rank(x) + p.rank(y) - p.rank(x | y);
}

int local_connectivity(const Polymatroid& p, const LabelSet& x, const LabelSet& y) {
  return local_connectivity(p, p.mask_of(x), p.mask_of(y));
}

int connectivity(const Polymatroid& p, Mask x) {
  return p.rank(x) + p.rank(p.ground() & ~x) - p.rank();
}

int connectivity(const Polymatroid& p, const LabelSet& x) { return connectivity(p, p.mask_of(x)); }

ConnectivityResult is_connected(const Polymatroid& p) {
  ConnectivityResult out;
  const Mask e = p.ground();
  if (p.size() < 2) return out;
  const int total = p.rank();
  for (Mask x = 1; x < e; ++x) {
    if (p.rank(x) + p.rank(e & ~x) != total) continue;
    if (!out.certificate || p.lex_less(x, out.certificate->side)) {
      out.certificate = SeparationCertificate{x};
    }
  }
  out.connected = !out.certificate.has_value();
  return out;
}

bool connected(const Polymatroid& p) {
  if (p.size() < 2) return true;
  const Mask e = p.ground();
  const int total = p.rank();
  // lambda is symmetric, so sides containing element 0 suffice.
  for (Mask x = 1; x < e; x += 2) {
    if (p.rank(x) + p.rank(e & ~x) == total) return false;
  }
  return true;
}

std::vector<Mask> components(const Polymatroid& p) {
  const int n = p.size();
  const Mask e = p.ground();
  // Zero-connectivity sets are closed under intersection, so the
  // component of an element is the intersection of those containing it.
  std::vector<Mask> block(n, e);
  const int total = p.rank();
  for (Mask x = 1; x < e; ++x) {
    if (p.rank(x) + p.rank(e & ~x) != total) continue;
    for (Mask s = x; s; s &= s - 1) block[std::countr_zero(s)] &= x;
  }
  std::vector<Mask> out;
  for (int i = 0; i < n; ++i) {
    if (std::find(out.begin(), out.end(), block[i]) == out.end()) out.push_back(block[i]);
  }
  std::sort(out.begin(), out.end(), [&p](Mask a, Mask b) { return p.lex_less(a, b); });
  return out;
}

bool equals(const Polymatroid& p, const Polymatroid& q) {
  if (p.size() != q.size()) return false;
  if (p.labels() == q.labels()) {
    return std::equal(p.table().begin(), p.table().end(), q.table().begin());
  }
  std::vector<int> to_q(p.size());
  for (int i = 0; i < p.size(); ++i) {
    auto j = q.index_of(p.label(i));
    if (!j) return false;
    to_q[i] = *j;
  }
  std::vector<Mask> lift(std::size_t{1} << p.size(), 0);
  for (Mask s = 1; s < lift.size(); ++s) {
    lift[s] = lift[s & (s - 1)] | bit(to_q[std::countr_zero(s)]);
    if (p.rank(s) != q.rank(lift[s])) return false;
  }
  return p.rank(0) == q.rank(0);
}

bool spans(const Polymatroid& p, Mask s, Mask t) { return p.rank(s | t) == p.rank(s); }

bool spans(const Polymatroid& p, const LabelSet& s, const LabelSet& t) {
  return spans(p, p.mask_of(s), p.mask_of(t));
}

std::string_view kind_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::kLoop: return "loop";
    case ElementKind::kPoint: return "point";
    case ElementKind::kLine: return "line";
    case ElementKind::kHigher: return "higher";
  }
  return "?";
}

ElementClass element_kind(const Polymatroid& p, int e) {
  const int r = p.rank(bit(e));
  if (r <= 0) return {ElementKind::kLoop, r};
  if (r == 1) return {ElementKind::kPoint, r};
  if (r == 2) return {ElementKind::kLine, r};
  return {ElementKind::kHigher, r};
}

ElementClass element_kind(const Polymatroid& p, std::string_view e) {
  return element_kind(p, p.require_index(e));
}

bool are_parallel(const Polymatroid& p, std::string_view a, std::string_view b) {
  const int i = p.require_index(a);
  const int j = p.require_index(b);
  if (i == j) throw PreconditionError("parallel test needs two distinct elements");
  for (int e : {i, j}) {
    if (p.rank(bit(e)) == 0) {
      throw PreconditionError("'" + p.label(e) + "' is a loop; parallel classes exclude loops");
    }
  }
  const int both = p.rank(bit(i) | bit(j));
  return both == p.rank(bit(i)) && both == p.rank(bit(j));
}

std::string state_key(const Polymatroid& p) {
  std::string key;
  for (const auto& l : p.labels()) {
    key += l;
    key += ',';
  }
  key += '|';
  const auto table = p.table();
  const std::size_t offset = key.size();
  key.resize(offset + table.size() * sizeof(int));
  std::memcpy(key.data() + offset, table.data(), table.size() * sizeof(int));
  return key;
}

}  // namespace pm
