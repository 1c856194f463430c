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

#include "pm/chains.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace pm {

std::string_view op_name(Op op) { return op == Op::kDelete ? "delete" : "contract"; }

std::string format_step(const RemovalStep& step) {
  return std::string(op_name(step.op)) + " " + step.element;
}

TheoremCounterexample::TheoremCounterexample(Polymatroid m, Polymatroid n)
    : Error("no element of E(M) - E(N) can be deleted or contracted keeping M connected "
            "with N as a minor"),
      m_(std::move(m)),
      n_(std::move(n)) {}

Polymatroid apply_step(const Polymatroid& p, Op op, int element) {
  return op == Op::kDelete ? deletion(p, bit(element)) : contraction(p, bit(element));
}

Polymatroid apply_step(const Polymatroid& p, const RemovalStep& step) {
  return apply_step(p, step.op, p.require_index(step.element));
}

namespace {

// Positions of N's elements inside M.
std::vector<int> embed(const Polymatroid& m, const Polymatroid& n) {
  std::vector<int> out(n.size());
  for (int i = 0; i < n.size(); ++i) {
    auto j = m.index_of(n.label(i));
    if (!j) {
      throw InputError("E(N) is not a subset of E(M): '" + n.label(i) + "' is missing");
    }
    out[i] = *j;
  }
  return out;
}

// Least (D, C) as masks of M, if any.
std::optional<std::pair<Mask, Mask>> find_minor(const Polymatroid& m, const Polymatroid& n) {
  const std::vector<int> pos = embed(m, n);
  std::vector<Mask> lift(std::size_t{1} << n.size(), 0);
  for (Mask s = 1; s < lift.size(); ++s) {
    lift[s] = lift[s & (s - 1)] | bit(pos[std::countr_zero(s)]);
  }
  const Mask removed = m.ground() & ~lift.back();
  std::optional<std::pair<Mask, Mask>> best;
  // Iterate over every subset D of the removal set.
  for (Mask d = removed;; d = (d - 1) & removed) {
    const Mask c = removed & ~d;
    const int base = m.rank(c);
    bool match = n.rank(0) == 0;
    for (Mask s = 1; match && s < lift.size(); ++s) {
      match = m.rank(lift[s] | c) - base == n.rank(s);
    }
    if (match && (!best || m.lex_less(d, best->first))) best = std::make_pair(d, c);
    if (d == 0) break;
  }
  return best;
}

bool is_minor(const Polymatroid& m, const Polymatroid& n) { return find_minor(m, n).has_value(); }

// Elements of M outside N, in label order.
std::vector<int> removal_order(const Polymatroid& m, const Polymatroid& n) {
  std::vector<int> out;
  for (int i = 0; i < m.size(); ++i) {
    if (!n.index_of(m.label(i))) out.push_back(i);
  }
  std::sort(out.begin(), out.end(), [&m](int a, int b) { return m.label(a) < m.label(b); });
  return out;
}

void require_search_preconditions(const Polymatroid& m, const Polymatroid& n) {
  embed(m, n);
  if (!connected(m)) throw PreconditionError("M is not connected");
  if (!connected(n)) throw PreconditionError("N is not connected");
  if (!is_minor(m, n)) throw PreconditionError("N is not a labeled minor of M");
}

std::optional<RemovalStep> search_step(const Polymatroid& m, const Polymatroid& n) {
  for (int e : removal_order(m, n)) {
    for (Op op : {Op::kDelete, Op::kContract}) {
      const Polymatroid next = apply_step(m, op, e);
      if (connected(next) && is_minor(next, n)) return RemovalStep{op, m.label(e)};
    }
  }
  return std::nullopt;
}

constexpr Op kOps[] = {Op::kDelete, Op::kContract};

class OrderingSearch {
 public:
  explicit OrderingSearch(const Polymatroid& n) : n_(n) {}

  const std::vector<std::vector<RemovalStep>>& constrained(const Polymatroid& q) {
    const std::string key = state_key(q);
    if (auto it = sequences_.find(key); it != sequences_.end()) return it->second;
    std::vector<std::vector<RemovalStep>> result;
    if (q.size() == n_.size()) {
      if (equals(q, n_)) result.emplace_back();
    } else {
      for (int e : removal_order(q, n_)) {
        for (Op op : kOps) {
          const Polymatroid next = apply_step(q, op, e);
          if (!connected(next)) continue;
          for (const auto& tail : constrained(next)) {
            std::vector<RemovalStep> seq{{op, q.label(e)}};
            seq.insert(seq.end(), tail.begin(), tail.end());
            result.push_back(std::move(seq));
          }
        }
      }
    }
    return sequences_.emplace(key, std::move(result)).first->second;
  }

  const std::vector<std::vector<std::string>>& admissible(const Polymatroid& q) {
    const std::string key = state_key(q);
    if (auto it = orderings_.find(key); it != orderings_.end()) return it->second;
    std::set<std::vector<std::string>> result;
    if (q.size() == n_.size()) {
      if (equals(q, n_)) result.emplace();
    } else {
      for (int e : removal_order(q, n_)) {
        for (Op op : kOps) {
          const Polymatroid next = apply_step(q, op, e);
          if (!connected(next)) continue;
          for (const auto& tail : admissible(next)) {
            std::vector<std::string> seq{q.label(e)};
            seq.insert(seq.end(), tail.begin(), tail.end());
            result.insert(std::move(seq));
          }
        }
      }
    }
    return orderings_.emplace(key, std::vector(result.begin(), result.end())).first->second;
  }

  std::uint64_t count(const Polymatroid& q) {
    const std::string key = state_key(q);
    if (auto it = counts_.find(key); it != counts_.end()) return it->second;
    std::uint64_t total = 0;
    if (q.size() == n_.size()) {
      total = equals(q, n_) ? 1 : 0;
    } else {
      for (int e : removal_order(q, n_)) {
        for (Op op : kOps) {
          const Polymatroid next = apply_step(q, op, e);
          if (connected(next)) total += count(next);
        }
      }
    }
    counts_.emplace(key, total);
    return total;
  }

 private:
  const Polymatroid& n_;
  std::map<std::string, std::vector<std::vector<RemovalStep>>> sequences_;
  std::map<std::string, std::vector<std::vector<std::string>>> orderings_;
  std::map<std::string, std::uint64_t> counts_;
};

void require_enumeration_preconditions(const Polymatroid& m, const Polymatroid& n) {
  require_search_preconditions(m, n);
  const int removed = m.size() - n.size();
  if (removed > kMaxRemovalSet) {
    throw PreconditionError("removal set has " + std::to_string(removed) +
                            " elements; enumeration is limited to " +
                            std::to_string(kMaxRemovalSet));
  }
}

}  // namespace

std::optional<MinorWitness> has_labeled_minor(const Polymatroid& m, const Polymatroid& n) {
  auto found = find_minor(m, n);
  if (!found) return std::nullopt;
  return MinorWitness{m.labels_of(found->first), m.labels_of(found->second)};
}

RemovalStep find_removal_step(const Polymatroid& m, const Polymatroid& n) {
  require_search_preconditions(m, n);
  if (m.size() == n.size()) throw PreconditionError("N equals M; nothing to remove");
  if (auto step = search_step(m, n)) return *step;
  throw TheoremCounterexample(m, n);
}

RemovalChain find_admissible_chain(const Polymatroid& m, const Polymatroid& n) {
  require_search_preconditions(m, n);
  RemovalChain chain;
  Polymatroid current = m;
  while (current.size() > n.size()) {
    auto step = search_step(current, n);
    if (!step) throw TheoremCounterexample(current, n);
    current = apply_step(current, *step);
    chain.steps.push_back(*step);
    chain.intermediates_connected.push_back(connected(current));
  }
  return chain;
}

std::vector<std::vector<std::string>> enumerate_admissible_orderings(const Polymatroid& m,
                                                                     const Polymatroid& n) {
  require_enumeration_preconditions(m, n);
  OrderingSearch search(n);
  return search.admissible(m);
}

std::vector<std::vector<RemovalStep>> enumerate_constrained_orderings(const Polymatroid& m,
                                                                      const Polymatroid& n) {
  require_enumeration_preconditions(m, n);
  OrderingSearch search(n);
  return search.constrained(m);
}

std::uint64_t count_constrained_orderings(const Polymatroid& m, const Polymatroid& n) {
  require_enumeration_preconditions(m, n);
  OrderingSearch search(n);
  return search.count(m);
}

}  // namespace pm
