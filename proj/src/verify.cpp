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

#include "pm/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

#include "pm/chains.hpp"
#include "pm/construct.hpp"
#include "pm/core.hpp"

namespace pm {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkipped: return "SKIPPED";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
 public:
  Recorder(std::string id, const VerifyOptions& opt) : opt_(opt), start_(Clock::now()) {
    report_.checker_id = std::move(id);
  }

  const std::string& id() const { return report_.checker_id; }
  const VerifyOptions& options() const { return opt_; }
  std::size_t instances() const { return report_.instances; }

  void instance() { ++report_.instances; }
  void skip(std::size_t n = 1) { report_.skipped += n; }

  template <typename Witness>
  void expect(bool ok, const std::string& entry, const Polymatroid& poly, Witness&& witness,
              const Polymatroid* companion = nullptr) {
    ++report_.checked;
    if (!ok) record_failure(entry, poly, companion, witness());
  }

  // Runs `body`; anything it throws is a failed configuration.
  template <typename Body>
  void guarded(const std::string& entry, const Polymatroid& poly, Body&& body,
               const Polymatroid* companion = nullptr) {
    try {
      body();
    } catch (const std::exception& e) {
      ++report_.checked;
      record_failure(entry, poly, companion, std::string("error: ") + e.what());
    }
  }

  void record_failure(const std::string& entry, const Polymatroid& poly,
                      const Polymatroid* companion, std::string witness) {
    ++report_.failed;
    if (report_.counterexamples.size() >= opt_.max_counterexamples) return;
    Counterexample cx{report_.checker_id, entry, poly, std::nullopt, std::move(witness)};
    if (companion) cx.companion = *companion;
    report_.counterexamples.push_back(std::move(cx));
  }

  VerificationReport finish() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start_);
    if (report_.failed > 0) {
      report_.status = Status::kFail;
    } else {
      report_.status = report_.checked > 0 ? Status::kPass : Status::kSkipped;
    }
    return std::move(report_);
  }

 private:
  const VerifyOptions& opt_;
  Clock::time_point start_;
  VerificationReport report_;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t ipow(std::uint64_t base, int n) {
  std::uint64_t out = 1;
  for (int i = 0; i < n; ++i) out *= base;
  return out;
}

// Calls f(code) for every base-`base` code of length n when n is small,
// or for opt.samples seeded random codes otherwise.
template <typename F>
void for_configs(int base, int n, const Recorder& rec, std::size_t entry_index, F&& f) {
  const VerifyOptions& opt = rec.options();
  const std::uint64_t total = ipow(static_cast<std::uint64_t>(base), n);
  if (n <= opt.exhaustive_max_n) {
    for (std::uint64_t code = 0; code < total; ++code) f(code);
    return;
  }
  SplitMix64 rng(mix_seed(opt.seed, fnv1a(rec.id()) ^ (entry_index * 0x9E3779B97F4A7C15ULL)));
  for (std::size_t i = 0; i < opt.samples; ++i) f(rng.below(total));
}

// digits[v] = set of positions whose base-`base` digit equals v.
std::array<Mask, 9> split_digits(std::uint64_t code, int base, int n) {
  std::array<Mask, 9> out{};
  for (int i = 0; i < n; ++i) {
    out[code % base] |= bit(i);
    code /= base;
  }
  return out;
}

// Position of the bits of `s` inside the sub-ground-set `keep`.
Mask project(Mask s, Mask keep) {
  Mask out = 0;
  int j = 0;
  for (Mask k = keep; k; k &= k - 1, ++j) {
    if (s & (k & -k)) out |= bit(j);
  }
  return out;
}

Mask unproject(Mask s, Mask keep) {
  Mask out = 0;
  int j = 0;
  for (Mask k = keep; k; k &= k - 1, ++j) {
    if (s & bit(j)) out |= k & -k;
  }
  return out;
}

Polymatroid apply_label(const Polymatroid& p, Op op, const std::string& label) {
  return apply_step(p, op, p.require_index(label));
}

Op other(Op op) { return op == Op::kDelete ? Op::kContract : Op::kDelete; }

std::string op_sym(Op op) { return op == Op::kDelete ? "\\" : "/"; }

std::string dump_minor_path(const Polymatroid& p, Mask d, Mask c) {
  return "D = " + format_subset(p, d) + ", C = " + format_subset(p, c);
}

// --- theorem-level helpers shared by the checkers and replay ---

void check_removal(Recorder& rec, const std::string& entry, const Polymatroid& m,
                   const Polymatroid& n) {
  rec.guarded(
      entry, m,
      [&] {
        try {
          const RemovalStep step = find_removal_step(m, n);
          const Polymatroid next = apply_step(m, step);
          const bool ok = !n.index_of(step.element) && connected(next) &&
                          has_labeled_minor(next, n).has_value();
          rec.expect(
              ok, entry, m,
              [&] { return "returned step '" + format_step(step) + "' does not qualify"; }, &n);
        } catch (const TheoremCounterexample&) {
          rec.expect(
              false, entry, m,
              [&] {
                return "no element of " + format_subset(m, m.mask_of(m.labels()) &
                                                               ~m.mask_of(n.labels())) +
                       " can be removed keeping connectivity and the minor " +
                       format_labels(n.labels_of(n.ground()));
              },
              &n);
        }
      },
      &n);
}

// Runs `visit(N)` on every distinct connected proper labeled minor of `m`
// whose removal set has between 1 and max_removed elements.
template <typename Visit>
void for_connected_minors(Recorder& rec, std::size_t entry_index, const Polymatroid& m,
                          int max_removed, Visit&& visit) {
  std::set<std::string> seen;
  for_configs(3, m.size(), rec, entry_index, [&](std::uint64_t code) {
    const auto parts = split_digits(code, 3, m.size());
    const Mask d = parts[1], c = parts[2];
    const int removed = std::popcount(d | c);
    if (removed == 0 || removed > max_removed) return;
    Polymatroid n = minor(m, d, c);
    if (!connected(n)) {
      rec.skip();
      return;
    }
    if (!seen.insert(state_key(n)).second) return;
    visit(n);
  });
}

bool exchange_exists(const std::set<std::vector<RemovalStep>>& all,
                     const std::vector<RemovalStep>& seq) {
  const std::string& e = seq[0].element;
  const std::string& f = seq[1].element;
  for (const auto& [first, second] : {std::pair{e, f}, std::pair{f, e}}) {
    for (Op a : {Op::kDelete, Op::kContract}) {
      for (Op b : {Op::kDelete, Op::kContract}) {
        std::vector<RemovalStep> alt = seq;
        alt[0] = {a, first};
        alt[1] = {b, second};
        if (alt != seq && all.count(alt)) return true;
      }
    }
  }
  return false;
}

void check_uniqueness_pair(Recorder& rec, const std::string& entry, const Polymatroid& m,
                           const Polymatroid& n) {
  rec.guarded(
      entry, m,
      [&] {
        const int removed = m.size() - n.size();
        const std::uint64_t count = count_constrained_orderings(m, n);
        rec.expect(
            count >= 1 && ((count == 1) == (removed == 1)), entry, m,
            [&] {
              return std::to_string(count) + " constrained orderings for a removal set of size " +
                     std::to_string(removed);
            },
            &n);
        if (removed < 2) return;
        const auto seqs = enumerate_constrained_orderings(m, n);
        const std::set<std::vector<RemovalStep>> all(seqs.begin(), seqs.end());
        for (const auto& seq : seqs) {
          rec.expect(
              exchange_exists(all, seq), entry, m,
              [&] {
                return "no alternative first two steps for " + format_step(seq[0]) + ", " +
                       format_step(seq[1]);
              },
              &n);
        }
      },
      &n);
}

void check_unique_ordering_family(Recorder& rec, int lines) {
  const Polymatroid base = uniform_matroid(2, 3);
  const std::string entry = "unique_ordering(U(2,3)," + std::to_string(lines) + ")";
  const Polymatroid empty_dummy;
  rec.instance();
  rec.guarded(entry, empty_dummy, [&] {
    const Polymatroid m = unique_ordering_family(base, lines);
    std::vector<std::string> expected;
    for (int i = 1; i <= lines; ++i) expected.push_back("f" + std::to_string(i));
    const auto orders = enumerate_admissible_orderings(m, base);
    rec.expect(
        orders.size() == 1 && orders[0] == expected, entry, m,
        [&] { return std::to_string(orders.size()) + " admissible orderings"; }, &base);
    const std::uint64_t count = count_constrained_orderings(m, base);
    rec.expect(
        lines >= 2 ? count >= 2 : count == 1, entry, m,
        [&] { return std::to_string(count) + " constrained orderings"; }, &base);
    if (lines >= 2) {
      const Polymatroid del = deletion(deletion(m, LabelSet{"f1"}), LabelSet{"f2"});
      const Polymatroid con = deletion(contraction(m, LabelSet{"f1"}), LabelSet{"f2"});
      rec.expect(
          equals(del, con), entry, m, [] { return "M\\f1\\f2 != M/f1\\f2"; }, &base);
    }
  });
}

void check_two_sum_pair(Recorder& rec, const std::string& entry, const Polymatroid& m1,
                        const Polymatroid& m2) {
  rec.guarded(
      entry, m1,
      [&] {
        const Polymatroid sum = two_sum(m1, m2, "p");
        for (const auto& [a, b] : {std::pair{&m1, &m2}, std::pair{&m2, &m1}}) {
          LabelSet own, far;
          for (const auto& l : a->labels()) {
            if (l != "p") own.push_back(l);
          }
          for (const auto& l : b->labels()) {
            if (l != "p") far.push_back(l);
          }
          const Mask e1 = sum.mask_of(own);
          const Mask e2 = sum.mask_of(far);
          for (const auto& q : own) {
            const Mask qm = sum.mask_of(LabelSet{q});
            if (local_connectivity(sum, e1 & ~qm, e2) == 1) {
              rec.guarded(
                  entry, m1,
                  [&] {
                    const Polymatroid lhs = deletion(sum, qm);
                    const Polymatroid rhs = two_sum(deletion(*a, LabelSet{q}), *b, "p");
                    rec.expect(
                        equals(lhs, rhs), entry, m1,
                        [&] { return "M\\" + q + " != (M1\\" + q + ") 2-sum M2"; }, &m2);
                  },
                  &m2);
            } else {
              rec.skip();
            }
            if (local_connectivity(sum, qm, e2) == 0) {
              rec.guarded(
                  entry, m1,
                  [&] {
                    const Polymatroid lhs = contraction(sum, qm);
                    const Polymatroid rhs = two_sum(contraction(*a, LabelSet{q}), *b, "p");
                    rec.expect(
                        equals(lhs, rhs), entry, m1,
                        [&] { return "M/" + q + " != (M1/" + q + ") 2-sum M2"; }, &m2);
                  },
                  &m2);
            } else {
              rec.skip();
            }
          }
        }
      },
      &m2);
}

void check_parallel_pair(Recorder& rec, const std::string& entry, const Polymatroid& m1,
                         const Polymatroid& m2) {
  rec.guarded(
      entry, m1,
      [&] {
        const Polymatroid joined = parallel_connection(m1, m2, "p");
        rec.expect(
            validate(joined).empty(), entry, m1,
            [] { return "parallel connection violates an axiom"; }, &m2);
        rec.expect(
            equals(restriction(joined, m1.labels()), m1) &&
                equals(restriction(joined, m2.labels()), m2),
            entry, m1, [] { return "parallel connection does not restrict to its parts"; }, &m2);
        const bool parts = connected(m1) && connected(m2);
        const bool sum = connected(two_sum(m1, m2, "p"));
        const bool par = connected(joined);
        rec.expect(
            parts == sum && sum == par, entry, m1,
            [&] {
              return std::string("connectivity of parts/2-sum/parallel connection: ") +
                     (parts ? "yes" : "no") + "/" + (sum ? "yes" : "no") + "/" +
                     (par ? "yes" : "no");
            },
            &m2);
      },
      &m2);
}

// Rank of unions of blocks of a random matroid; only the 2^blocks values
// the compression needs are computed.
Polymatroid random_compression(SplitMix64& rng, int k) {
  const int blocks = 2 + static_cast<int>(rng.below(4));
  std::vector<int> sizes(blocks);
  int m = 0;
  for (auto& s : sizes) {
    s = 1 + static_cast<int>(rng.below(k));
    m += s;
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (int i = m - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  std::vector<Mask> members(blocks, 0);
  for (int b = 0, next = 0; b < blocks; ++b) {
    for (int j = 0; j < sizes[b]; ++j) members[b] |= bit(order[next++]);
  }

  std::function<int(Mask)> matroid_rank;
  switch (rng.below(3)) {
    case 0: {
      const int r = static_cast<int>(rng.below(m + 1));
      matroid_rank = [r](Mask s) { return std::min(std::popcount(s), r); };
      break;
    }
    case 1: {
      const int rows = 1 + static_cast<int>(rng.below(std::min(m, 6)));
      std::vector<std::uint32_t> columns(m);
      for (auto& c : columns) c = static_cast<std::uint32_t>(rng.below(1u << rows));
      matroid_rank = [columns](Mask s) {
        std::array<std::uint32_t, 32> basis{};
        int r = 0;
        for (; s; s &= s - 1) {
          std::uint32_t v = columns[std::countr_zero(s)];
          while (v) {
            const int top = 31 - std::countl_zero(v);
            if (!basis[top]) {
              basis[top] = v;
              ++r;
              break;
            }
            v ^= basis[top];
          }
        }
        return r;
      };
      break;
    }
    default: {
      const int vertices = 2 + static_cast<int>(rng.below(5));
      std::vector<std::pair<int, int>> edges(m);
      for (auto& [u, v] : edges) {
        u = static_cast<int>(rng.below(vertices));
        v = static_cast<int>(rng.below(vertices));
      }
      matroid_rank = [edges, vertices](Mask s) {
        std::vector<int> parent(vertices);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
        int r = 0;
        for (; s; s &= s - 1) {
          const auto [u, v] = edges[std::countr_zero(s)];
          const int ru = find(u), rv = find(v);
          if (ru != rv) {
            parent[ru] = rv;
            ++r;
          }
        }
        return r;
      };
      break;
    }
  }
  return Polymatroid::from_function(default_labels(blocks), k, [&](Mask a) {
    Mask u = 0;
    for (Mask s = a; s; s &= s - 1) u |= members[std::countr_zero(s)];
    return matroid_rank(u);
  });
}

template <typename Body>
VerificationReport per_entry(const std::string& id, const Catalog& catalog,
                             const VerifyOptions& opt, Body&& body) {
  Recorder rec(id, opt);
  for (std::size_t i = 0; i < catalog.size(); ++i) body(rec, i, catalog[i]);
  return rec.finish();
}

}  // namespace

std::vector<std::pair<Polymatroid, Polymatroid>> two_sum_operands(const Catalog& catalog,
                                                                  std::size_t budget,
                                                                  std::uint64_t seed) {
  struct Candidate {
    std::size_t entry;
    int point;
  };
  std::vector<Candidate> cands;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Polymatroid& p = catalog[i].poly;
    if (p.size() < 2 || p.size() > 4) continue;
    for (int e = 0; e < p.size(); ++e) {
      if (p.rank(bit(e)) == 1 && connectivity(p, bit(e)) != 0) cands.push_back({i, e});
    }
  }
  const std::uint64_t total = static_cast<std::uint64_t>(cands.size()) * cands.size();
  std::set<std::uint64_t> codes;
  if (total <= budget) {
    for (std::uint64_t c = 0; c < total; ++c) codes.insert(c);
  } else {
    SplitMix64 rng(mix_seed(seed, fnv1a("two_sum_operands")));
    while (codes.size() < budget) codes.insert(rng.below(total));
  }
  auto relabel = [&](const Candidate& c, const std::string& stem) {
    const Polymatroid& p = catalog[c.entry].poly;
    std::vector<std::string> labels;
    for (int e = 0, j = 0; e < p.size(); ++e) {
      labels.push_back(e == c.point ? std::string("p") : stem + std::to_string(j++));
    }
    return p.relabeled(std::move(labels));
  };
  std::vector<std::pair<Polymatroid, Polymatroid>> out;
  for (std::uint64_t code : codes) {
    out.emplace_back(relabel(cands[code / cands.size()], "s"),
                     relabel(cands[code % cands.size()], "t"));
  }
  return out;
}

VerificationReport check_local_conn_monotone(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_local_conn_monotone", catalog, opt,
                   [](Recorder& rec, std::size_t idx, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    rec.instance();
    for_configs(9, p.size(), rec, idx, [&](std::uint64_t code) {
      const auto parts = split_digits(code, 9, p.size());
      Mask x1 = 0, y1 = 0, x2 = 0, y2 = 0;
      for (int v = 0; v < 9; ++v) {
        const int a = v % 3, b = v / 3;
        if (a >= 1) x1 |= parts[v];
        if (a == 2) y1 |= parts[v];
        if (b >= 1) x2 |= parts[v];
        if (b == 2) y2 |= parts[v];
      }
      rec.expect(local_connectivity(p, y1, y2) <= local_connectivity(p, x1, x2), entry.name, p,
                 [&] {
                   return "Y1 = " + format_subset(p, y1) + ", Y2 = " + format_subset(p, y2) +
                          ", X1 = " + format_subset(p, x1) + ", X2 = " + format_subset(p, x2);
                 });
    });
  });
}

VerificationReport check_lambda_minor(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_lambda_minor", catalog, opt,
                   [](Recorder& rec, std::size_t idx, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    const Mask e = p.ground();
    rec.instance();
    for_configs(4, p.size(), rec, idx, [&](std::uint64_t code) {
      const auto parts = split_digits(code, 4, p.size());
      const Mask x = parts[1], c = parts[2], d = parts[3];
      const Polymatroid q = minor(p, d, c);
      const int reduced = connectivity(q, project(x, e & ~(c | d)));
      const int full = connectivity(p, x);
      const bool skew = p.rank(x | c) == p.rank(x) + p.rank(c);
      const bool modular = p.rank(e & ~x) + p.rank(e & ~d) == p.rank() + p.rank(e & ~(x | d));
      rec.expect(reduced <= full && ((reduced == full) == (skew && modular)), entry.name, p, [&] {
        return "X = " + format_subset(p, x) + ", " + dump_minor_path(p, d, c) +
               ": lambda in minor " + std::to_string(reduced) + ", in M " +
               std::to_string(full) + ", conditions " + (skew ? "1" : "0") +
               (modular ? "1" : "0");
      });
    });
  });
}

VerificationReport check_union_connected(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_union_connected", catalog, opt,
                   [](Recorder& rec, std::size_t idx, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    rec.instance();
    // restricted_connected[X]: M|X has no nonempty proper zero-connectivity side.
    std::vector<char> restricted_connected(std::size_t{1} << p.size(), 1);
    for (Mask x = 1; x <= p.ground() && p.size() > 0; ++x) {
      if (std::popcount(x) < 2) continue;
      const Mask low = x & -x;
      for (Mask z = (x - 1) & x; z; z = (z - 1) & x) {
        if ((z & low) && p.rank(z) + p.rank(x & ~z) == p.rank(x)) {
          restricted_connected[x] = 0;
          break;
        }
      }
    }
    for_configs(4, p.size(), rec, idx, [&](std::uint64_t code) {
      const auto parts = split_digits(code, 4, p.size());
      const Mask x = parts[1] | parts[3], y = parts[2] | parts[3];
      if (!parts[3] || !restricted_connected[x] || !restricted_connected[y]) {
        rec.skip();
        return;
      }
      rec.expect(connected(restriction(p, x | y)), entry.name, p, [&] {
        return "M|" + format_subset(p, x) + " and M|" + format_subset(p, y) +
               " connected, union not";
      });
    });
  });
}

VerificationReport check_modular_identity(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_modular_identity", catalog, opt,
                   [](Recorder& rec, std::size_t idx, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    rec.instance();
    for_configs(8, p.size(), rec, idx, [&](std::uint64_t code) {
      const auto parts = split_digits(code, 8, p.size());
      Mask a = 0, b = 0, c = 0;
      for (int v = 0; v < 8; ++v) {
        if (v & 1) a |= parts[v];
        if (v & 2) b |= parts[v];
        if (v & 4) c |= parts[v];
      }
      const int lhs = local_connectivity(p, a | b, c) + local_connectivity(p, a, b);
      const int rhs = local_connectivity(p, a | c, b) + local_connectivity(p, a, c);
      rec.expect(lhs == rhs, entry.name, p, [&] {
        return "A = " + format_subset(p, a) + ", B = " + format_subset(p, b) +
               ", C = " + format_subset(p, c);
      });
    });
  });
}

VerificationReport check_lambda_zero_equal(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_lambda_zero_equal", catalog, opt,
                   [](Recorder& rec, std::size_t idx, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    rec.instance();
    for_configs(2, p.size(), rec, idx, [&](std::uint64_t code) {
      const Mask z = static_cast<Mask>(code);
      if (connectivity(p, z) != 0) {
        rec.skip();
        return;
      }
      rec.expect(equals(deletion(p, z), contraction(p, z)), entry.name, p,
                 [&] { return "Z = " + format_subset(p, z) + ": M\\Z != M/Z"; });
    });
  });
}

VerificationReport check_contraction_component(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_contraction_component", catalog, opt,
                   [](Recorder& rec, std::size_t, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    if (!connected(p)) {
      rec.skip(p.size());
      return;
    }
    rec.instance();
    for (int e = 0; e < p.size(); ++e) {
      const Mask rest = p.ground() & ~bit(e);
      const Polymatroid q = contraction(p, bit(e));
      if (connected(q)) {
        rec.skip();
        continue;
      }
      for (Mask comp : components(q)) {
        const Mask z = unproject(comp, rest);
        rec.expect(local_connectivity(p, z, bit(e)) > 0, entry.name, p, [&] {
          return "component " + format_subset(p, z) + " of M/" + p.label(e) +
                 " is skew to it";
        });
      }
    }
  });
}

VerificationReport check_natural_matroid(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_natural_matroid", catalog, opt,
                   [](Recorder& rec, std::size_t idx, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    bool two_poly = p.size() >= 2;
    for (int e = 0; e < p.size(); ++e) two_poly = two_poly && p.rank(bit(e)) <= 2;
    if (!two_poly) {
      rec.skip();
      return;
    }
    rec.instance();
    rec.guarded(entry.name, p, [&] {
      const NaturalMatroid nm = natural_matroid(p);
      const Polymatroid& mat = nm.matroid;
      rec.expect(validate(mat).empty() && mat.k() == 1, entry.name, p,
                 [] { return "natural matroid is not a matroid"; });
      std::vector<Mask> copies;
      for (const auto& [label, labels] : nm.copies) copies.push_back(mat.mask_of(labels));
      for_configs(2, p.size(), rec, idx, [&](std::uint64_t code) {
        const Mask s = static_cast<Mask>(code);
        Mask image = 0;
        for (Mask t = s; t; t &= t - 1) image |= copies[std::countr_zero(t)];
        rec.expect(p.rank(s) == mat.rank(image), entry.name, p, [&] {
          return "compression identity fails on " + format_subset(p, s);
        });
      });
      rec.expect(equals(compress(compression_of(nm)), p), entry.name, p,
                 [] { return "compressing the natural matroid does not recover M"; });
      rec.expect(connected(p) == connected(mat), entry.name, p,
                 [] { return "connectivity differs between M and its natural matroid"; });
    });
  });
}

VerificationReport check_small_separation_removal(const Catalog& catalog,
                                                  const VerifyOptions& opt) {
  return per_entry("check_small_separation_removal", catalog, opt,
                   [](Recorder& rec, std::size_t idx, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    if (p.size() < 2 || !connected(p)) {
      rec.skip();
      return;
    }
    rec.instance();
    int least = -1;
    for (Mask x = 1; x < p.ground(); ++x) {
      const int l = connectivity(p, x);
      if (least < 0 || l < least) least = l;
    }
    for_configs(2, p.size(), rec, idx, [&](std::uint64_t code) {
      const Mask a = static_cast<Mask>(code);
      if (connectivity(p, a) >= 2 * least) {
        rec.skip();
        return;
      }
      rec.expect(connected(deletion(p, a)) || connected(contraction(p, a)), entry.name, p, [&] {
        return "A = " + format_subset(p, a) + ": both M\\A and M/A disconnected";
      });
    });
  });
}

VerificationReport check_two_sum_lemmas(const Catalog& catalog, const VerifyOptions& opt) {
  Recorder rec("check_two_sum_lemmas", opt);
  const auto pairs = two_sum_operands(catalog, opt.two_sum_pairs, opt.seed);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    rec.instance();
    check_two_sum_pair(rec, "pair#" + std::to_string(i), pairs[i].first, pairs[i].second);
  }
  return rec.finish();
}

VerificationReport check_constructions(const Catalog& catalog, const VerifyOptions& opt) {
  Recorder rec("check_constructions", opt);
  for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
    const CatalogEntry& entry = catalog[idx];
    const Polymatroid& p = entry.poly;
    rec.instance();
    for_configs(2, p.size(), rec, idx, [&](std::uint64_t code) {
      const Mask x1 = static_cast<Mask>(code);
      const Mask x2 = p.ground() & ~x1;
      if (p.rank(x1) + p.rank(x2) != p.rank() + 1) {
        rec.skip();
        return;
      }
      rec.guarded(entry.name, p, [&] {
        const TwoSumDecomposition d = decompose_2_separation(p, x1);
        rec.expect(validate(d.m1).empty() && validate(d.m2).empty(), entry.name, p,
                   [&] { return "decomposition parts of " + format_subset(p, x1) + " invalid"; });
        rec.expect(equals(two_sum(d.m1, d.m2, d.basepoint), p), entry.name, p, [&] {
          return "reassembling the 2-separation " + format_subset(p, x1) + " fails";
        });
      });
    });
  }
  const auto pairs = two_sum_operands(catalog, opt.two_sum_pairs, opt.seed);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    rec.instance();
    check_parallel_pair(rec, "pair#" + std::to_string(i), pairs[i].first, pairs[i].second);
  }
  return rec.finish();
}

VerificationReport check_hall_splitter(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_hall_splitter", catalog, opt,
                   [](Recorder& rec, std::size_t, const CatalogEntry& entry) {
    const Polymatroid& p = entry.poly;
    if (p.size() < 2 || !connected(p)) {
      rec.skip();
      return;
    }
    rec.instance();
    LabelSet good;
    for (int e = 0; e < p.size(); ++e) {
      if (connected(deletion(p, bit(e))) || connected(contraction(p, bit(e)))) {
        good.push_back(p.label(e));
      }
    }
    rec.expect(good.size() >= 2, entry.name, p,
               [&] { return "only " + format_labels(good) + " can be removed"; });
  });
}

VerificationReport check_main_theorem(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_main_theorem", catalog, opt,
                   [](Recorder& rec, std::size_t idx, const CatalogEntry& entry) {
    const Polymatroid& m = entry.poly;
    if (!connected(m)) {
      rec.skip();
      return;
    }
    rec.instance();
    for_connected_minors(rec, idx, m, m.size(),
                         [&](const Polymatroid& n) { check_removal(rec, entry.name, m, n); });
  });
}

VerificationReport check_uniqueness_theorem(const Catalog& catalog, const VerifyOptions& opt) {
  Recorder rec("check_uniqueness_theorem", opt);
  for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
    const CatalogEntry& entry = catalog[idx];
    const Polymatroid& m = entry.poly;
    // A single element is a separator, so M\e = M/e and the empty minor
    // has two constrained orderings; the statement needs |E(M)| >= 2.
    if (m.size() < 2 || !connected(m)) {
      rec.skip();
      continue;
    }
    rec.instance();
    for_connected_minors(rec, idx, m, opt.uniqueness_max_removed, [&](const Polymatroid& n) {
      check_uniqueness_pair(rec, entry.name, m, n);
    });
  }
  for (int lines = 1; lines <= 3; ++lines) check_unique_ordering_family(rec, lines);
  return rec.finish();
}

VerificationReport check_swap_lemma(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_swap_lemma", catalog, opt,
                   [](Recorder& rec, std::size_t, const CatalogEntry& entry) {
    const Polymatroid& m = entry.poly;
    rec.instance();
    for (int e = 0; e < m.size(); ++e) {
      for (int f = 0; f < m.size(); ++f) {
        if (e == f) continue;
        const std::string& el = m.label(e);
        const std::string& fl = m.label(f);
        for (Op dag : {Op::kDelete, Op::kContract}) {
          const Polymatroid me = apply_step(m, dag, e);
          const bool me_conn = connected(me);
          for (Op ddag : {Op::kDelete, Op::kContract}) {
            const Polymatroid mf = apply_step(m, ddag, f);
            if (!me_conn || connected(mf) || !connected(apply_label(me, ddag, fl))) {
              rec.skip();
              continue;
            }
            const int ei = mf.require_index(el);
            const Mask single = bit(ei);
            const Mask rest = mf.ground() & ~single;
            const auto comps = components(mf);
            const bool split = comps.size() == 2 &&
                               std::count(comps.begin(), comps.end(), single) == 1 &&
                               std::count(comps.begin(), comps.end(), rest) == 1;
            rec.expect(split && equals(deletion(mf, single), contraction(mf, single)),
                       entry.name, m, [&] {
                         return "M" + op_sym(dag) + el + " and M" + op_sym(dag) + el +
                                op_sym(ddag) + fl + " connected but M" + op_sym(ddag) + fl +
                                " does not split off " + el;
                       });
          }
        }
      }
    }
  });
}

VerificationReport check_case_lemma(const Catalog& catalog, const VerifyOptions& opt) {
  return per_entry("check_case_lemma", catalog, opt,
                   [](Recorder& rec, std::size_t, const CatalogEntry& entry) {
    const Polymatroid& m = entry.poly;
    if (!connected(m)) {
      rec.skip();
      return;
    }
    rec.instance();
    for (int e = 0; e < m.size(); ++e) {
      for (int f = 0; f < m.size(); ++f) {
        if (e == f) continue;
        const std::string& el = m.label(e);
        const std::string& fl = m.label(f);
        for (Op alpha : {Op::kDelete, Op::kContract}) {
          const Op beta = other(alpha);
          const Polymatroid mae = apply_step(m, alpha, e);
          const bool mae_conn = connected(mae);
          for (Op gamma : {Op::kDelete, Op::kContract}) {
            const Op delta = other(gamma);
            if (!mae_conn) {
              rec.skip();
              continue;
            }
            const Polymatroid target = apply_label(mae, gamma, fl);
            if (!connected(target)) {
              rec.skip();
              continue;
            }
            const std::string where = "alpha " + op_sym(alpha) + el + ", gamma " +
                                      op_sym(gamma) + fl;
            const Polymatroid mgf = apply_step(m, gamma, f);
            if (connected(mgf)) {
              rec.expect(equals(target, apply_label(mgf, alpha, el)), entry.name, m,
                         [&] { return where + ": case (i) equality fails"; });
              continue;
            }
            const Polymatroid mbe = apply_step(m, beta, e);
            const bool swapped = equals(target, apply_label(mbe, gamma, fl));
            if (connected(mbe)) {
              rec.expect(swapped, entry.name, m,
                         [&] { return where + ": case (ii)(a) equality fails"; });
              continue;
            }
            const Polymatroid mdf = apply_step(m, delta, f);
            if (connected(mdf)) {
              rec.expect(swapped && equals(target, apply_label(mdf, beta, el)), entry.name, m,
                         [&] { return where + ": case (ii)(b) equalities fail"; });
            } else {
              rec.expect(swapped && equals(target, apply_label(mae, delta, fl)), entry.name, m,
                         [&] { return where + ": case (ii)(c) equalities fail"; });
            }
          }
        }
      }
    }
  });
}

VerificationReport explore_conjecture(int k, std::size_t budget, std::uint64_t seed) {
  if (k < 1) throw InputError("k must be positive");
  VerifyOptions opt;
  opt.seed = seed;
  opt.exhaustive_max_n = kMaxElements;
  Recorder rec("explore_conjecture", opt);
  SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
  const std::size_t max_attempts = 50 * budget + 100;
  for (std::size_t attempt = 0; rec.instances() < budget && attempt < max_attempts; ++attempt) {
    const Polymatroid m = random_compression(rng, k);
    if (!connected(m)) {
      rec.skip();
      continue;
    }
    const std::string name = "explore#" + std::to_string(attempt);
    rec.instance();
    for_connected_minors(rec, attempt, m, m.size(),
                         [&](const Polymatroid& n) { check_removal(rec, name, m, n); });
  }
  return rec.finish();
}

const std::vector<Checker>& checkers() {
  static const std::vector<Checker> all = {
      {"check_local_conn_monotone", check_local_conn_monotone},
      {"check_lambda_minor", check_lambda_minor},
      {"check_union_connected", check_union_connected},
      {"check_modular_identity", check_modular_identity},
      {"check_lambda_zero_equal", check_lambda_zero_equal},
      {"check_contraction_component", check_contraction_component},
      {"check_natural_matroid", check_natural_matroid},
      {"check_small_separation_removal", check_small_separation_removal},
      {"check_two_sum_lemmas", check_two_sum_lemmas},
      {"check_constructions", check_constructions},
      {"check_hall_splitter", check_hall_splitter},
      {"check_main_theorem", check_main_theorem},
      {"check_uniqueness_theorem", check_uniqueness_theorem},
      {"check_swap_lemma", check_swap_lemma},
      {"check_case_lemma", check_case_lemma},
      {"explore_conjecture",
       [](const Catalog&, const VerifyOptions& opt) {
         return explore_conjecture(opt.conjecture_k, opt.conjecture_budget, opt.seed);
       }},
  };
  return all;
}

std::vector<VerificationReport> run_suite(const Catalog& catalog, const VerifyOptions& opt,
                                          std::string_view suite) {
  std::vector<VerificationReport> out;
  for (const auto& c : checkers()) {
    if (suite == "all" || suite == c.id) out.push_back(c.run(catalog, opt));
  }
  if (out.empty()) throw InputError("unknown checker '" + std::string(suite) + "'");
  return out;
}

VerificationReport replay(const Counterexample& cx, const VerifyOptions& opt) {
  VerifyOptions o = opt;
  o.exhaustive_max_n = kMaxElements;
  const std::string& id = cx.checker_id;
  if (cx.companion) {
    Recorder rec(id, o);
    rec.instance();
    const Polymatroid& other = *cx.companion;
    if (id == "check_main_theorem" || id == "explore_conjecture") {
      check_removal(rec, cx.entry, cx.instance, other);
    } else if (id == "check_uniqueness_theorem") {
      check_uniqueness_pair(rec, cx.entry, cx.instance, other);
    } else if (id == "check_two_sum_lemmas") {
      check_two_sum_pair(rec, cx.entry, cx.instance, other);
    } else if (id == "check_constructions") {
      check_parallel_pair(rec, cx.entry, cx.instance, other);
    } else {
      throw InputError("checker '" + id + "' does not take a companion instance");
    }
    return rec.finish();
  }
  const Catalog single{{cx.entry, cx.instance}};
  return run_suite(single, o, id == "explore_conjecture" ? "check_main_theorem" : id).front();
}

std::string format_report_line(const VerificationReport& r, bool timing) {
  std::string out = r.checker_id + " " + std::string(status_name(r.status)) +
                    " checked=" + std::to_string(r.checked) +
                    " failed=" + std::to_string(r.failed) +
                    " skipped=" + std::to_string(r.skipped) +
                    " instances=" + std::to_string(r.instances);
  if (timing) {
    out += " elapsed=" +
           std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count()) +
           "ms";
  }
  return out;
}

}  // namespace pm
