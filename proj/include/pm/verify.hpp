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

// Executable checkers for the connectivity lemmas, the splitter theorem
// and the ordering results, run over a catalog of small polymatroids.
//
// Every checker enumerates configurations, counts those that fail the
// statement's hypotheses as skipped, and asserts the conclusion on the
// rest. Subset quantifiers are exhaustive when the ground set has at most
// VerifyOptions::exhaustive_max_n elements and sampled (seeded) above.
// A configuration that throws is a failure, never a skip.

#ifndef PM_VERIFY_HPP_
#define PM_VERIFY_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pm/catalog.hpp"
#include "pm/polymatroid.hpp"

namespace pm {

enum class Status { kPass, kFail, kSkipped };

std::string_view status_name(Status s);

struct Counterexample {
  std::string checker_id;
  std::string entry;
  Polymatroid instance;
  // The minor N for theorem checkers, the second operand for 2-sum checks.
  std::optional<Polymatroid> companion;
  std::string witness;
};

struct VerificationReport {
  std::string checker_id;
  Status status = Status::kSkipped;
  std::size_t instances = 0;       // catalog entries (or generated objects) examined
  std::size_t checked = 0;         // configurations on which the conclusion was asserted
  std::size_t skipped = 0;         // configurations failing the hypotheses
  std::size_t failed = 0;          // all failures; only the first few are kept below
  std::vector<Counterexample> counterexamples;
  std::chrono::nanoseconds elapsed{0};
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int exhaustive_max_n = 5;
  // Sampled configurations per instance above exhaustive_max_n.
  std::size_t samples = 2048;
  std::size_t max_counterexamples = 5;
  // Generated operand pairs for the 2-sum checks.
  std::size_t two_sum_pairs = 3000;
  int uniqueness_max_removed = 4;
  int conjecture_k = 3;
  std::size_t conjecture_budget = 1000;
};

VerificationReport check_local_conn_monotone(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_lambda_minor(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_union_connected(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_modular_identity(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_lambda_zero_equal(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_contraction_component(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_natural_matroid(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_small_separation_removal(const Catalog& catalog,
                                                  const VerifyOptions& opt);
VerificationReport check_two_sum_lemmas(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_constructions(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_hall_splitter(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_main_theorem(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_uniqueness_theorem(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_swap_lemma(const Catalog& catalog, const VerifyOptions& opt);
VerificationReport check_case_lemma(const Catalog& catalog, const VerifyOptions& opt);

// Generates connected k-polymatroids by compressing random matroids
// (uniform, binary, graphic) into at most five blocks of size <= k, and
// runs the removal search against every connected proper labeled minor.
// `budget` counts connected instances. Never claims more than "no
// counterexample within budget".
VerificationReport explore_conjecture(int k, std::size_t budget, std::uint64_t seed);

struct Checker {
  std::string id;
  std::function<VerificationReport(const Catalog&, const VerifyOptions&)> run;
};

// All checkers in suite order; explore_conjecture is last and reads k and
// budget from VerifyOptions.
const std::vector<Checker>& checkers();

// Runs "all" or the single checker named `suite`. Throws InputError for
// an unknown id.
std::vector<VerificationReport> run_suite(const Catalog& catalog, const VerifyOptions& opt,
                                          std::string_view suite = "all");

// Re-runs the assertion behind a counterexample. Returns the resulting
// report; a FAIL status means the violation reproduces.
VerificationReport replay(const Counterexample& cx, const VerifyOptions& opt);

// "checker_id STATUS checked=N failed=K skipped=S instances=I", plus
// " elapsed=<ms>ms" when `timing` is set.
std::string format_report_line(const VerificationReport& r, bool timing = false);

// Pairs (M1, M2) sharing only the basepoint "p", drawn from catalog
// entries with 2..4 elements in which the chosen element is a point with
// nonzero connectivity. Deterministic given the seed.
std::vector<std::pair<Polymatroid, Polymatroid>> two_sum_operands(const Catalog& catalog,
                                                                  std::size_t budget,
                                                                  std::uint64_t seed);

}  // namespace pm

#endif  // PM_VERIFY_HPP_
