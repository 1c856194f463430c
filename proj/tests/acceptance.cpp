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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "pm/catalog.hpp"
#include "pm/chains.hpp"
#include "pm/construct.hpp"
#include "pm/core.hpp"
#include "pm/verify.hpp"

using namespace pm;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

bool all_pass(const std::vector<VerificationReport>& reports, std::string& detail) {
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.status == Status::kPass && r.failed == 0 && r.checked > 0;
    detail += (detail.empty() ? "" : "; ") + r.checker_id + " " +
              std::string(status_name(r.status)) + " checked=" + std::to_string(r.checked) +
              " skipped=" + std::to_string(r.skipped);
  }
  return ok;
}

VerificationReport run_one(const Catalog& catalog, const VerifyOptions& opt,
                           const std::string& id) {
  return run_suite(catalog, opt, id).front();
}

Outcome criterion_counterexample() {
  const auto start = std::chrono::steady_clock::now();
  const Polymatroid m = canonical_counterexample();
  bool ok = validate(m).empty() && is_connected(m).connected;
  for (const Polymatroid& q : {deletion(m, LabelSet{"y"}), contraction(m, LabelSet{"y"})}) {
    const ConnectivityResult r = is_connected(q);
    ok = ok && !r.connected && r.certificate.has_value();
  }
  const Polymatroid n = single_line("z");
  const RemovalChain chain = find_admissible_chain(m, n);
  Polymatroid cur = m;
  for (std::size_t i = 0; i < chain.steps.size(); ++i) {
    cur = apply_step(cur, chain.steps[i]);
    ok = ok && connected(cur) && chain.intermediates_connected[i];
  }
  ok = ok && equals(cur, n) && !chain.steps.empty();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  ok = ok && ms < 1000;
  std::string steps;
  for (const auto& s : chain.steps) steps += (steps.empty() ? "" : ", ") + format_step(s);
  return {ok, "chain: " + steps + "; " + std::to_string(ms) + "ms"};
}

Outcome criterion_main_theorem(const Catalog& catalog, const VerifyOptions& opt) {
  std::string detail;
  const bool ok = all_pass({run_one(catalog, opt, "check_main_theorem")}, detail);
  return {ok, detail};
}

Outcome criterion_hall(const Catalog& catalog, const VerifyOptions& opt) {
  const VerificationReport r = run_one(catalog, opt, "check_hall_splitter");
  std::size_t expected = 0;
  for (const auto& e : catalog) expected += (e.poly.size() >= 2 && connected(e.poly)) ? 1 : 0;
  std::string detail;
  const bool ok = all_pass({r}, detail) && r.checked == expected;
  return {ok, detail + " (connected entries with >= 2 elements: " + std::to_string(expected) + ")"};
}

Outcome criterion_lemmas(const Catalog& catalog, const VerifyOptions& opt) {
  std::vector<VerificationReport> reports;
  for (const char* id :
       {"check_local_conn_monotone", "check_lambda_minor", "check_union_connected",
        "check_modular_identity", "check_lambda_zero_equal", "check_contraction_component",
        "check_small_separation_removal", "check_two_sum_lemmas", "check_natural_matroid"}) {
    reports.push_back(run_one(catalog, opt, id));
  }
  std::string detail;
  const bool ok = all_pass(reports, detail);
  return {ok, detail};
}

Outcome criterion_uniqueness(const Catalog& catalog, const VerifyOptions& opt) {
  std::string detail;
  bool ok = all_pass({run_one(catalog, opt, "check_uniqueness_theorem")}, detail);
  const Polymatroid n = uniform_matroid(2, 3);
  for (int lines = 1; lines <= 3; ++lines) {
    const Polymatroid m = unique_ordering_family(n, lines);
    const auto orders = enumerate_admissible_orderings(m, n);
    const auto count = count_constrained_orderings(m, n);
    ok = ok && orders.size() == 1 && (lines >= 2 ? count >= 2 : count == 1);
    detail += "; family n=" + std::to_string(lines) + ": admissible=" +
              std::to_string(orders.size()) + " constrained=" + std::to_string(count);
  }
  const Polymatroid m2 = unique_ordering_family(n, 2);
  ok = ok && equals(deletion(deletion(m2, LabelSet{"f1"}), LabelSet{"f2"}),
                    deletion(contraction(m2, LabelSet{"f1"}), LabelSet{"f2"}));
  return {ok, detail};
}

Outcome criterion_constructions(const Catalog& catalog, const VerifyOptions& opt) {
  std::string detail;
  bool ok = all_pass({run_one(catalog, opt, "check_constructions"),
                      run_one(catalog, opt, "check_natural_matroid")},
                     detail);
  std::size_t compressed = 0;
  for (const auto& e : catalog) {
    if (e.poly.k() > 2) continue;
    ok = ok && equals(compress(compression_of(natural_matroid(e.poly))), e.poly);
    ++compressed;
  }
  return {ok, detail + "; compress(natural) = P on " + std::to_string(compressed) + " entries"};
}

Outcome criterion_explorer(const Catalog& catalog, const VerifyOptions& opt) {
  const VerificationReport k3 = explore_conjecture(3, 1000, opt.seed);
  const VerificationReport again = explore_conjecture(3, 1000, opt.seed);
  const VerificationReport k2 = explore_conjecture(2, 1000, opt.seed);
  const VerificationReport main = run_one(catalog, opt, "check_main_theorem");
  const bool ok = k3.status == Status::kPass && k3.counterexamples.empty() &&
                  k3.instances >= 1000 && format_report_line(k3) == format_report_line(again) &&
                  k2.status == Status::kPass && main.status == Status::kPass;
  return {ok, "k=3: " + format_report_line(k3) + "; k=2: " + format_report_line(k2)};
}

Outcome criterion_determinism() {
  auto cli = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::to_string(code) + "\n" + out.str();
  };
  const fs::path dir = fs::temp_directory_path() / "pm_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  cli({"examples", "--emit", dir.string()});
  const std::vector<std::string> verify = {"verify", "--suite", "all", "--seed", "42"};
  const std::vector<std::string> chain = {"chain", (dir / "counterexample.json").string(),
                                          (dir / "line_z.json").string()};
  const std::vector<std::string> orders = {"orderings", (dir / "unique_ordering_3.json").string(),
                                           (dir / "u23.json").string(), "--constrained"};
  const std::string v1 = cli(verify), v2 = cli(verify);
  const bool ok = v1 == v2 && v1.rfind("0\n", 0) == 0 && cli(chain) == cli(chain) &&
                  cli(orders) == cli(orders);
  fs::remove_all(dir);
  return {ok, "verify report " + std::to_string(v1.size()) + " bytes, identical across runs"};
}

}  // namespace

int main() {
  const VerifyOptions opt;  // seed 42, exhaustive for n <= 5
  const Catalog catalog = generate_catalog(5, opt.seed);
  struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "counterexample reproduction", criterion_counterexample},
      {2, "main theorem over the catalog", [&] { return criterion_main_theorem(catalog, opt); }},
      {3, "two removable elements", [&] { return criterion_hall(catalog, opt); }},
      {4, "lemma suite", [&] { return criterion_lemmas(catalog, opt); }},
      {5, "ordering uniqueness", [&] { return criterion_uniqueness(catalog, opt); }},
      {6, "construction identities", [&] { return criterion_constructions(catalog, opt); }},
      {7, "conjecture explorer", [&] { return criterion_explorer(catalog, opt); }},
      {8, "determinism", criterion_determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::cout << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.title
              << " | " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
