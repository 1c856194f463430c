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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>

#include "pm/catalog.hpp"
#include "pm/chains.hpp"
#include "pm/construct.hpp"
#include "pm/core.hpp"
#include "pm/io.hpp"
#include "pm/verify.hpp"

namespace pm::cli {
namespace {

namespace fs = std::filesystem;

void emit(const Polymatroid& p, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << serialize(p);
  } else {
    save(p, path);
  }
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const Polymatroid p = load(file);
  const auto violations = validate(p);
  for (const auto& v : violations) out << describe(p, v) << "\n";
  if (!violations.empty()) return kExitFalse;
  out << "valid " << p.k() << "-polymatroid on " << p.size() << " elements\n";
  return kExitOk;
}

int cmd_info(const std::string& file, std::ostream& out) {
  const Polymatroid p = load_valid(file);
  out << "n = " << p.size() << "\n"
      << "k = " << p.k() << "\n"
      << "r(E) = " << p.rank() << "\n"
      << "elements:\n";
  for (const auto& label : p.labels_of(p.ground())) {
    const ElementClass c = element_kind(p, label);
    out << "  " << label << " " << kind_name(c.kind) << " (rank " << c.rank << ")\n";
  }
  const ConnectivityResult res = is_connected(p);
  out << "connected: " << (res.connected ? "yes" : "no") << "\n";
  if (res.certificate) out << "separation: " << format_subset(p, res.certificate->side) << "\n";
  out << "components:\n";
  for (Mask block : components(p)) out << "  " << format_subset(p, block) << "\n";
  return kExitOk;
}

int cmd_components(const std::string& file, std::ostream& out) {
  const Polymatroid p = load_valid(file);
  for (Mask block : components(p)) out << format_subset(p, block) << "\n";
  return kExitOk;
}

int cmd_chain(const std::string& mfile, const std::string& nfile, std::ostream& out) {
  const Polymatroid m = load_valid(mfile);
  const Polymatroid n = load_valid(nfile);
  try {
    const RemovalChain chain = find_admissible_chain(m, n);
    for (const auto& step : chain.steps) out << format_step(step) << "\n";
    return kExitOk;
  } catch (const TheoremCounterexample& e) {
    nlohmann::ordered_json dump;
    dump["error"] = e.what();
    dump["m"] = to_json(e.m());
    dump["n"] = to_json(e.n());
    out << dump.dump(2) << "\n";
    return kExitFail;
  }
}

int cmd_orderings(const std::string& mfile, const std::string& nfile, bool constrained,
                  bool count_only, std::ostream& out) {
  const Polymatroid m = load_valid(mfile);
  const Polymatroid n = load_valid(nfile);
  if (constrained) {
    if (count_only) {
      out << count_constrained_orderings(m, n) << "\n";
      return kExitOk;
    }
    for (const auto& seq : enumerate_constrained_orderings(m, n)) {
      std::vector<std::string> steps;
      for (const auto& step : seq) steps.push_back(format_step(step));
      out << join(steps, ", ") << "\n";
    }
    return kExitOk;
  }
  const auto orders = enumerate_admissible_orderings(m, n);
  if (count_only) {
    out << orders.size() << "\n";
    return kExitOk;
  }
  for (const auto& order : orders) out << join(order, " ") << "\n";
  return kExitOk;
}

int cmd_natural(const std::string& file, const std::string& output, std::ostream& out) {
  const NaturalMatroid nm = natural_matroid(load_valid(file));
  save(nm.matroid, output);
  for (const auto& [label, copies] : nm.copies) out << label << " -> " << join(copies, ",") << "\n";
  return kExitOk;
}

int cmd_decompose(const std::string& file, const std::vector<std::string>& side,
                  const std::string& prefix, std::ostream& out) {
  const TwoSumDecomposition d = decompose_2_separation(load_valid(file), side);
  save(d.m1, prefix + "_1.json");
  save(d.m2, prefix + "_2.json");
  out << "basepoint " << d.basepoint << "\n"
      << prefix << "_1.json\n"
      << prefix << "_2.json\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int max_n = 5;
  std::uint64_t seed = 42;
  int k = 3;
  std::size_t budget = 1000;
  int exhaustive_max_n = 5;
  std::size_t samples = 2048;
  std::string emit_dir;
  bool timing = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = a.seed;
  opt.conjecture_k = a.k;
  opt.conjecture_budget = a.budget;
  opt.exhaustive_max_n = a.exhaustive_max_n;
  opt.samples = a.samples;
  const bool needs_catalog = a.suite != "explore_conjecture";
  const Catalog catalog = needs_catalog ? generate_catalog(a.max_n, a.seed) : Catalog{};
  const auto reports = run_suite(catalog, opt, a.suite);
  if (!a.emit_dir.empty()) fs::create_directories(a.emit_dir);
  bool failed = false;
  for (const auto& r : reports) {
    out << format_report_line(r, a.timing) << "\n";
    failed = failed || r.status == Status::kFail;
    for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
      const Counterexample& cx = r.counterexamples[i];
      out << "  counterexample " << cx.entry << ": " << cx.witness << "\n";
      if (!a.emit_dir.empty()) {
        const fs::path path =
            fs::path(a.emit_dir) / (r.checker_id + "_" + std::to_string(i) + ".json");
        save_counterexample(cx, path);
        out << "  written " << path.string() << "\n";
      }
    }
  }
  return failed ? kExitFail : kExitOk;
}

int cmd_examples(const std::string& dir, std::ostream& out) {
  fs::create_directories(dir);
  std::vector<std::pair<std::string, Polymatroid>> files = {
      {"counterexample.json", canonical_counterexample()},
      {"line_z.json", single_line("z")},
      {"u23.json", uniform_matroid(2, 3)},
  };
  for (int n = 1; n <= 3; ++n) {
    files.emplace_back("unique_ordering_" + std::to_string(n) + ".json",
                       unique_ordering_family(uniform_matroid(2, 3), n));
  }
  for (const auto& [name, p] : files) {
    const fs::path path = fs::path(dir) / name;
    save(p, path);
    out << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_replay(const std::string& file, std::ostream& out) {
  const Counterexample cx = load_counterexample(file);
  const VerificationReport r = replay(cx, VerifyOptions{});
  out << format_report_line(r) << "\n";
  for (const auto& c : r.counterexamples) out << "  counterexample " << c.entry << ": " << c.witness << "\n";
  return r.status == Status::kFail ? kExitFail : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer k-polymatroids: minors, connectivity, sums and removal chains"};
  app.require_subcommand(1);

  std::string file, file2, output, basepoint;
  std::vector<std::string> del, con, side;
  bool constrained = false, count_only = false;
  VerifyArgs va;

  std::function<int()> action;
  auto add_file = [&](CLI::App* sub, std::string& target, const char* name) {
    sub->add_option(name, target, "pm1 JSON file")->required();
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the polymatroid axioms");
  add_file(validate_cmd, file, "file");
  validate_cmd->callback([&] { action = [&] { return cmd_validate(file, out); }; });

  auto* info_cmd = app.add_subcommand("info", "Summarize a polymatroid");
  add_file(info_cmd, file, "file");
  info_cmd->callback([&] { action = [&] { return cmd_info(file, out); }; });

  auto* comp_cmd = app.add_subcommand("components", "Print the components");
  add_file(comp_cmd, file, "file");
  comp_cmd->callback([&] { action = [&] { return cmd_components(file, out); }; });

  auto* minor_cmd = app.add_subcommand("minor", "Delete and contract elements");
  add_file(minor_cmd, file, "file");
  minor_cmd->add_option("--delete", del, "labels to delete")->delimiter(',');
  minor_cmd->add_option("--contract", con, "labels to contract")->delimiter(',');
  minor_cmd->add_option("-o,--output", output, "output file (stdout if omitted)");
  minor_cmd->callback([&] {
    action = [&] {
      emit(minor(load_valid(file), del, con), output, out);
      return kExitOk;
    };
  });

  auto* chain_cmd = app.add_subcommand("chain", "Connected removal chain from M down to N");
  add_file(chain_cmd, file, "M");
  add_file(chain_cmd, file2, "N");
  chain_cmd->callback([&] { action = [&] { return cmd_chain(file, file2, out); }; });

  auto* ord_cmd = app.add_subcommand("orderings", "Admissible orderings from M down to N");
  add_file(ord_cmd, file, "M");
  add_file(ord_cmd, file2, "N");
  ord_cmd->add_flag("--constrained", constrained, "fix the operation of each step");
  ord_cmd->add_flag("--count-only", count_only, "print only the number of orderings");
  ord_cmd->callback([&] {
    action = [&] { return cmd_orderings(file, file2, constrained, count_only, out); };
  });

  auto* nat_cmd = app.add_subcommand("natural", "Natural matroid of a 2-polymatroid");
  add_file(nat_cmd, file, "file");
  nat_cmd->add_option("-o,--output", output, "output file")->required();
  nat_cmd->callback([&] { action = [&] { return cmd_natural(file, output, out); }; });

  auto* sum_cmd = app.add_subcommand("twosum", "2-sum along a shared basepoint");
  add_file(sum_cmd, file, "M1");
  add_file(sum_cmd, file2, "M2");
  sum_cmd->add_option("--basepoint", basepoint, "shared element")->required();
  sum_cmd->add_option("-o,--output", output, "output file (stdout if omitted)");
  sum_cmd->callback([&] {
    action = [&] {
      emit(two_sum(load_valid(file), load_valid(file2), basepoint), output, out);
      return kExitOk;
    };
  });

  auto* dec_cmd = app.add_subcommand("decompose", "Split along an exact 2-separation");
  add_file(dec_cmd, file, "M");
  dec_cmd->add_option("--side", side, "labels of one side")->delimiter(',')->required();
  dec_cmd->add_option("-o,--output", output, "output prefix")->required();
  dec_cmd->callback([&] { action = [&] { return cmd_decompose(file, side, output, out); }; });

  auto* ver_cmd = app.add_subcommand("verify", "Run the verification suite");
  ver_cmd->add_option("--suite", va.suite, "all or a checker id");
  ver_cmd->add_option("--max-n", va.max_n, "catalog size bound")
      ->check(CLI::Range(1, kMaxCatalogN));
  ver_cmd->add_option("--seed", va.seed, "random seed");
  ver_cmd->add_option("--k", va.k, "k for explore_conjecture")->check(CLI::PositiveNumber);
  ver_cmd->add_option("--budget", va.budget, "instances for explore_conjecture");
  ver_cmd->add_option("--exhaustive-max-n", va.exhaustive_max_n,
                      "largest ground set quantified exhaustively");
  ver_cmd->add_option("--samples", va.samples, "sampled configurations per larger instance");
  ver_cmd->add_option("--emit-dir", va.emit_dir, "directory for counterexample files");
  ver_cmd->add_flag("--timing", va.timing, "append elapsed time to report lines");
  ver_cmd->callback([&] { action = [&] { return cmd_verify(va, out); }; });

  auto* ex_cmd = app.add_subcommand("examples", "Write the canonical example instances");
  ex_cmd->add_option("--emit", output, "output directory")->required();
  ex_cmd->callback([&] { action = [&] { return cmd_examples(output, out); }; });

  auto* replay_cmd = app.add_subcommand("replay", "Re-run a saved counterexample");
  add_file(replay_cmd, file, "file");
  replay_cmd->callback([&] { action = [&] { return cmd_replay(file, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    return action();
  } catch (const TheoremCounterexample& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace pm::cli
