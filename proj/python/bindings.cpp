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

// Python bindings. Subsets cross the boundary as lists of labels.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pm/catalog.hpp"
#include "pm/chains.hpp"
#include "pm/construct.hpp"
#include "pm/core.hpp"
#include "pm/io.hpp"
#include "pm/verify.hpp"

namespace py = pybind11;
using namespace pm;

namespace {

std::vector<LabelSet> blocks_of(const Polymatroid& p, const std::vector<Mask>& masks) {
  std::vector<LabelSet> out;
  for (Mask m : masks) out.push_back(p.labels_of(m));
  return out;
}

std::vector<std::string> report_lines(const std::vector<VerificationReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) out.push_back(format_report_line(r));
  return out;
}

std::pair<std::string, std::string> step_pair(const RemovalStep& s) {
  return {std::string(op_name(s.op)), s.element};
}

}  // namespace

PYBIND11_MODULE(_pmkit, m) {
  m.doc() = "Integer k-polymatroids: minors, connectivity, sums and removal chains";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<StructureError>(m, "StructureError", error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<TheoremCounterexample>(m, "TheoremCounterexample", error.ptr());

  py::class_<Polymatroid>(m, "Polymatroid")
      .def(py::init<std::vector<std::string>, int, std::vector<int>>(), py::arg("labels"),
           py::arg("k"), py::arg("ranks"))
      .def_property_readonly("labels", &Polymatroid::labels)
      .def_property_readonly("k", &Polymatroid::k)
      .def("__len__", &Polymatroid::size)
      .def("rank", [](const Polymatroid& p, const LabelSet& x) { return rank(p, x); },
           py::arg("subset"))
      .def("table", [](const Polymatroid& p) {
        return std::vector<int>(p.table().begin(), p.table().end());
      })
      .def("__eq__", [](const Polymatroid& a, const Polymatroid& b) { return equals(a, b); })
      .def("__repr__", [](const Polymatroid& p) {
        return "<Polymatroid k=" + std::to_string(p.k()) + " on " +
               format_labels(p.labels_of(p.ground())) + ">";
      });

  m.def("validate", [](const Polymatroid& p) {
    std::vector<std::string> out;
    for (const auto& v : validate(p)) out.push_back(describe(p, v));
    return out;
  });
  m.def("deletion", py::overload_cast<const Polymatroid&, const LabelSet&>(&deletion));
  m.def("contraction", py::overload_cast<const Polymatroid&, const LabelSet&>(&contraction));
  m.def("restriction", py::overload_cast<const Polymatroid&, const LabelSet&>(&restriction));
  m.def("minor", py::overload_cast<const Polymatroid&, const LabelSet&, const LabelSet&>(&minor),
        py::arg("p"), py::arg("delete"), py::arg("contract"));
  m.def("connectivity", py::overload_cast<const Polymatroid&, const LabelSet&>(&connectivity));
  m.def("local_connectivity",
        py::overload_cast<const Polymatroid&, const LabelSet&, const LabelSet&>(
            &local_connectivity));
  m.def("is_connected", [](const Polymatroid& p) {
    const ConnectivityResult r = is_connected(p);
    std::optional<LabelSet> side;
    if (r.certificate) side = p.labels_of(r.certificate->side);
    return std::make_pair(r.connected, side);
  });
  m.def("components", [](const Polymatroid& p) { return blocks_of(p, components(p)); });
  m.def("equals", &equals);

  m.def("direct_sum", &direct_sum);
  m.def("parallel_connection", &parallel_connection);
  m.def("two_sum", &two_sum);
  m.def("decompose_2_separation", [](const Polymatroid& p, const LabelSet& side) {
    const TwoSumDecomposition d = decompose_2_separation(p, side);
    return py::make_tuple(d.m1, d.m2, d.basepoint);
  });
  m.def("natural_matroid", [](const Polymatroid& p) {
    const NaturalMatroid nm = natural_matroid(p);
    return std::make_pair(nm.matroid, nm.copies);
  });
  m.def("compress",
        [](const Polymatroid& matroid, const std::vector<std::pair<std::string, LabelSet>>& blocks) {
          CompressionMap cm{matroid, {}};
          for (const auto& [label, members] : blocks) cm.blocks.push_back({label, members});
          return compress(cm);
        });
  m.def("canonical_counterexample", &canonical_counterexample);
  m.def("single_line", &single_line);
  m.def("uniform_matroid", &uniform_matroid, py::arg("r"), py::arg("m"),
        py::arg("labels") = std::vector<std::string>{});
  m.def("unique_ordering_family", &unique_ordering_family, py::arg("n_matroid"), py::arg("n"),
        py::arg("anchor") = std::string{});

  m.def("has_labeled_minor", [](const Polymatroid& p, const Polymatroid& n) {
    std::optional<std::pair<LabelSet, LabelSet>> out;
    if (auto w = has_labeled_minor(p, n)) out = std::make_pair(w->deleted, w->contracted);
    return out;
  });
  m.def("find_removal_step",
        [](const Polymatroid& p, const Polymatroid& n) { return step_pair(find_removal_step(p, n)); });
  m.def("find_admissible_chain", [](const Polymatroid& p, const Polymatroid& n) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& s : find_admissible_chain(p, n).steps) out.push_back(step_pair(s));
    return out;
  });
  m.def("enumerate_admissible_orderings", &enumerate_admissible_orderings);
  m.def("count_constrained_orderings", &count_constrained_orderings);

  m.def("to_json", [](const Polymatroid& p) { return serialize(p); });
  m.def("from_json", [](const std::string& text) { return parse(text); });

  m.def(
      "verify",
      [](const std::string& suite, int max_n, std::uint64_t seed, int k, std::size_t budget) {
        VerifyOptions opt;
        opt.seed = seed;
        opt.conjecture_k = k;
        opt.conjecture_budget = budget;
        return report_lines(run_suite(generate_catalog(max_n, seed), opt, suite));
      },
      py::arg("suite") = "all", py::arg("max_n") = 5, py::arg("seed") = 42, py::arg("k") = 3,
      py::arg("budget") = 1000);
  m.def(
      "explore_conjecture",
      [](int k, std::size_t budget, std::uint64_t seed) {
        return format_report_line(explore_conjecture(k, budget, seed));
      },
      py::arg("k") = 3, py::arg("budget") = 1000, py::arg("seed") = 42);
}
