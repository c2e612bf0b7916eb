// Copyright 2026 The Verity Authors.
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

// Python bindings for the verity library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "verity/bdi.h"
#include "verity/entail.h"
#include "verity/error.h"
#include "verity/model.h"
#include "verity/rational.h"
#include "verity/report.h"
#include "verity/syntax.h"
#include "verity/taxonomy.h"

namespace py = pybind11;

namespace verity {
namespace {

PyObject* g_error_type = nullptr;

EntailOptions options_for(std::optional<std::uint64_t> limit) {
  EntailOptions opts;
  if (limit) opts.max_assignments = *limit;
  return opts;
}

// Accepts a Formula or its textual form.
Formula as_formula(const py::handle& obj, const Schema& schema) {
  if (py::isinstance<Formula>(obj)) return obj.cast<Formula>();
  if (py::isinstance<py::str>(obj)) {
    return parse_formula(obj.cast<std::string>(), schema);
  }
  throw py::type_error("expected Formula or str");
}

Key parse_key_text(const std::string& text) {
  auto open = text.find('(');
  if (open == std::string::npos || open == 0 || text.back() != ')' ||
      open + 2 >= text.size()) {
    throw Error(ErrorCode::kSyntax, "expected Attr(entity), got '" + text + "'");
  }
  return Key{text.substr(0, open), text.substr(open + 1, text.size() - open - 2)};
}

Model model_from_dict(const Schema& schema, const py::dict& world) {
  Model m;
  for (auto [k, v] : world) {
    Key key = parse_key_text(py::str(k).cast<std::string>());
    if (schema.is_numeric(key.attr)) {
      if (py::isinstance<py::bool_>(v)) {
        throw py::type_error("numeric value for " + format_key(key) +
                             " must not be bool");
      }
      std::string text = py::str(v).cast<std::string>();
      Rational r;
      if (!parse_rational(text, &r)) {
        throw Error(ErrorCode::kSyntax, "bad number '" + text + "' for " +
                                            format_key(key));
      }
      m.set(key, r);
    } else {
      m.set(key, py::str(v).cast<std::string>());
    }
  }
  return m;
}

py::dict model_to_dict(const Model& m) {
  py::dict out;
  for (const auto& [k, v] : m.categorical_assignment()) {
    out[py::str(format_key(k))] = v;
  }
  for (const auto& [k, v] : m.numeric_assignment()) {
    out[py::str(format_key(k))] = format_rational(v);
  }
  return out;
}

py::dict labels_to_dict(const LegacyLabels& l) {
  py::dict out;
  out["hallucination"] = l.dusek_hallucination;
  out["omission"] = l.dusek_omission;
  out["dusek"] = dusek_name(l);
  out["ji"] = std::string(ji_name(l.ji));
  return out;
}

Verdict verdict_arg(const std::string& name) {
  auto v = verdict_from_name(name);
  if (!v) throw py::value_error("unknown verdict '" + name + "'");
  return *v;
}

}  // namespace
}  // namespace verity

PYBIND11_MODULE(_verity, m) {
  using namespace verity;
  m.doc() = "Entailment-based classification of data-to-text outputs.";

  g_error_type = PyErr_NewException("verity.VerityError", PyExc_ValueError,
                                    nullptr);
  m.add_object("VerityError", py::handle(g_error_type));
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(g_error_type)(e.what());
      exc.attr("code") = std::string(error_code_name(e.code()));
      exc.attr("line") = e.line();
      exc.attr("column") = e.column();
      PyErr_SetObject(g_error_type, exc.ptr());
    }
  });

  py::class_<Schema>(m, "Schema")
      .def(py::init<>())
      .def_static("parse", &parse_schema, py::arg("text"))
      .def_static("load", &load_schema, py::arg("path"))
      .def("add_categorical", &Schema::add_categorical)
      .def("add_numeric", &Schema::add_numeric)
      .def_property_readonly("categorical_attributes",
                             &Schema::categorical_attributes)
      .def_property_readonly("numeric_attributes", &Schema::numeric_attributes)
      .def("domain", &Schema::domain, py::arg("attr"))
      .def("formula", [](const Schema& s, const std::string& text) {
        return parse_formula(text, s);
      });

  py::class_<Formula>(m, "Formula")
      .def("__str__", &print_formula)
      .def("__repr__",
           [](const Formula& f) { return "Formula('" + print_formula(f) + "')"; })
      .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
      .def("__hash__",
           [](const Formula& f) { return py::hash(py::str(print_formula(f))); })
      .def_property_readonly("depth", &Formula::depth);

  m.def("parse_formula", &parse_formula, py::arg("text"), py::arg("schema"));
  m.def("print_formula", &print_formula, py::arg("formula"));
  m.def(
      "eval",
      [](const Schema& s, const py::dict& world, const py::object& f) {
        return eval(model_from_dict(s, world), as_formula(f, s));
      },
      py::arg("schema"), py::arg("world"), py::arg("formula"));

  py::class_<EntailmentResult>(m, "EntailmentResult")
      .def_readonly("holds", &EntailmentResult::holds)
      .def_property_readonly("witness",
                             [](const EntailmentResult& r) -> py::object {
                               if (!r.witness) return py::none();
                               return model_to_dict(*r.witness);
                             })
      .def("__bool__", [](const EntailmentResult& r) { return r.holds; });

  m.def(
      "satisfiable",
      [](const Schema& s, const py::object& f, std::optional<std::uint64_t> limit) {
        return satisfiable(s, as_formula(f, s), options_for(limit));
      },
      py::arg("schema"), py::arg("formula"), py::arg("limit") = py::none());
  m.def(
      "entails",
      [](const Schema& s, const py::object& a, const py::object& b,
         std::optional<std::uint64_t> limit) {
        return entails(s, as_formula(a, s), as_formula(b, s), options_for(limit));
      },
      py::arg("schema"), py::arg("premise"), py::arg("conclusion"),
      py::arg("limit") = py::none());
  m.def(
      "is_tautology",
      [](const Schema& s, const py::object& f, std::optional<std::uint64_t> limit) {
        return is_tautology(s, as_formula(f, s), options_for(limit));
      },
      py::arg("schema"), py::arg("formula"), py::arg("limit") = py::none());
  m.def(
      "is_contradiction",
      [](const Schema& s, const py::object& f, std::optional<std::uint64_t> limit) {
        return is_contradiction(s, as_formula(f, s), options_for(limit));
      },
      py::arg("schema"), py::arg("formula"), py::arg("limit") = py::none());

  m.attr("VERDICTS") = [] {
    py::list names;
    for (Verdict v : kAllVerdicts) names.append(std::string(verdict_name(v)));
    return py::tuple(names);
  }();
  m.def(
      "classify",
      [](const Schema& s, const py::object& in, const py::object& out,
         std::optional<std::uint64_t> limit) {
        return std::string(verdict_name(
            classify(s, as_formula(in, s), as_formula(out, s), options_for(limit))));
      },
      py::arg("schema"), py::arg("input"), py::arg("output"),
      py::arg("limit") = py::none());
  m.def(
      "legacy_labels",
      [](const std::string& verdict) {
        return labels_to_dict(legacy_labels(verdict_arg(verdict)));
      },
      py::arg("verdict"));

  py::class_<MisleadingFinding>(m, "Finding")
      .def_property_readonly("kind",
                             [](const MisleadingFinding& f) {
                               return f.kind == FindingKind::kWithholding
                                          ? "withholding"
                                          : "half-truth";
                             })
      .def_readonly("proposition", &MisleadingFinding::proposition)
      .def_readonly("inference", &MisleadingFinding::inference)
      .def("__str__", &format_finding)
      .def("__repr__", [](const MisleadingFinding& f) {
        return "Finding('" + format_finding(f) + "')";
      });

  py::class_<Scenario>(m, "Scenario")
      .def_static(
          "load",
          [](const std::string& path, std::optional<std::uint64_t> limit) {
            return load_scenario(path, nullptr, options_for(limit));
          },
          py::arg("path"), py::arg("limit") = py::none())
      .def_static(
          "parse",
          [](const std::string& json, const std::string& base_dir,
             std::optional<std::uint64_t> limit) {
            return parse_scenario(json, base_dir, nullptr, options_for(limit));
          },
          py::arg("json"), py::arg("base_dir") = ".",
          py::arg("limit") = py::none())
      .def_property_readonly("schema", &Scenario::schema)
      .def_property_readonly("communicated", &Scenario::communicated)
      .def_property_readonly("hearer_beliefs", &Scenario::hearer_beliefs)
      .def_property_readonly("norms", &Scenario::norms)
      .def_property_readonly("world",
                             [](const Scenario& s) { return model_to_dict(s.world()); })
      .def("detect_withholding",
           [](const Scenario& s, const py::object& q) {
             return detect_withholding(s, as_formula(q, s.schema()));
           })
      .def("detect_half_truth",
           [](const Scenario& s, const py::object& p, const py::object& r) {
             return detect_half_truth(s, as_formula(p, s.schema()),
                                      as_formula(r, s.schema()));
           })
      .def(
          "scan",
          [](const Scenario& s, const std::vector<py::object>& candidates,
             std::uint64_t max_pairs) {
            std::vector<Formula> fs;
            for (const auto& c : candidates) fs.push_back(as_formula(c, s.schema()));
            ScanOptions opts;
            opts.max_pairs = max_pairs;
            return scan_misleading(s, fs, opts);
          },
          py::arg("candidates") = std::vector<py::object>{},
          py::arg("max_pairs") = ScanOptions{}.max_pairs);

  py::class_<CorpusRecord>(m, "CorpusRecord")
      .def_readonly("id", &CorpusRecord::id)
      .def_readonly("input", &CorpusRecord::input)
      .def_readonly("output", &CorpusRecord::output)
      .def_readonly("line", &CorpusRecord::source_line)
      .def_property_readonly("gold", [](const CorpusRecord& r) -> py::object {
        if (!r.gold) return py::none();
        return py::str(std::string(verdict_name(*r.gold)));
      });

  py::class_<Corpus>(m, "Corpus")
      .def_readonly("records", &Corpus::records)
      .def_property_readonly("errors", [](const Corpus& c) {
        py::list out;
        for (const auto& e : c.errors) out.append(py::make_tuple(e.line_no, e.message));
        return out;
      });
  m.def(
      "ingest_corpus",
      [](const std::string& text, const Schema& s) {
        std::istringstream in(text);
        return ingest_corpus(in, s);
      },
      py::arg("text"), py::arg("schema"));

  py::class_<CategoryCounts>(m, "CategoryCounts")
      .def(py::init<>())
      .def_property_readonly("counts",
                             [](const CategoryCounts& c) {
                               py::dict out;
                               for (Verdict v : kAllVerdicts) {
                                 out[py::str(std::string(verdict_name(v)))] = c.count(v);
                               }
                               return out;
                             })
      .def("frequency",
           [](const CategoryCounts& c, const std::string& verdict) {
             return c.frequency(verdict_arg(verdict));
           })
      .def_readonly("total", &CategoryCounts::total)
      .def_readonly("resource_limited", &CategoryCounts::resource_limited)
      .def_readonly("parse_failures", &CategoryCounts::parse_failures)
      .def_readonly("gold_total", &CategoryCounts::gold_total)
      .def_readonly("gold_matched", &CategoryCounts::gold_matched)
      .def("__add__", [](const CategoryCounts& a, const CategoryCounts& b) { return a + b; })
      .def("__eq__", [](const CategoryCounts& a, const CategoryCounts& b) { return a == b; });

  m.def(
      "tally",
      [](const Schema& s, const Corpus& corpus, std::optional<std::uint64_t> limit,
         unsigned jobs) {
        py::gil_scoped_release release;
        return tally(s, corpus, options_for(limit), jobs);
      },
      py::arg("schema"), py::arg("corpus"), py::arg("limit") = py::none(),
      py::arg("jobs") = 1);
  m.def(
      "render_report",
      [](const CategoryCounts& c, const std::string& format) {
        return render_report(c, format);
      },
      py::arg("counts"), py::arg("format") = "text");
}
