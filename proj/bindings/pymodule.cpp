// Python bindings for the main operations: koszul/unshuffle combinatorics,
// file parsing and checking, the build verbs, structural comparison and the
// gallery. Structures travel as serialized text; reports as dicts.

#include "hsa/format.hpp"
#include "hsa/gallery.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hsa;

namespace {

py::dict report_dict(const CheckReport& r) {
  py::dict d;
  d["pass"] = r.pass;
  py::list fails;
  for (const auto& f : r.failures) {
    py::dict jf;
    jf["identity"] = f.identity;
    py::list inputs;
    for (const auto& b : f.inputs) inputs.append(py::make_tuple(b.degree, b.index));
    jf["inputs"] = inputs;
    py::list residual;
    for (const auto& [b, q] : f.residual.terms())
      residual.append(py::make_tuple(py::make_tuple(b.degree, b.index), to_string(q)));
    jf["residual"] = residual;
    fails.append(jf);
  }
  d["failures"] = fails;
  if (!r.note.empty()) d["note"] = r.note;
  return d;
}

} // namespace

PYBIND11_MODULE(_hsa, m) {
  m.doc() = "exact-arithmetic checkers and constructions for graded Lie n-algebras";

  py::register_exception<input_error>(m, "InputError");

  m.def("koszul_sign",
        [](const std::vector<int>& perm, const std::vector<int>& degrees) {
          return koszul_sign(perm, degrees);
        },
        py::arg("perm"), py::arg("degrees"),
        "wedge-convention Koszul sign of a permutation (0-based)");

  m.def("unshuffles", [](int i, int j) { return unshuffles(i, j); }, py::arg("i"), py::arg("j"));

  m.def("canonicalize",
        [](const std::vector<std::pair<int, int>>& tuple) {
          std::vector<BasisElement> t;
          for (auto [d, i] : tuple) t.push_back({d, i});
          auto [canon, sign] = canonicalize(std::move(t));
          std::vector<std::pair<int, int>> out;
          for (const auto& b : canon) out.emplace_back(b.degree, b.index);
          return py::make_tuple(out, sign);
        },
        py::arg("tuple"), "canonical sort of a basis tuple with its wedge sign (0 if it vanishes)");

  m.def("check_text",
        [](const std::string& text) { return report_dict(check_structure(parse_structure(text))); },
        py::arg("text"), "parse a structure file and run its kind's checker");

  m.def("check_morphism_text",
        [](const std::string& morphism, const std::string& source, const std::string& target) {
          StructureFile m_ = parse_structure(morphism);
          StructureFile s = parse_structure(source);
          StructureFile t = parse_structure(target);
          return report_dict(
              check_morphism_file(std::get<MorphismFile>(m_.data), s.lie(), t.lie()));
        },
        py::arg("morphism"), py::arg("source"), py::arg("target"));

  m.def("build_text",
        [](const std::string& op, const std::string& text) {
          return serialize_structure(build_structure(op, parse_structure(text)));
        },
        py::arg("op"), py::arg("text"), "run one build verb on a serialized structure");

  m.def("build_ops", [] { return build_ops(); });

  m.def("compare_text",
        [](const std::string& a, const std::string& b) {
          return serialize_structure(parse_structure(a)) ==
                 serialize_structure(parse_structure(b));
        },
        py::arg("a"), py::arg("b"), "exact structural equality of two serialized structures");

  m.def("roundtrip_text",
        [](const std::string& text) { return serialize_structure(parse_structure(text)); },
        py::arg("text"));

  m.def("gallery_list", [] { return gallery_names(); });
  m.def("gallery_emit", [](const std::string& name) { return gallery_emit(name); },
        py::arg("name"));
}
