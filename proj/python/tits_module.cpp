#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"
#include "tits/brauer.hpp"
#include "tits/candim.hpp"

namespace py = pybind11;
using namespace tits;

namespace {

CartanType parse_type(const std::string& name) {
  if (name.size() < 2) throw std::domain_error("bad type " + name);
  CartanType t{parse_kind(name.substr(0, 1)), std::stoi(name.substr(1))};
  require_valid_type(t.kind, t.rank);
  return t;
}

py::object loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

nlohmann::json row(const TitsIndex& idx, const Verdict& v) {
  auto j = nlohmann::json::parse(v.to_json());
  j["circled"] = presentation_circled(idx);
  return j;
}

}  // namespace

PYBIND11_MODULE(_tits, m) {
  m.doc() = "Tits indices and their Brauer conditions";
  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

  m.def("cartan_matrix", [](const std::string& type) {
    const auto t = parse_type(type);
    return cartan_matrix(t.kind, t.rank);
  });
  m.def("alpha_in_omega", [](const std::string& type, int i) {
    const auto t = parse_type(type);
    return alpha_in_omega(t.kind, t.rank, i).coords;
  });
  m.def("cocenter_factors", [](const std::string& type) {
    const auto t = parse_type(type);
    return cocenter(t.kind, t.rank).invariant_factors();
  });
  m.def(
      "is_admissible",
      [](const std::string& type, const VertexSet& circled, std::size_t gamma) {
        const auto t = parse_type(type);
        return is_admissible(t.kind, t.rank, standard_gamma(t.kind, t.rank, gamma), circled).admissible;
      },
      py::arg("type"), py::arg("circled"), py::arg("gamma") = 1);
  m.def(
      "label",
      [](const std::string& type, const VertexSet& circled, std::size_t gamma) {
        const auto t = parse_type(type);
        return make_index(t.kind, t.rank, standard_gamma(t.kind, t.rank, gamma), circled).label;
      },
      py::arg("type"), py::arg("circled"), py::arg("gamma") = 1);
  m.def(
      "catalog",
      [](const std::string& type, std::size_t gamma, bool enumerated) {
        const auto t = parse_type(type);
        const auto g = standard_gamma(t.kind, t.rank, gamma);
        const auto c = enumerated ? enumerate(t.kind, t.rank, g) : closed_form(t.kind, t.rank, g);
        return loads(catalog_json(c));
      },
      py::arg("type"), py::arg("gamma") = 1, py::arg("enumerated") = false);
  m.def(
      "check",
      [](const std::string& type, const VertexSet& circled, std::size_t gamma) {
        const auto t = parse_type(type);
        const auto idx = make_index(t.kind, t.rank, standard_gamma(t.kind, t.rank, gamma), circled);
        return loads(row(idx, decide(idx)).dump());
      },
      py::arg("type"), py::arg("circled"), py::arg("gamma") = 1);
  m.def(
      "verdicts",
      [](const std::string& type, std::size_t gamma) {
        const auto t = parse_type(type);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [idx, v] : classified_verdicts(t.kind, t.rank, standard_gamma(t.kind, t.rank, gamma)))
          arr.push_back(row(idx, v));
        return loads(arr.dump());
      },
      py::arg("type"), py::arg("gamma") = 1);
  m.def(
      "max_candim",
      [](const std::string& label, int p) { return CandimTable::load(data_dir() + "/candim.json").max_candim(label, p); },
      py::arg("label"), py::arg("p"));
  m.def("distinguishes", [](const std::string& type) {
    return verify_distinguishing(CandimTable::load(data_dir() + "/candim.json"), type).ok;
  });
  m.def("data_dir", &data_dir);
}
