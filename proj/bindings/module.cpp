#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hodgecone/determinantal.hpp"
#include "hodgecone/report.hpp"

namespace py = pybind11;
using namespace hodgecone;

namespace {

std::string cone_report_json(const std::string& catalog_name, int delta,
                             int embed_codim, const std::string& hrh_base) {
  const auto& entry = catalog_entry(catalog_name);
  ConeSetup setup;
  setup.d = entry.diamond.dim();
  setup.delta = delta;
  setup.embed_codim = embed_codim;
  setup.hrh_base =
      hrh_base.empty() ? entry.hrh_bound : ExtendedLevel::parse(hrh_base);
  return report_json(cone_report(entry, setup));
}

std::string cone_report_json_from_text(const std::string& diamond_json,
                                       int delta, int embed_codim) {
  auto entry = parse_diamond_json(diamond_json, "<python>");
  ConeSetup setup;
  setup.d = entry.diamond.dim();
  setup.delta = delta;
  setup.embed_codim = embed_codim;
  setup.hrh_base = entry.hrh_bound;
  return report_json(cone_report(entry, setup));
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : builtin_catalog()) out.push_back(e.name);
  return out;
}

std::string catalog_diamond_json(const std::string& name) {
  return diamond_to_json(catalog_entry(name));
}

py::dict determinantal_dict(const std::string& family, int m, int n, int p) {
  DeterminantalCase c{parse_family(family), m, n, p};
  c.check();
  auto poly = local_cohomology_poly(c);
  auto cl = codim_and_lcdef(c);
  py::dict out;
  py::dict classes;
  for (const auto& [s, qp] : poly.terms()) {
    py::dict coeffs;
    for (const auto& [e, v] : qp.terms()) coeffs[py::int_(e)] = v;
    classes[py::int_(s)] = coeffs;
  }
  out["classes"] = classes;
  out["codim"] = cl.codim;
  out["lcdef"] = cl.lcdef;
  bool corollaries = c.family == MatrixFamily::Symmetric ? p >= 2 : p >= 1;
  if (corollaries) {
    out["lcdef_gen_pos"] = lcdef_gen_pos(c);
    auto locus = ncci_locus(c);
    out["ncci_locus"] =
        locus.empty ? py::object(py::none()) : py::object(py::int_(locus.stratum));
    py::list range;
    for (const auto& v : c_value_range(c)) range.append(v.str());
    out["c_range"] = range;
  }
  return out;
}

py::list q_binomial_coeffs(int a, int b) {
  auto p = q_binomial(a, b);
  py::list out;
  int deg = b * (a - b);
  for (int e = 0; e <= deg; ++e) out.append(p.coeff(e));
  return out;
}

py::dict verify_all() {
  py::dict out;
  for (const auto& s : run_all_suites()) {
    py::dict row;
    row["checks"] = s.checks;
    py::list fails;
    for (const auto& f : s.failures) fails.append(f);
    row["failures"] = fails;
    out[py::str(s.name)] = row;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact invariants of cone singularities from Hodge diamonds";
  py::register_exception<InputError>(m, "InputError");
  py::register_exception<ValidationError>(m, "ValidationError");

  m.def("catalog_names", &catalog_names, "Names of the builtin diamonds");
  m.def("catalog_diamond_json", &catalog_diamond_json, py::arg("name"),
        "Builtin diamond as a JSON string");
  m.def("cone_report_json", &cone_report_json, py::arg("catalog_name"),
        py::arg("delta") = 0, py::arg("embed_codim") = 1,
        py::arg("hrh_base") = "",
        "Full singularity report for a builtin diamond, as JSON");
  m.def("cone_report_json_from_text", &cone_report_json_from_text,
        py::arg("diamond_json"), py::arg("delta") = 0,
        py::arg("embed_codim") = 1,
        "Full singularity report for a user diamond, as JSON");
  m.def("determinantal", &determinantal_dict, py::arg("family"),
        py::arg("m"), py::arg("n"), py::arg("p"),
        "Local cohomology classes and invariants of a rank stratum");
  m.def("q_binomial", &q_binomial_coeffs, py::arg("a"), py::arg("b"),
        "Coefficient list of the Gaussian binomial");
  m.def("verify_all", &verify_all, "Run every property suite");
}
