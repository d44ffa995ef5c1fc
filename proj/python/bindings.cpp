#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lojinf/analysis.hpp"
#include "lojinf/errors.hpp"
#include "lojinf/macaulay.hpp"
#include "lojinf/numeric.hpp"
#include "lojinf/parser.hpp"
#include "lojinf/pgcurve.hpp"
#include "lojinf/report.hpp"

namespace py = pybind11;
using namespace lojinf;

namespace {

AnalysisOptions options_for(std::uint64_t seed) {
  AnalysisOptions o;
  o.seed = seed;
  return o;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("invalid rational '" + text + "'");
  q.canonicalize();
  return q;
}

std::string analyze_json(const std::string& text, std::uint64_t seed) {
  const PolyMap f = parse_system(text);
  return to_json(analyze(f, options_for(seed))).dump();
}

py::tuple resultant_of(const std::string& text) {
  const SystemFile file = parse_system_file(text);
  const ResultantValue r = resultant(FormSystem(file.polynomials));
  return py::make_tuple(r.value.get_str(), std::string(to_string(r.method)));
}

std::string pg_slice_json(const std::string& text, const std::vector<std::string>& w, std::uint64_t seed) {
  const PolyMap f = parse_system(text);
  std::vector<Rational> point;
  for (const auto& x : w) point.push_back(parse_rational(x));
  const StarCertificate cert = choose_g(f, seed);
  auto j = to_json(pg_slice(f, cert.g, point));
  j["certificate"] = to_json(cert);
  return j.dump();
}

std::string verify_json(const std::string& text, std::uint64_t seed, const std::vector<double>& radii,
                        std::size_t samples) {
  const PolyMap f = parse_system(text);
  const AnalysisReport report = analyze(f, options_for(seed));
  nlohmann::ordered_json j;
  j["analysis"] = to_json(report);
  if (!report.hypothesis_certified) return j.dump();
  GrowthCheckOptions growth_options;
  growth_options.search.budget = samples;
  j["growth"] = to_json(verify_growth(f, report, radii, seed, std::nullopt, growth_options));
  RootEscapeVerdict escape;
  if (report.delta0 == 0) {
    escape.verdict = Verdict::skipped;
    escape.note = "delta0 = 0";
  } else {
    escape = verify_root_escape(pg_full(f, report.certificate->g).poly, report.delta0, seed);
  }
  j["root_escape"] = to_json(escape);
  return j.dump();
}

py::tuple sphere_minimum(const std::string& text, double radius, std::uint64_t seed, std::size_t budget) {
  SphereSearchOptions o;
  o.budget = budget;
  const SphereMinimum m = min_on_sphere(parse_system(text), radius, seed, o);
  return py::make_tuple(m.value, m.witness);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact resultants, P_G curves and growth exponents of polynomial maps";

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<ArityError>(m, "ArityError", error.ptr());
  py::register_exception<CertificationError>(m, "CertificationError", error.ptr());
  py::register_exception<MatrixSizeError>(m, "MatrixSizeError", error.ptr());
  py::register_exception<GridCapError>(m, "GridCapError", error.ptr());
  py::register_exception<InconsistencyError>(m, "InconsistencyError", error.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", error.ptr());

  m.def("analyze_json", &analyze_json, py::arg("text"), py::arg("seed") = 0);
  m.def("resultant", &resultant_of, py::arg("text"),
        "Exact resultant of the forms in a system file, as (decimal string, method).");
  m.def("pg_slice_json", &pg_slice_json, py::arg("text"), py::arg("w"), py::arg("seed") = 0);
  m.def("verify_json", &verify_json, py::arg("text"), py::arg("seed") = 0,
        py::arg("radii") = std::vector<double>{1e1, 1e2, 1e3, 1e4}, py::arg("samples") = 2000);
  m.def("roots", [](const std::vector<Complex>& c) { return roots_univariate(c); }, py::arg("coefficients"),
        "Roots of sum c[k] T^k, coefficients in ascending order.");
  m.def("min_on_sphere", &sphere_minimum, py::arg("text"), py::arg("radius"), py::arg("seed") = 0,
        py::arg("budget") = 2000);
}
