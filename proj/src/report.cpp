#include "lojinf/report.hpp"

#include <sstream>

namespace lojinf {

namespace {

constexpr const char* kNotApplicable = "not applicable";

template <typename Int>
std::string dec(Int v) {
  return std::to_string(v);
}

nlohmann::ordered_json rationals(std::span<const Rational> values) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

std::string join(std::span<const std::string> items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const StarCertificate& c) {
  nlohmann::ordered_json j;
  j["G"] = to_string(c.g);
  j["G_coefficients"] = rationals(c.g.coefficients());
  j["s0"] = c.s0.get_str();
  j["witness"] = c.witness.value.get_str();
  j["witness_method"] = to_string(c.witness.method);
  j["implies_finiteness"] = c.implies_finiteness;
  return j;
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  nlohmann::ordered_json j;
  j["variables"] = r.variables;
  auto degrees = nlohmann::ordered_json::array();
  for (unsigned d : r.degrees) degrees.push_back(dec(d));
  j["degrees"] = degrees;
  j["bezout"] = dec(r.bezout);
  j["hypothesis_certified"] = r.hypothesis_certified;
  j["classification"] = to_string(r.classification);

  if (!r.hypothesis_certified) {
    for (const char* key : {"d_of_F", "mu", "delta0", "thm11_exponent", "thm12_exponent",
                            "kollar_exponent", "proper_at_0", "algebraically_dependent", "G_used",
                            "certificate"})
      j[key] = kNotApplicable;
    j["generic_w_draws"] = nlohmann::ordered_json::array();
    j["diagnostic"] = r.diagnostic;
    return j;
  }

  j["d_of_F"] = dec(r.d_of_f);
  j["mu"] = dec(r.mu);
  j["delta0"] = dec(r.delta0);
  j["thm11_exponent"] = dec(r.exponents.thm11);
  j["thm12_exponent"] = dec(r.exponents.thm12);
  j["kollar_exponent"] = dec(r.exponents.kollar);
  j["proper_at_0"] = r.proper_at_0;
  j["algebraically_dependent"] = r.algebraically_dependent;
  j["G_used"] = to_string(r.certificate->g);
  j["certificate"] = to_json(*r.certificate);
  auto draws = nlohmann::ordered_json::array();
  for (const auto& d : r.generic_w_draws)
    draws.push_back({{"w", rationals(d.w)}, {"deg_T", dec(d.degree)}});
  j["generic_w_draws"] = draws;
  if (r.image_equation) j["image_equation"] = *r.image_equation;
  return j;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream out;
  std::vector<std::string> degrees;
  for (unsigned d : r.degrees) degrees.push_back(std::to_string(d));
  out << "variables:            " << join(r.variables, " ") << '\n';
  out << "degrees:              " << join(degrees, " ") << '\n';
  out << "bezout (prod d_i):    " << r.bezout << '\n';
  if (!r.hypothesis_certified) {
    out << "hypothesis:           not certified\n";
    out << "diagnostic:           " << r.diagnostic << '\n';
    out << "exponents:            " << kNotApplicable << '\n';
    return out.str();
  }
  const auto& c = *r.certificate;
  out << "hypothesis:           certified (G = " << to_string(c.g) << ", s0 = " << c.s0.get_str()
      << ", witness = " << c.witness.value.get_str() << ")\n";
  out << "d(F):                 " << r.d_of_f << '\n';
  out << "mu:                   " << r.mu << '\n';
  out << "delta0:               " << r.delta0 << '\n';
  out << "thm11 exponent:       " << r.exponents.thm11 << '\n';
  out << "thm12 exponent:       " << r.exponents.thm12 << '\n';
  out << "kollar exponent:      " << r.exponents.kollar << '\n';
  out << "classification:       " << to_string(r.classification) << '\n';
  if (r.image_equation) out << "image equation:       " << *r.image_equation << " = 0\n";
  return out.str();
}

nlohmann::ordered_json to_json(const PGSlice& s) {
  nlohmann::ordered_json j;
  j["w"] = rationals(s.w);
  const std::vector<std::string> t{"T"};
  j["poly_in_T"] = to_string(s.poly_in_t, t);
  j["deg_T"] = s.identically_zero() ? std::string("-inf") : dec(s.degree().value());
  j["degree_bound_used"] = dec(s.degree_bound_used);
  j["nodes"] = rationals(s.nodes);
  return j;
}

nlohmann::ordered_json to_json(const GrowthProfile& p) {
  nlohmann::ordered_json j;
  auto points = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < p.radii.size(); ++i) points.push_back({p.radii[i], p.min_estimates[i]});
  j["points"] = points;
  j["excluded"] = p.excluded;
  j["fitted_exponent"] = p.fitted_exponent;
  j["empirical_C"] = p.empirical_c;
  j["flat"] = p.flat;
  return j;
}

nlohmann::ordered_json to_json(const GrowthVerdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(v.verdict);
  j["thm11_exponent"] = dec(v.thm11_bound);
  j["thm12_exponent"] = dec(v.thm12_bound);
  if (v.expected_slope) j["expected_slope"] = *v.expected_slope;
  j["profile"] = to_json(v.profile);
  j["note"] = v.note;
  return j;
}

nlohmann::ordered_json to_json(const RootEscapeVerdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(v.verdict);
  j["delta"] = dec(v.delta);
  auto points = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < v.profile.w_magnitudes.size(); ++i)
    points.push_back({v.profile.w_magnitudes[i], v.profile.max_root_t[i]});
  j["points"] = points;
  j["fitted_exponent"] = v.profile.fitted_exponent;
  j["note"] = v.note;
  return j;
}

}  // namespace lojinf
