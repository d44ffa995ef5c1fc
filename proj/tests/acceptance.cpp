// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>

#include "lojinf/analysis.hpp"
#include "lojinf/errors.hpp"
#include "lojinf/macaulay.hpp"
#include "lojinf/numeric.hpp"
#include "lojinf/parser.hpp"
#include "lojinf/pgcurve.hpp"
#include "oracles.hpp"

using namespace lojinf;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

const char* const kIdentity = "vars: z1 z2\nF1 = z1\nF2 = z2\n";
const char* const kSquares = "vars: z1 z2\nF1 = z1^2\nF2 = z2^2\n";
const char* const kHyperbola = "vars: z1 z2\nF1 = z1\nF2 = z1*z2 - 1\n";
const char* const kCusp = "vars: z1 z2\nF1 = z1\nF2 = z1*z2^2 + z2\n";
const char* const kTableSources[] = {kIdentity, kSquares, kHyperbola, kCusp};
const char* const kTableNames[] = {"identity", "squares", "hyperbola", "cusp"};

MultiPoly random_form(std::mt19937_64& rng, std::size_t arity, unsigned degree) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  MultiPoly f(arity);
  while (f.is_zero())
    for (const auto& e : monomials_of_degree(arity, degree)) f.add_term(e, coeff(rng));
  return f;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Rational power(const Rational& base, std::uint64_t exponent) {
  Rational r = 1;
  for (std::uint64_t k = 0; k < exponent; ++k) r *= base;
  return r;
}

// 1. Exact invariant table, with the Newton fiber count as an independent oracle.
Outcome invariant_table() {
  struct Row {
    std::uint64_t d, mu, delta0;
    std::int64_t thm11, thm12;
  };
  const Row expected[] = {{1, 1, 0, 0, 1}, {4, 4, 0, 0, 2}, {1, 0, 1, -1, -1}, {2, 1, 1, -1, -1}};
  Outcome o;
  for (int k = 0; k < 4; ++k) {
    const auto start = std::chrono::steady_clock::now();
    const PolyMap f = parse_system(kTableSources[k]);
    const AnalysisReport r = analyze(f);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string name = kTableNames[k];
    o.require(r.hypothesis_certified, name + ": not certified");
    o.require(r.d_of_f == expected[k].d, name + ": d(F)");
    o.require(r.mu == expected[k].mu, name + ": mu");
    o.require(r.delta0 == expected[k].delta0, name + ": delta0");
    o.require(r.exponents.thm11 == expected[k].thm11, name + ": thm11");
    o.require(r.exponents.thm12 == expected[k].thm12, name + ": thm12");
    o.require(seconds < 10.0, name + ": slower than 10 s");

    const std::vector<oracle::Complex> generic{{0.7, 0.3}, {-0.4, 1.1}};
    const std::vector<oracle::Complex> small{{1e-6, 2e-7}, {-3e-7, 8e-7}};
    o.require(oracle::newton_fiber(f, generic, 1e6, 400, 1).size() == r.d_of_f, name + ": Newton d(F)");
    o.require(oracle::newton_fiber(f, small, 10.0, 400, 2).size() == r.mu, name + ": Newton mu");
  }
  return o;
}

// 2. Macaulay against Sylvester on binary forms.
Outcome sylvester_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<unsigned> deg(1, 4);
  std::map<std::pair<unsigned, unsigned>, int> sign;
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned a = deg(rng), b = deg(rng);
    const MultiPoly p = random_form(rng, 2, a), q = random_form(rng, 2, b);
    const Rational mac = resultant(FormSystem({p, q})).value;
    const Rational syl = sylvester_oracle(p, q);
    if (syl == 0) {
      o.require(mac == 0, "Macaulay non-zero where Sylvester vanishes");
      continue;
    }
    const int s = mac == syl ? 1 : (mac == -syl ? -1 : 0);
    o.require(s != 0, "values differ beyond sign at degrees " + std::to_string(a) + "," + std::to_string(b));
    auto [it, fresh] = sign.try_emplace({a, b}, s);
    o.require(fresh || it->second == s, "inconsistent sign");
  }
  return o;
}

// 3. Res(..., lambda H_i, ...) = lambda^{prod_{j != i} d_j} Res(...).
Outcome homogeneity() {
  Outcome o;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<unsigned> deg(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<MultiPoly> forms;
    std::vector<unsigned> d;
    for (int i = 0; i < 3; ++i) {
      d.push_back(deg(rng));
      forms.push_back(random_form(rng, 3, d.back()));
    }
    const Rational base = resultant(FormSystem(forms)).value;
    for (std::size_t i = 0; i < 3; ++i) {
      Rational lambda = random_rational(rng);
      if (lambda == 0) lambda = Rational(-7, 3);
      std::vector<MultiPoly> scaled = forms;
      scaled[i] = scalar_multiply(lambda, scaled[i]);
      std::uint64_t e = 1;
      for (std::size_t j = 0; j < 3; ++j)
        if (j != i) e *= d[j];
      o.require(resultant(FormSystem(scaled)).value == power(lambda, e) * base,
                "scaling law fails in slot " + std::to_string(i));
    }
  }
  return o;
}

// 4. P_G(F(z), G(z)) = 0 at random rational points.
Outcome vanishing_identity() {
  Outcome o;
  std::mt19937_64 rng(4);
  for (int k = 0; k < 4; ++k) {
    const PolyMap f = parse_system(kTableSources[k]);
    const LinearForm g = choose_g(f, 0).g;
    for (int trial = 0; trial < 100; ++trial) {
      const std::vector<Rational> z{random_rational(rng), random_rational(rng)};
      o.require(pg_value(f, g, f.evaluate(z), g.evaluate(z)) == 0,
                std::string(kTableNames[k]) + ": P_G(F(z), G(z)) != 0");
    }
  }
  return o;
}

// 5. deg_T P_G(0, T) does not depend on the certified G.
Outcome g_independence() {
  Outcome o;
  const std::vector<Rational> zero(2, Rational(0));
  for (int k = 0; k < 4; ++k) {
    const PolyMap f = parse_system(kTableSources[k]);
    const auto forms = certified_forms(f, 3, 0);
    o.require(forms.size() == 3, std::string(kTableNames[k]) + ": fewer than 3 certified forms");
    if (forms.size() < 3) continue;
    const Degree first = pg_slice(f, forms[0].g, zero).degree();
    for (std::size_t i = 1; i < 3; ++i)
      o.require(pg_slice(f, forms[i].g, zero).degree() == first, std::string(kTableNames[k]) + ": degrees differ");
  }
  return o;
}

// 6. Sphere-minimum slopes.
Outcome growth() {
  Outcome o;
  const std::vector<double> radii{1e1, 1e2, 1e3, 1e4};
  const double expected[] = {1.0, 2.0, -1.0, -1.0};
  const double tolerance[] = {0.1, 0.1, 0.15, 0.15};
  for (int k = 0; k < 4; ++k) {
    const PolyMap f = parse_system(kTableSources[k]);
    const AnalysisReport report = analyze(f);
    GrowthCheckOptions options;
    options.expected_tolerance = tolerance[k];
    const GrowthVerdict v = verify_growth(f, report, radii, 0, expected[k], options);
    const double slope = v.profile.fitted_exponent;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s: slope %.4f, expected %.1f", kTableNames[k], slope, expected[k]);
    o.require(std::abs(slope - expected[k]) <= tolerance[k], buf);
    o.require(slope >= static_cast<double>(report.exponents.thm12) - 0.15, std::string(buf) + " below thm12");
    o.require(v.verdict == Verdict::pass, std::string(buf) + " verdict not PASS");
  }
  return o;
}

// 7. Root escape rate for delta0 = 1, skipped for delta0 = 0.
Outcome root_escape() {
  Outcome o;
  for (int k = 0; k < 4; ++k) {
    const PolyMap f = parse_system(kTableSources[k]);
    const AnalysisReport report = analyze(f);
    const PGFull full = pg_full(f, report.certificate->g);
    const RootEscapeVerdict v = verify_root_escape(full.poly, report.delta0, 0);
    const std::string name = kTableNames[k];
    if (report.delta0 == 0) {
      o.require(v.verdict == Verdict::skipped, name + ": delta0 = 0 not skipped");
    } else {
      o.require(report.delta0 == 1, name + ": unexpected delta0");
      o.require(std::abs(v.profile.fitted_exponent + 1.0) <= 0.15, name + ": slope not -1");
      o.require(v.verdict == Verdict::pass, name + ": verdict not PASS");
    }
  }
  return o;
}

// 8. Resultant product formula over the zero set.
Outcome product_formula() {
  Outcome o;
  {
    const MultiPoly z0 = MultiPoly::variable(2, 0), z1 = MultiPoly::variable(2, 1);
    const std::vector<MultiPoly> forms{z0 * z1};
    const MultiPoly l = z0 + z1;
    const std::vector<ZeroPoint> zeros{{{1.0, 0.0}, 1}, {{0.0, 1.0}, 1}};
    const MultiPoly h = scalar_multiply(2, z0 * z0) + scalar_multiply(-3, z0 * z1) + scalar_multiply(5, z1 * z1);
    const ProductFormulaVerdict v = verify_product_formula(forms, h, l, zeros);
    o.require(v.verdict == Verdict::pass && v.relative_error <= 1e-8, "n = 1 example");
    o.require(abs(v.lhs_exact) == 10 && abs(resultant(FormSystem({z0 * z1, h})).value) == 10, "n = 1 value a*c");
    const ProductFormulaVerdict self = verify_product_formula(forms, l * l, l, zeros);
    o.require(self.verdict == Verdict::pass && self.relative_error <= 1e-8, "H = L^d example");
  }
  {
    const MultiPoly z0 = MultiPoly::variable(3, 0), z1 = MultiPoly::variable(3, 1), z2 = MultiPoly::variable(3, 2);
    const std::vector<MultiPoly> forms{z1 * z1 - z0 * z0, z2 * z2 - z0 * z0};
    std::vector<ZeroPoint> zeros;
    for (double s1 : {1.0, -1.0})
      for (double s2 : {1.0, -1.0}) zeros.push_back({{1.0, s1, s2}, 1});
    std::mt19937_64 rng(8);
    MultiPoly h = random_form(rng, 3, 2);
    h.add_term(Exponent{2, 0, 0}, 13);
    const ProductFormulaVerdict v = verify_product_formula(forms, h, z0, zeros);
    o.require(v.verdict == Verdict::pass && v.relative_error <= 1e-8, "n = 2 four-point example");
  }
  return o;
}

// 9. d(F) <= d1 d2 and delta0 >= 0 on random certified systems.
Outcome bezout_bound() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(1, 3);
  int certified = 0, failures = 0;
  for (int attempt = 0; certified < 20 && attempt < 200; ++attempt) {
    std::vector<MultiPoly> comps;
    for (int i = 0; i < 2; ++i) {
      const unsigned d = deg(rng);
      MultiPoly p(2);
      for (unsigned a = 0; a <= d; ++a)
        for (unsigned b = 0; a + b <= d; ++b) p.add_term(Exponent{a, b}, coeff(rng));
      if (p.total_degree() < Degree(d)) p.add_term(Exponent{d, 0}, 1);
      comps.push_back(p);
    }
    const PolyMap f(comps);
    AnalysisOptions options;
    options.seed = static_cast<std::uint64_t>(attempt);
    AnalysisReport r;
    try {
      r = analyze(f, options);
    } catch (const InconsistencyError& e) {
      o.require(false, e.what());
      continue;
    }
    if (!r.hypothesis_certified) {
      ++failures;
      continue;
    }
    ++certified;
    o.require(r.d_of_f <= f.bezout_number(), "d(F) above the Bezout number");
    o.require(r.d_of_f >= r.mu, "negative delta0");
  }
  o.require(certified == 20, "fewer than 20 certified systems");
  if (o.ok) o.detail = std::to_string(certified) + " certified, " + std::to_string(failures) + " not certified";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"exact invariant table", 40.0, invariant_table},
      {"Macaulay vs Sylvester", 10.0, sylvester_equivalence},
      {"resultant homogeneity", 30.0, homogeneity},
      {"P_G vanishing identity", 60.0, vanishing_identity},
      {"G-independence of deg_T P_G(0, T)", 60.0, g_independence},
      {"growth slopes", 60.0, growth},
      {"root escape rate", 30.0, root_escape},
      {"product formula", 10.0, product_formula},
      {"Bezout bound", 300.0, bezout_bound},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) {
      o.ok = false;
      o.detail = "time limit exceeded";
    }
    if (!o.ok) ++failed;
    std::printf("%s %d. %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", index, c.name, seconds,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
