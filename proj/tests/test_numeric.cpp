#include <doctest.h>

#include <cmath>
#include <random>

#include "lojinf/analysis.hpp"
#include "lojinf/errors.hpp"
#include "lojinf/numeric.hpp"
#include "lojinf/parser.hpp"

using namespace lojinf;

namespace {

const char* const kIdentity = "vars: z1 z2\nF1 = z1\nF2 = z2\n";
const char* const kSquares = "vars: z1 z2\nF1 = z1^2\nF2 = z2^2\n";
const char* const kHyperbola = "vars: z1 z2\nF1 = z1\nF2 = z1*z2 - 1\n";
const char* const kCusp = "vars: z1 z2\nF1 = z1\nF2 = z1*z2^2 + z2\n";

const std::vector<double> kRadii{1e1, 1e2, 1e3, 1e4};

/// Sorts by real part, then imaginary part.
std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

MultiPoly parse_poly(const std::string& vars, const std::string& expr) {
  const SystemFile file = parse_system_file("vars: " + vars + "\nP = " + expr + "\n");
  return file.polynomials.at(0);
}

}  // namespace

TEST_CASE("roots_univariate examples") {
  auto r = sorted(roots_univariate(std::vector<Complex>{-1.0, 0.0, 1.0}));
  REQUIRE(r.size() == 2);
  CHECK(std::abs(r[0] - Complex(-1.0)) < 1e-12);
  CHECK(std::abs(r[1] - Complex(1.0)) < 1e-12);

  r = roots_univariate(std::vector<Complex>{1.0, -2.0, 1.0});
  REQUIRE(r.size() == 2);
  for (const auto& x : r) CHECK(std::abs(x - Complex(1.0)) < 1e-7);

  r = roots_univariate(std::vector<Complex>{-1.0, 0.01});
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0] - Complex(100.0)) < 1e-9);

  CHECK_THROWS_AS(roots_univariate(std::vector<Complex>{3.0}), std::invalid_argument);
  CHECK_THROWS_AS(roots_univariate(std::vector<Complex>{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("roots_univariate matches Vieta on random polynomials") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = deg(rng);
    std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = Complex(u(rng), u(rng));
    if (std::abs(c.back()) < 0.1) c.back() = 1.0;
    const auto roots = roots_univariate(c);
    REQUIRE(roots.size() == static_cast<std::size_t>(d));
    Complex sum = 0.0, product = 1.0;
    for (const auto& x : roots) {
      sum += x;
      product *= x;
    }
    const Complex expected_sum = -c[c.size() - 2] / c.back();
    const Complex expected_product = (d % 2 == 0 ? 1.0 : -1.0) * c[0] / c.back();
    CHECK(std::abs(sum - expected_sum) <= 1e-8 * std::max(1.0, std::abs(expected_sum)));
    CHECK(std::abs(product - expected_product) <= 1e-8 * std::max(1.0, std::abs(expected_product)));
  }
}

TEST_CASE("fit_loglog recovers exact power laws") {
  const std::vector<double> x{1.0, 10.0, 100.0, 1000.0};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * v * v);
  const LinearFit fit = fit_loglog(x, y);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK_FALSE(fit.flat);

  const std::vector<double> constant(4, 0.5);
  const LinearFit flat = fit_loglog(x, constant);
  CHECK(flat.flat);
  CHECK(flat.slope == 0.0);
}

TEST_CASE("min_on_sphere examples") {
  const SphereMinimum id = min_on_sphere(parse_system(kIdentity), 100.0, 1);
  CHECK(id.value == doctest::Approx(100.0).epsilon(1e-9));

  const PolyMap squares = parse_system(kSquares);
  const SphereMinimum sq = min_on_sphere(squares, 10.0, 2);
  CHECK(sq.value == doctest::Approx(100.0).epsilon(1e-9));

  const PolyMap hyperbola = parse_system(kHyperbola);
  const SphereMinimum hy = min_on_sphere(hyperbola, 100.0, 3);
  CHECK(hy.value == doctest::Approx(0.01).epsilon(0.05));

  // The reported value is attained at the stored witness on the sphere.
  for (const auto* m : {&sq, &hy}) {
    REQUIRE(m->witness.size() == 2);
    const PolyMap& f = m == &sq ? squares : hyperbola;
    const double radius = m == &sq ? 10.0 : 100.0;
    CHECK(max_norm(m->witness) == doctest::Approx(radius).epsilon(1e-12));
    CHECK(CompiledMap(f).norm_at(m->witness) == doctest::Approx(m->value).epsilon(1e-12));
  }
}

TEST_CASE("min_on_sphere is deterministic in the seed") {
  const PolyMap f = parse_system(kCusp);
  CHECK(min_on_sphere(f, 1000.0, 7).value == min_on_sphere(f, 1000.0, 7).value);
}

TEST_CASE("growth profile slopes on the desk examples") {
  struct Case {
    const char* source;
    double slope, tolerance;
  };
  for (const Case& c : {Case{kIdentity, 1.0, 0.1}, Case{kSquares, 2.0, 0.1}, Case{kHyperbola, -1.0, 0.15},
                        Case{kCusp, -1.0, 0.15}}) {
    CAPTURE(c.source);
    const GrowthProfile p = growth_profile(parse_system(c.source), kRadii, 0);
    CHECK(p.radii == kRadii);
    CHECK(p.excluded.empty());
    CHECK(std::abs(p.fitted_exponent - c.slope) <= c.tolerance);
    CHECK(fit_growth_exponent(p).slope == doctest::Approx(p.fitted_exponent));
  }
}

TEST_CASE("growth_profile preconditions") {
  const PolyMap f = parse_system(kIdentity);
  CHECK_THROWS_AS(growth_profile(f, std::vector<double>{1, 10, 100}, 0), std::invalid_argument);
  CHECK_THROWS_AS(growth_profile(f, std::vector<double>{1, 10, 10, 100}, 0), std::invalid_argument);
  CHECK_THROWS_AS(growth_profile(f, std::vector<double>{-1, 10, 100, 1000}, 0), std::invalid_argument);
}

TEST_CASE("verify_growth verdicts") {
  for (const char* source : {kHyperbola, kSquares, kCusp, kIdentity}) {
    CAPTURE(source);
    const PolyMap f = parse_system(source);
    const AnalysisReport report = analyze(f);
    const GrowthVerdict v = verify_growth(f, report, kRadii, 0);
    CHECK(v.verdict == Verdict::pass);
    CHECK(v.profile.fitted_exponent >= report.exponents.thm12 - 0.15);
  }
  // A wrong expectation is caught.
  const PolyMap f = parse_system(kSquares);
  const GrowthVerdict wrong = verify_growth(f, analyze(f), kRadii, 0, 1.0);
  CHECK(wrong.verdict == Verdict::fail);
  // An uncertified report is refused.
  const PolyMap line = parse_system("vars: z1 z2\nF1 = z1\nF2 = z1*z2\n");
  CHECK_THROWS_AS(verify_growth(line, analyze(line), kRadii, 0), std::invalid_argument);
}

TEST_CASE("root escape examples") {
  const MultiPoly simple = parse_poly("W1 T", "W1*T - 1");
  const RootEscapeVerdict v1 = verify_root_escape(simple, 1, 0);
  CHECK(v1.verdict == Verdict::pass);
  CHECK(v1.profile.fitted_exponent == doctest::Approx(-1.0).epsilon(0.01));
  CHECK(v1.profile.w_magnitudes.size() == 4);
  CHECK(std::is_sorted(v1.profile.w_magnitudes.rbegin(), v1.profile.w_magnitudes.rend()));

  // t = 1/w1^2 escapes faster than the guaranteed rate |w|^{-1/2}.
  const RootEscapeVerdict v2 = verify_root_escape(parse_poly("W1 T", "W1^2*T - 1"), 2, 0);
  CHECK(v2.verdict == Verdict::pass);
  CHECK(v2.profile.fitted_exponent == doctest::Approx(-2.0).epsilon(0.01));

  CHECK(verify_root_escape(parse_poly("W1 T", "T^2 - W1 - 1"), 0, 0).verdict == Verdict::skipped);

  // Bounded roots while a degree drop is claimed: the check must fail.
  CHECK(verify_root_escape(parse_poly("W1 T", "T - W1 - 1"), 1, 0).verdict == Verdict::fail);

  CHECK_THROWS_AS(verify_root_escape(parse_poly("W1 T", "W1*T"), 1, 0), std::invalid_argument);
}

TEST_CASE("root escape on P_G of the hyperbola") {
  const PolyMap f = parse_system(kHyperbola);
  const AnalysisReport report = analyze(f);
  const PGFull full = pg_full(f, report.certificate->g);
  const RootEscapeVerdict v = verify_root_escape(full.poly, report.delta0, 0);
  CHECK(v.verdict == Verdict::pass);
  CHECK(std::abs(v.profile.fitted_exponent + 1.0) <= 0.15);
}

TEST_CASE("product formula, n = 1") {
  const MultiPoly z0 = MultiPoly::variable(2, 0), z1 = MultiPoly::variable(2, 1);
  const std::vector<MultiPoly> forms{z0 * z1};
  const MultiPoly l = z0 + z1;
  const std::vector<ZeroPoint> zeros{{{1.0, 0.0}, 1}, {{0.0, 1.0}, 1}};
  const Rational a(3), b(-5), c(7);
  const MultiPoly h = scalar_multiply(a, z0 * z0) + scalar_multiply(b, z0 * z1) + scalar_multiply(c, z1 * z1);
  const ProductFormulaVerdict v = verify_product_formula(forms, h, l, zeros);
  CHECK(v.verdict == Verdict::pass);
  CHECK(abs(v.lhs_exact) == abs(a * c));
  CHECK(abs(v.l_resultant) == 1);
  CHECK(v.relative_error <= 1e-8);

  // H = L^2: the product is 1.
  const ProductFormulaVerdict self = verify_product_formula(forms, l * l, l, zeros);
  CHECK(self.verdict == Verdict::pass);
  CHECK(std::abs(self.product - Complex(1.0)) < 1e-12);
  CHECK(self.lhs_exact == self.l_resultant);

  // A wrong zero set is detected.
  const std::vector<ZeroPoint> wrong{{{1.0, 0.0}, 1}, {{1.0, 2.0}, 1}};
  CHECK(verify_product_formula(forms, h, l, wrong).verdict == Verdict::fail);
}

TEST_CASE("product formula preconditions") {
  const MultiPoly z0 = MultiPoly::variable(2, 0), z1 = MultiPoly::variable(2, 1);
  const std::vector<MultiPoly> forms{z0 * z1};
  const std::vector<ZeroPoint> zeros{{{1.0, 0.0}, 1}, {{0.0, 1.0}, 1}};
  CHECK_THROWS_AS(verify_product_formula(forms, z0 * z0, z0, zeros), std::invalid_argument);
  const std::vector<ZeroPoint> short_list{{{1.0, 0.0}, 1}};
  CHECK_THROWS_AS(verify_product_formula(forms, z0 * z0, z0 + z1, short_list), std::invalid_argument);
}

TEST_CASE("product formula, n = 2 transversal quadrics") {
  const MultiPoly z0 = MultiPoly::variable(3, 0), z1 = MultiPoly::variable(3, 1), z2 = MultiPoly::variable(3, 2);
  const std::vector<MultiPoly> forms{z1 * z1 - z0 * z0, z2 * z2 - z0 * z0};
  std::vector<ZeroPoint> zeros;
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) zeros.push_back({{1.0, s1, s2}, 1});

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coeff(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    MultiPoly h(3);
    for (const auto& e : monomials_of_degree(3, 2)) h.add_term(e, coeff(rng));
    h.add_term(Exponent{2, 0, 0}, 11);
    const ProductFormulaVerdict v = verify_product_formula(forms, h, z0, zeros);
    CHECK(v.verdict == Verdict::pass);
    CHECK(v.relative_error <= 1e-8);

    const std::vector<MultiPoly> swapped{forms[1], forms[0]};
    CHECK(verify_product_formula(swapped, h, z0, zeros).verdict == Verdict::pass);
  }
}
