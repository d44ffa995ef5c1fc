#pragma once

// Floating-point harness: sphere minima of |F| in the max-norm, log-log growth
// fits, univariate root finding, root escape rates near w = 0 and the
// resultant product formula over a finite zero set.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lojinf/analysis.hpp"
#include "lojinf/polyring.hpp"

namespace lojinf {

using Complex = std::complex<double>;

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v);

/// max_i |z_i|
double max_norm(std::span<const Complex> z);

/// Double-precision copy of a MultiPoly for fast complex evaluation.
class CompiledPoly {
 public:
  explicit CompiledPoly(const MultiPoly& p);

  std::size_t arity() const noexcept { return arity_; }
  Complex evaluate(std::span<const Complex> z) const;

 private:
  struct Term {
    Complex coefficient;
    std::vector<unsigned> powers;
  };
  std::size_t arity_;
  std::vector<Term> terms_;
  std::vector<unsigned> max_power_;
};

class CompiledMap {
 public:
  explicit CompiledMap(const PolyMap& f);

  std::size_t n() const noexcept { return components_.size(); }
  /// |F(z)| in the max-norm.
  double norm_at(std::span<const Complex> z) const;

 private:
  std::vector<CompiledPoly> components_;
};

struct SphereSearchOptions {
  std::size_t budget = 2000;
  std::size_t refine_candidates = 10;
  unsigned refine_iterations = 200;
};

struct SphereMinimum {
  double value = 0.0;
  std::vector<Complex> witness;  ///< |witness| = R and |F(witness)| = value
};

/// Upper estimate of min_{|z| = R} |F(z)|: random samples on the max-norm
/// sphere followed by coordinate-wise local search from the best candidates.
SphereMinimum min_on_sphere(const PolyMap& f, double radius, std::uint64_t seed,
                            const SphereSearchOptions& options = {});

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  bool flat = false;  ///< all ordinates equal within machine epsilon
};

/// Ordinary least squares of log(y) against log(x).
LinearFit fit_loglog(std::span<const double> x, std::span<const double> y);

struct GrowthProfile {
  std::vector<double> radii;
  std::vector<double> min_estimates;
  std::vector<std::vector<Complex>> witnesses;
  std::vector<std::size_t> excluded;  ///< radii whose estimate was 0 (fiber point on the sphere)
  double fitted_exponent = 0.0;
  double empirical_c = 0.0;
  bool flat = false;
};

/// Sphere minima over `radii` (strictly increasing, at least four), fitted.
GrowthProfile growth_profile(const PolyMap& f, std::span<const double> radii, std::uint64_t seed,
                             const SphereSearchOptions& options = {});

/// Refits a profile, skipping excluded radii. Needs four usable radii.
LinearFit fit_growth_exponent(const GrowthProfile& profile);

struct GrowthVerdict {
  Verdict verdict = Verdict::fail;
  GrowthProfile profile;
  std::int64_t thm11_bound = 0;
  std::int64_t thm12_bound = 0;
  std::optional<double> expected_slope;
  std::string note;
};

struct GrowthCheckOptions {
  SphereSearchOptions search;
  double bound_tolerance = 0.15;
  double expected_tolerance = 0.15;
};

/// PASS when the fitted slope is >= both theorem exponents minus the tolerance,
/// and, if `expected_slope` is given, within expected_tolerance of it.
GrowthVerdict verify_growth(const PolyMap& f, const AnalysisReport& report,
                            std::span<const double> radii, std::uint64_t seed,
                            std::optional<double> expected_slope = std::nullopt,
                            const GrowthCheckOptions& options = {});

/// Complex roots of sum_k coefficients[k] T^k (ascending), with multiplicity.
/// Companion-matrix eigenvalues followed by Newton polishing; throws
/// ConvergenceError when a relative residual stays above 1e-10.
std::vector<Complex> roots_univariate(std::span<const Complex> coefficients);

struct RootGrowthProfile {
  std::vector<double> w_magnitudes;
  std::vector<double> max_root_t;
  double fitted_exponent = 0.0;
};

struct RootEscapeVerdict {
  Verdict verdict = Verdict::fail;
  std::uint64_t delta = 0;
  RootGrowthProfile profile;
  std::vector<Complex> direction;
  std::string note;
};

/// Coefficients in T of P(w, T) for P in variables (W_1, ..., W_n, T), ascending.
std::vector<Complex> coefficients_in_last(const MultiPoly& p, std::span<const Complex> w);

/// Along w = eps * u, eps = 1e-1 ... 1e-4, fits log max|t| against log eps over the
/// roots of P(w, T). Escaping roots satisfy |t| >= c |w|^{-1/delta}, so PASS when
/// the slope is <= -1/delta + tolerance. delta = 0 is SKIPPED.
RootEscapeVerdict verify_root_escape(const MultiPoly& p, std::uint64_t delta, std::uint64_t seed,
                                     double tolerance = 0.15);

struct ZeroPoint {
  std::vector<Complex> point;  ///< homogeneous coordinates (Z_0, ..., Z_n)
  unsigned multiplicity = 1;
};

struct ProductFormulaVerdict {
  Verdict verdict = Verdict::fail;
  Rational lhs_exact;         ///< Res(H_1, ..., H_n, H)
  Rational l_resultant;       ///< Res(H_1, ..., H_n, L^d)
  Complex product;            ///< prod_p (H / L^d)(p)^{mu_p}
  double lhs = 0.0;
  Complex rhs;
  double relative_error = 0.0;
};

/// Compares Res(H_1..H_n, H) with Res(H_1..H_n, L^d) * prod_p (H/L^d)(p)^{mu_p}.
/// Throws std::invalid_argument when L vanishes on a listed point or the
/// multiplicities do not add up to d_1 ... d_n.
ProductFormulaVerdict verify_product_formula(std::span<const MultiPoly> forms, const MultiPoly& h,
                                            const MultiPoly& l, std::span<const ZeroPoint> zeros,
                                            double tolerance = 1e-8);

}  // namespace lojinf
