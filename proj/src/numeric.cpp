#include "lojinf/numeric.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <random>

#include "detail/seed.hpp"
#include "lojinf/errors.hpp"
#include "lojinf/macaulay.hpp"

namespace lojinf {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "PASS";
    case Verdict::fail:
      return "FAIL";
    case Verdict::skipped:
      return "SKIPPED";
  }
  return "unknown";
}

double max_norm(std::span<const Complex> z) {
  double m = 0.0;
  for (const auto& x : z) m = std::max(m, std::abs(x));
  return m;
}

CompiledPoly::CompiledPoly(const MultiPoly& p) : arity_(p.arity()), max_power_(p.arity(), 0) {
  terms_.reserve(p.term_count());
  for (const auto& [e, c] : p.terms()) {
    terms_.push_back(Term{Complex(c.get_d(), 0.0), e.powers()});
    for (std::size_t i = 0; i < arity_; ++i) max_power_[i] = std::max(max_power_[i], e[i]);
  }
}

Complex CompiledPoly::evaluate(std::span<const Complex> z) const {
  if (z.size() != arity_) throw ArityError("evaluation point has wrong length");
  thread_local std::vector<std::vector<Complex>> powers;
  powers.resize(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    auto& row = powers[i];
    row.resize(max_power_[i] + 1);
    row[0] = 1.0;
    for (unsigned k = 1; k <= max_power_[i]; ++k) row[k] = row[k - 1] * z[i];
  }
  Complex sum = 0.0;
  for (const auto& t : terms_) {
    Complex term = t.coefficient;
    for (std::size_t i = 0; i < arity_; ++i)
      if (t.powers[i] != 0) term *= powers[i][t.powers[i]];
    sum += term;
  }
  return sum;
}

CompiledMap::CompiledMap(const PolyMap& f) {
  components_.reserve(f.n());
  for (const auto& c : f.components()) components_.emplace_back(c);
}

double CompiledMap::norm_at(std::span<const Complex> z) const {
  double m = 0.0;
  for (const auto& c : components_) m = std::max(m, std::abs(c.evaluate(z)));
  return m;
}

namespace {

/// Point on the max-norm sphere in polar coordinates; coordinate `pinned`
/// keeps modulus R, the others have log-modulus <= log R.
struct SpherePoint {
  std::size_t pinned = 0;
  std::vector<double> log_radius;
  std::vector<double> phase;

  std::vector<Complex> to_complex() const {
    std::vector<Complex> z(phase.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = std::polar(std::exp(log_radius[i]), phase[i]);
    return z;
  }
};

constexpr double kTwoPi = 2.0 * std::numbers::pi;

SpherePoint refine(const CompiledMap& map, SpherePoint start, double& value, double log_r,
                   unsigned iterations) {
  const double floor = log_r - 80.0;
  double radius_step = 1.0;
  double phase_step = 0.5;
  SpherePoint best = std::move(start);
  for (unsigned it = 0; it < iterations; ++it) {
    bool improved = false;
    for (std::size_t j = 0; j < best.phase.size(); ++j) {
      for (double dir : {1.0, -1.0}) {
        SpherePoint trial = best;
        trial.phase[j] = std::fmod(trial.phase[j] + dir * phase_step, kTwoPi);
        const double v = map.norm_at(trial.to_complex());
        if (v < value) {
          value = v;
          best = std::move(trial);
          improved = true;
        }
      }
      if (j == best.pinned) continue;
      for (double dir : {1.0, -1.0}) {
        SpherePoint trial = best;
        trial.log_radius[j] = std::clamp(trial.log_radius[j] + dir * radius_step, floor, log_r);
        const double v = map.norm_at(trial.to_complex());
        if (v < value) {
          value = v;
          best = std::move(trial);
          improved = true;
        }
      }
    }
    if (!improved) {
      radius_step *= 0.5;
      phase_step *= 0.5;
    }
  }
  return best;
}

}  // namespace

SphereMinimum min_on_sphere(const PolyMap& f, double radius, std::uint64_t seed,
                            const SphereSearchOptions& options) {
  if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  if (options.budget == 0) throw std::invalid_argument("sample budget must be positive");
  const CompiledMap map(f);
  const std::size_t n = f.n();
  const double log_r = std::log(radius);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);

  // Every other sample draws the free moduli log-uniformly down to R^{-2}, so
  // that valleys hugging a small coordinate get a starting point.
  const double log_span = 3.0 * std::max(std::abs(log_r), 1.0);

  std::vector<std::pair<double, SpherePoint>> samples;
  samples.reserve(options.budget);
  for (std::size_t s = 0; s < options.budget; ++s) {
    SpherePoint p;
    p.pinned = pick(rng);
    p.log_radius.resize(n);
    p.phase.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      p.phase[i] = kTwoPi * unit(rng);
      const double u = unit(rng);
      if (i == p.pinned)
        p.log_radius[i] = log_r;
      else if (s % 2 == 0)
        p.log_radius[i] = log_r + 0.5 * std::log(std::max(u, 1e-300));  // area-uniform in the disk
      else
        p.log_radius[i] = log_r - log_span * u;
    }
    const double v = map.norm_at(p.to_complex());
    samples.emplace_back(v, std::move(p));
  }

  const std::size_t keep = std::min(options.refine_candidates, samples.size());
  std::partial_sort(samples.begin(), samples.begin() + keep, samples.end(),
                    [](const auto& a, const auto& b) { return a.first < b.first; });

  SphereMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < keep; ++c) {
    double value = samples[c].first;
    SpherePoint refined = refine(map, samples[c].second, value, log_r, options.refine_iterations);
    if (value < best.value) {
      best.value = value;
      best.witness = refined.to_complex();
    }
  }
  return best;
}

LinearFit fit_loglog(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit needs matching samples");
  const std::size_t n = x.size();
  std::vector<double> lx(n), ly(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw std::invalid_argument("log-log fit needs positive data");
    lx[i] = std::log(x[i]);
    ly[i] = std::log(y[i]);
  }
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  LinearFit fit;
  if (*hi - *lo <= std::numeric_limits<double>::epsilon() * *hi) {
    fit.flat = true;
    fit.slope = 0.0;
    fit.intercept = ly[0];
    return fit;
  }
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit needs distinct abscissae");
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

LinearFit fit_growth_exponent(const GrowthProfile& profile) {
  std::vector<double> x, y;
  for (std::size_t i = 0; i < profile.radii.size(); ++i) {
    if (std::find(profile.excluded.begin(), profile.excluded.end(), i) != profile.excluded.end())
      continue;
    x.push_back(profile.radii[i]);
    y.push_back(profile.min_estimates[i]);
  }
  if (x.size() < 4) throw std::invalid_argument("growth fit needs at least four usable radii");
  return fit_loglog(x, y);
}

GrowthProfile growth_profile(const PolyMap& f, std::span<const double> radii, std::uint64_t seed,
                             const SphereSearchOptions& options) {
  if (radii.size() < 4) throw std::invalid_argument("growth profile needs at least four radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0)) throw std::invalid_argument("radii must be positive");
    if (i > 0 && !(radii[i] > radii[i - 1]))
      throw std::invalid_argument("radii must be strictly increasing");
  }

  std::vector<std::future<SphereMinimum>> jobs;
  for (std::size_t i = 0; i < radii.size(); ++i)
    jobs.push_back(std::async(std::launch::async, [&f, &options, r = radii[i],
                                                   s = detail::mix_seed(seed, i)] {
      return min_on_sphere(f, r, s, options);
    }));

  GrowthProfile profile;
  profile.radii.assign(radii.begin(), radii.end());
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    SphereMinimum m = jobs[i].get();
    if (m.value == 0.0) profile.excluded.push_back(i);
    profile.min_estimates.push_back(m.value);
    profile.witnesses.push_back(std::move(m.witness));
  }
  const LinearFit fit = fit_growth_exponent(profile);
  profile.fitted_exponent = fit.slope;
  profile.empirical_c = std::exp(fit.intercept);
  profile.flat = fit.flat;
  return profile;
}

GrowthVerdict verify_growth(const PolyMap& f, const AnalysisReport& report,
                            std::span<const double> radii, std::uint64_t seed,
                            std::optional<double> expected_slope, const GrowthCheckOptions& options) {
  if (!report.hypothesis_certified)
    throw std::invalid_argument("growth verification needs a certified analysis report");
  GrowthVerdict v;
  v.thm11_bound = report.exponents.thm11;
  v.thm12_bound = report.exponents.thm12;
  v.expected_slope = expected_slope;
  v.profile = growth_profile(f, radii, seed, options.search);

  const double slope = v.profile.fitted_exponent;
  const bool above_thm12 = slope >= static_cast<double>(v.thm12_bound) - options.bound_tolerance;
  const bool above_thm11 = slope >= static_cast<double>(v.thm11_bound) - options.bound_tolerance;
  const bool matches = !expected_slope || std::abs(slope - *expected_slope) <= options.expected_tolerance;
  v.verdict = above_thm11 && above_thm12 && matches ? Verdict::pass : Verdict::fail;
  if (!above_thm12 || !above_thm11) v.note = "fitted slope below a theorem exponent";
  else if (!matches) v.note = "fitted slope differs from the expected slope";
  v.note += v.note.empty() ? "" : "; ";
  v.note += "sphere minima are sampled upper estimates";
  return v;
}

namespace {

Complex horner(std::span<const Complex> c, Complex x) {
  Complex acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double relative_residual(std::span<const Complex> c, Complex x) {
  double scale = 0.0;
  double power = 1.0;
  const double ax = std::abs(x);
  for (const auto& a : c) {
    scale += std::abs(a) * power;
    power *= ax;
  }
  return scale == 0.0 ? 0.0 : std::abs(horner(c, x)) / scale;
}

}  // namespace

std::vector<Complex> roots_univariate(std::span<const Complex> coefficients) {
  if (coefficients.size() < 2) throw std::invalid_argument("root finding needs degree >= 1");
  const Complex lead = coefficients.back();
  if (lead == Complex(0.0)) throw std::invalid_argument("leading coefficient is zero");
  const std::size_t d = coefficients.size() - 1;

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d),
                                                      static_cast<Eigen::Index>(d));
  for (std::size_t i = 1; i < d; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < d; ++i)
    companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d - 1)) = -coefficients[i] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("companion eigenvalue iteration failed");

  std::vector<Complex> derivative(d);
  for (std::size_t k = 1; k <= d; ++k) derivative[k - 1] = static_cast<double>(k) * coefficients[k];

  std::vector<Complex> roots(d);
  for (std::size_t i = 0; i < d; ++i) {
    Complex r = solver.eigenvalues()[static_cast<Eigen::Index>(i)];
    double residual = relative_residual(coefficients, r);
    for (int polish = 0; polish < 4 && (polish == 0 || residual > 1e-10); ++polish) {
      const Complex slope = horner(derivative, r);
      if (slope == Complex(0.0)) break;
      const Complex candidate = r - horner(coefficients, r) / slope;
      const double candidate_residual = relative_residual(coefficients, candidate);
      if (!(candidate_residual < residual)) break;
      r = candidate;
      residual = candidate_residual;
    }
    if (residual > 1e-10)
      throw ConvergenceError("root " + std::to_string(i) + " has relative residual " +
                             std::to_string(residual));
    roots[i] = r;
  }
  return roots;
}

std::vector<Complex> coefficients_in_last(const MultiPoly& p, std::span<const Complex> w) {
  const std::size_t n = p.arity() - 1;
  if (w.size() != n) throw ArityError("w must fix every variable but the last");
  const Degree deg = p.degree_in(n);
  if (deg.is_minus_infinity()) return {};
  std::vector<Complex> c(deg.value() + 1, 0.0);
  std::vector<bool> present(c.size(), false);
  for (const auto& [e, coeff] : p.terms()) {
    Complex term(coeff.get_d(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= w[i];
    c[e[n]] += term;
    present[e[n]] = true;
  }
  while (!c.empty() && (!present[c.size() - 1] || c.back() == Complex(0.0))) {
    c.pop_back();
    present.pop_back();
  }
  return c;
}

RootEscapeVerdict verify_root_escape(const MultiPoly& p, std::uint64_t delta, std::uint64_t seed,
                                     double tolerance) {
  if (p.arity() < 2) throw ArityError("P needs variables (W_1, ..., W_n, T)");
  const std::size_t n = p.arity() - 1;
  MultiPoly at_zero = p;
  for (std::size_t i = 0; i < n; ++i) at_zero = at_zero.specialize(i, 0);
  if (at_zero.is_zero()) throw std::invalid_argument("P(0, T) vanishes identically");

  RootEscapeVerdict v;
  v.delta = delta;
  if (delta == 0) {
    v.verdict = Verdict::skipped;
    v.note = "delta = 0: roots stay bounded by continuity";
    return v;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  v.direction.resize(n);
  for (auto& u : v.direction) u = std::polar(0.5 + 0.5 * unit(rng), kTwoPi * unit(rng));
  const double scale = max_norm(v.direction);
  for (auto& u : v.direction) u /= scale;

  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
    std::vector<Complex> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = eps * v.direction[i];
    const auto coeffs = coefficients_in_last(p, w);
    if (coeffs.size() < 2) {
      v.note = "P(w, T) has no roots at eps = " + std::to_string(eps);
      v.verdict = Verdict::fail;
      return v;
    }
    const auto roots = roots_univariate(coeffs);
    double biggest = 0.0;
    for (const auto& r : roots) biggest = std::max(biggest, std::abs(r));
    v.profile.w_magnitudes.push_back(eps);
    v.profile.max_root_t.push_back(biggest);
  }
  v.profile.fitted_exponent = fit_loglog(v.profile.w_magnitudes, v.profile.max_root_t).slope;
  const double limit = -1.0 / static_cast<double>(delta) + tolerance;
  v.verdict = v.profile.fitted_exponent <= limit ? Verdict::pass : Verdict::fail;
  if (v.verdict == Verdict::fail) v.note = "roots escape slower than |w|^(-1/delta)";
  return v;
}

namespace {

Complex evaluate_complex(const MultiPoly& p, std::span<const Complex> z) {
  return CompiledPoly(p).evaluate(z);
}

}  // namespace

ProductFormulaVerdict verify_product_formula(std::span<const MultiPoly> forms, const MultiPoly& h,
                                            const MultiPoly& l, std::span<const ZeroPoint> zeros,
                                            double tolerance) {
  const std::size_t n = forms.size();
  if (n == 0) throw std::invalid_argument("need at least one form");
  const std::size_t arity = n + 1;
  if (h.arity() != arity || l.arity() != arity) throw ArityError("H and L need n + 1 variables");
  if (!l.is_homogeneous_of_degree(1)) throw std::invalid_argument("L must be a linear form");
  if (h.is_zero()) throw std::invalid_argument("H is zero");
  const unsigned d = h.total_degree().value();
  if (d == 0 || !h.is_homogeneous_of_degree(d)) throw std::invalid_argument("H must be a form of degree > 0");

  std::uint64_t bezout = 1;
  for (const auto& f : forms) {
    if (f.is_zero()) throw std::invalid_argument("zero form");
    bezout *= f.total_degree().value();
  }
  std::uint64_t total = 0;
  for (const auto& z : zeros) {
    if (z.point.size() != arity) throw ArityError("zero has wrong number of coordinates");
    const Complex lp = evaluate_complex(l, z.point);
    if (std::abs(lp) <= 1e-12 * max_norm(z.point))
      throw std::invalid_argument("L vanishes on a listed zero");
    total += z.multiplicity;
  }
  if (total != bezout)
    throw std::invalid_argument("multiplicities sum to " + std::to_string(total) + ", expected " +
                                std::to_string(bezout));

  std::vector<MultiPoly> with_h(forms.begin(), forms.end());
  with_h.push_back(h);
  std::vector<MultiPoly> with_l(forms.begin(), forms.end());
  with_l.push_back(l.pow(d));

  ProductFormulaVerdict v;
  v.lhs_exact = resultant(FormSystem(std::move(with_h))).value;
  v.l_resultant = resultant(FormSystem(std::move(with_l))).value;
  v.product = 1.0;
  for (const auto& z : zeros) {
    const Complex ratio = evaluate_complex(h, z.point) / std::pow(evaluate_complex(l, z.point), static_cast<int>(d));
    for (unsigned k = 0; k < z.multiplicity; ++k) v.product *= ratio;
  }
  v.lhs = v.lhs_exact.get_d();
  v.rhs = v.l_resultant.get_d() * v.product;
  const double scale = std::max({std::abs(v.lhs), std::abs(v.rhs), 1.0});
  v.relative_error = std::abs(Complex(v.lhs, 0.0) - v.rhs) / scale;
  v.verdict = v.relative_error <= tolerance ? Verdict::pass : Verdict::fail;
  return v;
}

}  // namespace lojinf
