#include "lojinf/analysis.hpp"

#include <algorithm>
#include <random>

#include "detail/seed.hpp"
#include "lojinf/errors.hpp"

namespace lojinf {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::proper_at_0:
      return "proper_at_0";
    case Classification::nonproper_at_0:
      return "nonproper_at_0";
    case Classification::algebraically_dependent:
      return "algebraically_dependent";
    case Classification::not_certified:
      return "not_certified";
  }
  return "unknown";
}

namespace {

std::uint64_t slice_degree(const PGSlice& slice) {
  if (slice.identically_zero())
    throw InconsistencyError("P_G(w, T) vanishes identically for a certified G");
  return slice.degree().value();
}

}  // namespace

std::uint64_t geometric_degree(const PolyMap& f, const StarCertificate& certificate,
                               std::uint64_t seed, const AnalysisOptions& options,
                               std::vector<GenericDraw>* draws) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coordinate(-options.generic_range, options.generic_range);
  std::uint64_t best = 0;
  for (unsigned k = 0; k < options.generic_draws; ++k) {
    std::vector<Rational> w(f.n());
    for (auto& x : w) x = coordinate(rng);
    const PGSlice slice = pg_slice(f, certificate.g, w, options.pg.resultant);
    const std::uint64_t degree = slice_degree(slice);
    best = std::max(best, degree);
    if (draws) draws->push_back(GenericDraw{std::move(w), degree});
  }
  return best;
}

std::uint64_t mu_at_zero(const PolyMap& f, const StarCertificate& certificate,
                         const AnalysisOptions& options) {
  const std::vector<Rational> zero(f.n(), Rational(0));
  return slice_degree(pg_slice(f, certificate.g, zero, options.pg.resultant));
}

std::uint64_t delta0(const PolyMap& f, const StarCertificate& certificate, std::uint64_t seed,
                     const AnalysisOptions& options) {
  const std::uint64_t mu = mu_at_zero(f, certificate, options);
  for (std::uint64_t retry = 0; retry < 2; ++retry) {
    const std::uint64_t d = geometric_degree(f, certificate, detail::mix_seed(seed, retry), options);
    if (d >= mu) return d - mu;
  }
  throw InconsistencyError("d(F) < mu after retry; genericity draws failed");
}

ExponentBounds exponent_bounds(std::span<const unsigned> degrees, std::uint64_t mu,
                               std::uint64_t delta0) {
  std::int64_t product = 1;
  for (unsigned d : degrees) product *= d;
  const std::int64_t min_d = *std::min_element(degrees.begin(), degrees.end());
  ExponentBounds b;
  b.thm11 = -static_cast<std::int64_t>(delta0);
  b.thm12 = static_cast<std::int64_t>(mu) - product + min_d;
  b.kollar = -product + min_d;
  return b;
}

Classification classify(std::uint64_t d_of_f, std::uint64_t delta0) {
  if (d_of_f == 0) return Classification::algebraically_dependent;
  return delta0 == 0 ? Classification::proper_at_0 : Classification::nonproper_at_0;
}

void check_report_invariants(const AnalysisReport& r) {
  if (!r.hypothesis_certified) return;
  auto require = [](bool ok, const char* what) {
    if (!ok) throw InconsistencyError(std::string("report invariant violated: ") + what);
  };
  require(r.d_of_f <= r.bezout, "d(F) <= prod d_i");
  require(r.mu <= r.d_of_f, "mu <= d(F)");
  require(r.delta0 == r.d_of_f - r.mu, "delta0 == d(F) - mu");
  const auto min_d = static_cast<std::int64_t>(r.min_degree);
  const auto bezout = static_cast<std::int64_t>(r.bezout);
  require(r.exponents.thm11 == -static_cast<std::int64_t>(r.delta0), "thm11 == -delta0");
  require(r.exponents.thm12 == static_cast<std::int64_t>(r.mu) - bezout + min_d,
          "thm12 == mu - prod d_i + min d_i");
  require(r.exponents.kollar == -bezout + min_d, "kollar == -prod d_i + min d_i");
  require(r.exponents.kollar <= r.exponents.thm12, "kollar <= thm12");
  require(r.delta0 == 0 || r.exponents.thm11 >= r.exponents.thm12, "delta0 == 0 or thm11 >= thm12");
  if (r.d_of_f <= r.bezout - r.min_degree)
    require(r.exponents.thm11 >= r.exponents.thm12, "thm11 >= thm12 when d(F) <= prod d_i - min d_i");
  require(r.proper_at_0 == (r.delta0 == 0 && r.d_of_f > 0), "proper_at_0 iff delta0 = 0 and d(F) > 0");
  require(r.algebraically_dependent == (r.d_of_f == 0), "dependent iff d(F) = 0");
  if (r.algebraically_dependent) require(r.mu == 0 && r.delta0 == 0, "d(F) = 0 implies mu = delta0 = 0");
}

AnalysisReport analyze(const PolyMap& f, const AnalysisOptions& options) {
  AnalysisReport report;
  report.variables = f.variable_names();
  report.degrees = f.degrees();
  report.bezout = f.bezout_number();
  report.min_degree = f.min_degree();

  try {
    report.certificate = choose_g(f, detail::mix_seed(options.seed, 1), options.pg);
  } catch (const CertificationError& e) {
    report.hypothesis_certified = false;
    report.diagnostic = e.what();
    report.classification = Classification::not_certified;
    return report;
  }
  report.hypothesis_certified = true;
  const StarCertificate& cert = *report.certificate;

  report.mu = mu_at_zero(f, cert, options);
  const std::uint64_t draw_seed = detail::mix_seed(options.seed, 2);
  for (std::uint64_t retry = 0;; ++retry) {
    report.generic_w_draws.clear();
    report.d_of_f = geometric_degree(f, cert, detail::mix_seed(draw_seed, retry), options,
                                     &report.generic_w_draws);
    if (report.d_of_f >= report.mu) break;
    if (retry == 1) throw InconsistencyError("d(F) < mu after retry; genericity draws failed");
  }
  report.delta0 = report.d_of_f - report.mu;
  report.exponents = exponent_bounds(report.degrees, report.mu, report.delta0);
  report.classification = classify(report.d_of_f, report.delta0);
  report.proper_at_0 = report.classification == Classification::proper_at_0;
  report.algebraically_dependent = report.classification == Classification::algebraically_dependent;

  if (report.algebraically_dependent && options.image_equation &&
      pg_full_grid_size(f) <= options.pg.grid_cap) {
    const PGFull full = pg_full(f, cert.g, options.pg);
    // P_G = P_0(W) here; drop the T slot for printing.
    MultiPoly image(f.n());
    for (const auto& [e, c] : full.poly.terms())
      image.add_term(Exponent(std::vector<unsigned>(e.powers().begin(), e.powers().end() - 1)), c);
    report.image_equation = to_string(image, default_variable_names(f.n(), "w", 1));
  }

  check_report_invariants(report);
  return report;
}

}  // namespace lojinf
