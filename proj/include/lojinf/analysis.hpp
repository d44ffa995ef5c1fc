#pragma once

// Invariants of a polynomial map F : C^n -> C^n read off from P_G:
//
//   d(F)     = deg_T P_G(w, T) for generic w   (geometric degree)
//   mu       = deg_T P_G(0, T)                 (sum of multiplicities over F^{-1}(0))
//   delta0   = d(F) - mu
//
// and the growth exponents at infinity
//
//   |F(z)| >= C |z|^{-delta0}                  (thm11)
//   |F(z)| >= C |z|^{mu - prod d_i + min d_i}  (thm12)
//   q = -prod d_i + min d_i                    (kollar, comparison only)

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lojinf/pgcurve.hpp"
#include "lojinf/polyring.hpp"

namespace lojinf {

struct AnalysisOptions {
  std::uint64_t seed = 0;
  PgOptions pg;
  unsigned generic_draws = 3;
  long generic_range = 1'000'000;
  /// Interpolate P_0(W) when F turns out algebraically dependent (skipped above the grid cap).
  bool image_equation = true;
};

enum class Classification { proper_at_0, nonproper_at_0, algebraically_dependent, not_certified };

const char* to_string(Classification c);

struct ExponentBounds {
  std::int64_t thm11 = 0;
  std::int64_t thm12 = 0;
  std::int64_t kollar = 0;
};

struct GenericDraw {
  std::vector<Rational> w;
  std::uint64_t degree = 0;
};

struct AnalysisReport {
  std::vector<std::string> variables;
  std::vector<unsigned> degrees;
  std::uint64_t bezout = 0;
  unsigned min_degree = 0;

  bool hypothesis_certified = false;
  std::string diagnostic;  ///< why certification failed, empty otherwise
  std::optional<StarCertificate> certificate;

  // Meaningful only when hypothesis_certified.
  std::uint64_t d_of_f = 0;
  std::uint64_t mu = 0;
  std::uint64_t delta0 = 0;
  ExponentBounds exponents;
  bool proper_at_0 = false;
  bool algebraically_dependent = false;
  std::vector<GenericDraw> generic_w_draws;
  std::optional<std::string> image_equation;  ///< P_0(W) = 0 when d(F) = 0

  Classification classification = Classification::not_certified;
};

/// Max over random integer draws w of deg_T P_G(w, T). Draws are appended to `draws` when given.
std::uint64_t geometric_degree(const PolyMap& f, const StarCertificate& certificate,
                               std::uint64_t seed, const AnalysisOptions& options = {},
                               std::vector<GenericDraw>* draws = nullptr);

/// deg_T P_G(0, T).
std::uint64_t mu_at_zero(const PolyMap& f, const StarCertificate& certificate,
                         const AnalysisOptions& options = {});

/// geometric_degree - mu_at_zero. A negative difference is retried once with a
/// fresh seed, then reported as InconsistencyError.
std::uint64_t delta0(const PolyMap& f, const StarCertificate& certificate, std::uint64_t seed,
                     const AnalysisOptions& options = {});

ExponentBounds exponent_bounds(std::span<const unsigned> degrees, std::uint64_t mu,
                               std::uint64_t delta0);

Classification classify(std::uint64_t d_of_f, std::uint64_t delta0);

/// Throws InconsistencyError when a report invariant fails.
void check_report_invariants(const AnalysisReport& report);

/// Full pipeline: certify G at infinity, slice P_G at 0 and at generic w, derive exponents.
/// When no G is certified the report has hypothesis_certified = false.
AnalysisReport analyze(const PolyMap& f, const AnalysisOptions& options = {});

}  // namespace lojinf
