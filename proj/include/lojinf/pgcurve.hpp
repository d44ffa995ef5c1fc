#pragma once

// P_G(W, T) = Res_Z~( F~_1 - W_1 Z_0^{d_1}, ..., F~_n - W_n Z_0^{d_n}, G(Z) - T Z_0 )
// built by exact evaluation and interpolation of scalar Macaulay resultants.

#include <cstdint>
#include <vector>

#include "lojinf/macaulay.hpp"
#include "lojinf/polyring.hpp"

namespace lojinf {

/// G = c_1 Z_1 + ... + c_n Z_n, not all c_i zero.
class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coefficients);
  /// The coordinate form Z_{index+1}.
  static LinearForm coordinate(std::size_t n, std::size_t index);

  std::size_t n() const noexcept { return coefficients_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  Rational evaluate(std::span<const Rational> z) const;
  /// c_1 Z_1 + ... + c_n Z_n as a form in (Z_0, ..., Z_n).
  MultiPoly projective() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Rational> coefficients_;
};

std::string to_string(const LinearForm& g);

/// Res(F~_1, ..., F~_n, s0 Z_0 + G) != 0: no common projective zero with the
/// hyperplane, hence V(F~_1, ..., F~_n, Z_0, G) is empty and V(F~_1, ..., F~_n) is finite.
struct StarCertificate {
  LinearForm g;
  Rational s0;
  ResultantValue witness;
  bool implies_finiteness = true;
};

struct PGSlice {
  std::vector<Rational> w;
  MultiPoly poly_in_t{1};
  std::uint64_t degree_bound_used = 0;
  std::vector<Rational> nodes;

  bool identically_zero() const { return poly_in_t.is_zero(); }
  /// deg_T; minus infinity for the zero polynomial.
  Degree degree() const { return poly_in_t.total_degree(); }
};

struct PGFull {
  /// Variables (W_1, ..., W_n, T), T last.
  MultiPoly poly{1};
  std::vector<std::uint64_t> w_degree_bounds;
  std::uint64_t t_degree_bound = 0;
};

struct PgOptions {
  ResultantOptions resultant;
  unsigned certificate_attempts = 16;
  /// Random linear forms tried after the coordinate forms.
  unsigned random_form_budget = 32;
  std::size_t grid_cap = 20000;
};

/// The system (F~_i - w_i Z_0^{d_i})_i, G - t Z_0.
FormSystem pg_form_system(const PolyMap& f, const LinearForm& g, std::span<const Rational> w,
                          const Rational& t);

/// Scalar value P_G(w, t).
Rational pg_value(const PolyMap& f, const LinearForm& g, std::span<const Rational> w,
                  const Rational& t, const ResultantOptions& options = {});

/// Throws CertificationError after `attempts` vanishing witnesses.
StarCertificate certify_star(const PolyMap& f, const LinearForm& g, unsigned attempts,
                             std::uint64_t seed, const ResultantOptions& options = {});

/// Z_1, ..., Z_n first, then random small-integer forms. Throws CertificationError
/// when the budget is exhausted.
StarCertificate choose_g(const PolyMap& f, std::uint64_t seed, const PgOptions& options = {});

/// Up to `count` distinct certified forms, in the same order choose_g tries them.
std::vector<StarCertificate> certified_forms(const PolyMap& f, std::size_t count,
                                             std::uint64_t seed, const PgOptions& options = {});

/// T -> P_G(w, T) by interpolation at T = 0, 1, ..., d_1 ... d_n.
PGSlice pg_slice(const PolyMap& f, const LinearForm& g, std::span<const Rational> w,
                 const ResultantOptions& options = {});

/// Full P_G(W, T) by tensor-grid interpolation. Throws GridCapError above the cap.
PGFull pg_full(const PolyMap& f, const LinearForm& g, const PgOptions& options = {});

/// Number of scalar resultants pg_full would evaluate.
std::uint64_t pg_full_grid_size(const PolyMap& f);

}  // namespace lojinf
