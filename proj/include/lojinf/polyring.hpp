#pragma once

// Exact multivariate polynomials over Q, polynomial maps C^n -> C^n and
// (de)homogenization.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lojinf {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text of a rational: "a" or "a/b".
std::string to_string(const Rational& q);

/// Exponent vector of a monomial.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(std::size_t arity) : powers_(arity, 0) {}
  explicit Exponent(std::vector<unsigned> powers) : powers_(std::move(powers)) {}
  Exponent(std::initializer_list<unsigned> powers) : powers_(powers) {}

  std::size_t arity() const noexcept { return powers_.size(); }
  unsigned operator[](std::size_t i) const { return powers_[i]; }
  unsigned& operator[](std::size_t i) { return powers_[i]; }
  const std::vector<unsigned>& powers() const noexcept { return powers_; }
  unsigned total_degree() const noexcept;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

 private:
  std::vector<unsigned> powers_;
};

Exponent operator+(const Exponent& a, const Exponent& b);

/// Graded lexicographic order, largest first: higher total degree precedes,
/// ties broken lexicographically with x_0 > x_1 > ...
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Total degree with an explicit sentinel for the zero polynomial.
class Degree {
 public:
  static constexpr Degree minus_infinity() { return Degree(); }
  constexpr explicit Degree(unsigned value) : value_(value) {}

  constexpr bool is_minus_infinity() const noexcept { return !value_.has_value(); }
  /// Precondition: !is_minus_infinity().
  unsigned value() const;

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity())
      return !a.is_minus_infinity() <=> !b.is_minus_infinity();
    return *a.value_ <=> *b.value_;
  }

 private:
  constexpr Degree() = default;
  std::optional<unsigned> value_;
};

std::string to_string(const Degree& d);

/// Sparse polynomial with exact rational coefficients. No stored coefficient
/// is zero; the zero polynomial has no terms.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexGreater>;

  explicit MultiPoly(std::size_t arity);

  static MultiPoly constant(std::size_t arity, const Rational& c);
  static MultiPoly variable(std::size_t arity, std::size_t index);
  static MultiPoly monomial(const Exponent& e, const Rational& c);
  /// Sum of c_i * x_i.
  static MultiPoly linear(std::span<const Rational> coefficients);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Degree total_degree() const;
  /// Maximal power of variable `index` occurring in the polynomial.
  Degree degree_in(std::size_t index) const;
  /// True when every term has total degree `d`. The zero polynomial is not homogeneous.
  bool is_homogeneous_of_degree(unsigned d) const;
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e in place.
  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Composition p(q_0, ..., q_{k-1}); all images must share one arity.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Substitutes value for variable `index`, keeping the arity.
  MultiPoly specialize(std::size_t index, const Rational& value) const;

 private:
  void check_arity(const MultiPoly& other) const;

  std::size_t arity_;
  TermMap terms_;
};

MultiPoly scalar_multiply(const Rational& c, const MultiPoly& p);

/// Names "x0", "x1", ... for printing when none are supplied.
std::vector<std::string> default_variable_names(std::size_t arity, std::string_view stem = "x",
                                                std::size_t first_index = 0);

/// Prints in the system-file expression grammar, e.g. "3/2*z1^2*z2 - z1 + 1".
std::string to_string(const MultiPoly& p, std::span<const std::string> names);
std::string to_string(const MultiPoly& p);

/// Homogeneous form of degree d in (Z_0, Z_1, ..., Z_n) with Z_0 at index 0.
/// Throws std::invalid_argument when p is zero or d < deg p.
MultiPoly homogenize(const MultiPoly& p, unsigned d);

/// Sets Z_0 = 1 and drops it.
MultiPoly dehomogenize(const MultiPoly& form);

/// Sum of the terms of maximal total degree. Throws for the zero polynomial.
MultiPoly leading_form(const MultiPoly& p);

/// A polynomial mapping F = (F_1, ..., F_n) : C^n -> C^n with every deg F_i >= 1.
class PolyMap {
 public:
  PolyMap(std::vector<MultiPoly> components, std::vector<std::string> variable_names = {});

  std::size_t n() const noexcept { return components_.size(); }
  const std::vector<MultiPoly>& components() const noexcept { return components_; }
  const MultiPoly& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }

  /// Product of the component degrees; throws on 64-bit overflow.
  std::uint64_t bezout_number() const;
  unsigned min_degree() const;

  std::vector<Rational> evaluate(std::span<const Rational> point) const;
  /// Homogenized components F~_i in (Z_0, ..., Z_n), each of degree d_i.
  std::vector<MultiPoly> homogenized() const;

 private:
  std::vector<MultiPoly> components_;
  std::vector<unsigned> degrees_;
  std::vector<std::string> names_;
};

using IntMatrix = std::vector<std::vector<long>>;

struct LinearChange {
  IntMatrix matrix;  ///< z -> matrix * z
  PolyMap result;
};

/// F(A z) for an explicit square integer matrix A. Throws when A is singular.
PolyMap apply_linear_change(const PolyMap& f, const IntMatrix& matrix);

/// F(A z) for a random invertible A with entries in [-3, 3].
LinearChange random_linear_change(const PolyMap& f, std::uint64_t seed);

}  // namespace lojinf
