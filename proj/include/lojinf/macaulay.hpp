#pragma once

// Resultant of m homogeneous forms in m variables via the classical Macaulay
// quotient det(M) / det(M'), with an exact perturbation fallback when the
// extraneous minor M' is singular.
//
// Rows and columns of M are indexed by the same graded-lex list of degree-D
// monomials, so det(M) does not depend on that ordering. The resulting value
// is normalized by Res(x_1^{d_1}, ..., x_m^{d_m}) = 1.

#include <cstddef>
#include <vector>

#include "lojinf/polyring.hpp"

namespace lojinf {

/// m homogeneous, non-zero forms in m variables.
class FormSystem {
 public:
  /// Degrees are taken from the forms. Throws on arity or homogeneity violations.
  explicit FormSystem(std::vector<MultiPoly> forms);
  /// Checks each form against its declared degree.
  FormSystem(std::vector<MultiPoly> forms, std::vector<unsigned> degrees);

  std::size_t size() const noexcept { return forms_.size(); }
  const std::vector<MultiPoly>& forms() const noexcept { return forms_; }
  const MultiPoly& operator[](std::size_t i) const { return forms_[i]; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }

 private:
  void validate() const;

  std::vector<MultiPoly> forms_;
  std::vector<unsigned> degrees_;
};

/// Dense row-major matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Principal submatrix on `indices` (same rows and columns).
  RationalMatrix principal_submatrix(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct ResultantOptions {
  std::size_t max_matrix_size = 5000;
};

struct MacaulayMatrix {
  unsigned critical_degree = 0;            ///< D = sum(d_i) - m + 1
  std::vector<Exponent> monomials;         ///< degree-D monomials, graded-lex, largest first
  std::vector<std::size_t> row_class;      ///< smallest i with a_i >= d_i, per monomial
  RationalMatrix entries;                  ///< row r = (x^a / x_i^{d_i}) * H_i, i = row_class[r]
  std::vector<std::size_t> minor_indices;  ///< monomials divisible by x_j^{d_j} for >= 2 indices j

  std::size_t size() const noexcept { return monomials.size(); }
};

enum class ResultantMethod { direct_quotient, perturbation_interpolation };

const char* to_string(ResultantMethod method);

struct ResultantValue {
  Rational value;
  ResultantMethod method = ResultantMethod::direct_quotient;

  bool is_zero() const { return value == 0; }
};

/// All exponents of total degree `degree` in `arity` variables, graded-lex largest first.
std::vector<Exponent> monomials_of_degree(std::size_t arity, unsigned degree);

MacaulayMatrix build_matrix(const FormSystem& system, const ResultantOptions& options = {});

/// Exact determinant by Bareiss elimination on the denominator-cleared matrix.
Rational det_fraction_free(const RationalMatrix& matrix);

ResultantValue resultant(const FormSystem& system, const ResultantOptions& options = {});

/// Sylvester determinant of two binary forms in (x_0, x_1), coefficients
/// ordered by descending power of x_0.
Rational sylvester_oracle(const MultiPoly& p, const MultiPoly& q);

}  // namespace lojinf
