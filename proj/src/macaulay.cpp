#include "lojinf/macaulay.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lojinf/errors.hpp"
#include "lojinf/interpolate.hpp"

namespace lojinf {

FormSystem::FormSystem(std::vector<MultiPoly> forms) : forms_(std::move(forms)) {
  degrees_.reserve(forms_.size());
  for (const auto& f : forms_) {
    if (f.is_zero()) throw std::invalid_argument("form system contains the zero polynomial");
    degrees_.push_back(f.total_degree().value());
  }
  validate();
}

FormSystem::FormSystem(std::vector<MultiPoly> forms, std::vector<unsigned> degrees)
    : forms_(std::move(forms)), degrees_(std::move(degrees)) {
  if (degrees_.size() != forms_.size())
    throw std::invalid_argument("one declared degree per form is required");
  validate();
}

void FormSystem::validate() const {
  const std::size_t m = forms_.size();
  if (m == 0) throw std::invalid_argument("empty form system");
  for (std::size_t i = 0; i < m; ++i) {
    const MultiPoly& f = forms_[i];
    if (f.arity() != m)
      throw ArityError("form " + std::to_string(i + 1) + " has " + std::to_string(f.arity()) +
                       " variables; a system of " + std::to_string(m) + " forms needs " +
                       std::to_string(m));
    if (f.is_zero()) throw std::invalid_argument("form " + std::to_string(i + 1) + " is zero");
    if (degrees_[i] == 0)
      throw std::invalid_argument("form " + std::to_string(i + 1) + " has degree 0");
    if (!f.is_homogeneous_of_degree(degrees_[i]))
      throw std::invalid_argument("form " + std::to_string(i + 1) +
                                  " is not homogeneous of degree " + std::to_string(degrees_[i]));
  }
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

RationalMatrix RationalMatrix::principal_submatrix(const std::vector<std::size_t>& indices) const {
  RationalMatrix sub(indices.size(), indices.size());
  for (std::size_t r = 0; r < indices.size(); ++r)
    for (std::size_t c = 0; c < indices.size(); ++c) sub(r, c) = (*this)(indices[r], indices[c]);
  return sub;
}

const char* to_string(ResultantMethod method) {
  switch (method) {
    case ResultantMethod::direct_quotient:
      return "direct_quotient";
    case ResultantMethod::perturbation_interpolation:
      return "perturbation_interpolation";
  }
  return "unknown";
}

namespace {

void append_monomials(std::size_t arity, unsigned degree, std::vector<unsigned>& prefix,
                      std::vector<Exponent>& out) {
  if (prefix.size() + 1 == arity) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (unsigned k = degree + 1; k-- > 0;) {
    prefix.push_back(k);
    append_monomials(arity, degree - k, prefix, out);
    prefix.pop_back();
  }
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(std::size_t arity, unsigned degree) {
  if (arity == 0) throw std::invalid_argument("arity must be positive");
  std::vector<Exponent> out;
  std::vector<unsigned> prefix;
  prefix.reserve(arity);
  append_monomials(arity, degree, prefix, out);
  return out;
}

MacaulayMatrix build_matrix(const FormSystem& system, const ResultantOptions& options) {
  const std::size_t m = system.size();
  const auto& degrees = system.degrees();
  const unsigned sum = std::accumulate(degrees.begin(), degrees.end(), 0u);

  MacaulayMatrix mm;
  mm.critical_degree = sum - static_cast<unsigned>(m) + 1;
  const Integer size = binomial(mm.critical_degree + m - 1, m - 1);
  if (size > options.max_matrix_size)
    throw MatrixSizeError("Macaulay matrix would have " + size.get_str() +
                          " columns, above the limit of " + std::to_string(options.max_matrix_size));

  mm.monomials = monomials_of_degree(m, mm.critical_degree);
  const std::size_t n = mm.monomials.size();
  mm.entries = RationalMatrix(n, n);
  mm.row_class.resize(n);

  const GradedLexGreater order;
  auto column_of = [&](const Exponent& e) {
    auto it = std::lower_bound(mm.monomials.begin(), mm.monomials.end(), e, order);
    return static_cast<std::size_t>(it - mm.monomials.begin());
  };

  for (std::size_t r = 0; r < n; ++r) {
    const Exponent& a = mm.monomials[r];
    std::size_t cls = m;
    std::size_t reduced_count = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (a[j] >= degrees[j]) {
        if (cls == m) cls = j;
        ++reduced_count;
      }
    }
    // D > sum(d_i - 1) guarantees at least one index qualifies.
    mm.row_class[r] = cls;
    if (reduced_count >= 2) mm.minor_indices.push_back(r);

    Exponent shift = a;
    shift[cls] -= degrees[cls];
    for (const auto& [e, c] : system[cls].terms()) mm.entries(r, column_of(shift + e)) = c;
  }
  return mm;
}

Rational det_fraction_free(const RationalMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = matrix.rows();
  if (n == 0) return 1;

  std::vector<Integer> a(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer lcm = 1;
    for (std::size_t c = 0; c < n; ++c) {
      const Integer& den = matrix(r, c).get_den();
      if (den != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t c = 0; c < n; ++c) {
      const Rational& q = matrix(r, c);
      a[r * n + c] = q.get_num() * (lcm / q.get_den());
    }
    scale *= lcm;
  }

  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  int sign = 1;
  Integer previous = 1;
  Integer t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(k, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = at(k, k);
  }
  Rational det(at(n - 1, n - 1) * sign, scale);
  det.canonicalize();
  return det;
}

ResultantValue resultant(const FormSystem& system, const ResultantOptions& options) {
  const MacaulayMatrix mm = build_matrix(system, options);
  const RationalMatrix minor = mm.entries.principal_submatrix(mm.minor_indices);

  const Rational minor_det = det_fraction_free(minor);
  if (minor_det != 0)
    return {det_fraction_free(mm.entries) / minor_det, ResultantMethod::direct_quotient};

  // Perturbation H_i + u x_i^{d_i}: the row of monomial x^a gains u * x^a, so the
  // perturbed matrices are M + uI and M' + uI. Res is a polynomial in u of
  // degree at most sum_i prod_{j != i} d_j.
  const auto& degrees = system.degrees();
  Integer bound_z = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    Integer prod = 1;
    for (std::size_t j = 0; j < degrees.size(); ++j)
      if (j != i) prod *= degrees[j];
    bound_z += prod;
  }
  if (!bound_z.fits_ulong_p()) throw NodeExhaustionError("perturbation degree bound too large");
  const unsigned long bound = bound_z.get_ui();

  std::vector<Rational> nodes;
  std::vector<Rational> values;
  unsigned long rejected = 0;
  for (long u = 0; nodes.size() < bound + 1; ++u) {
    RationalMatrix shifted = mm.entries;
    for (std::size_t k = 0; k < shifted.rows(); ++k) shifted(k, k) += u;
    RationalMatrix shifted_minor = minor;
    for (std::size_t k = 0; k < shifted_minor.rows(); ++k) shifted_minor(k, k) += u;

    const Rational d = det_fraction_free(shifted_minor);
    if (d == 0) {
      if (++rejected > 10 * bound)
        throw NodeExhaustionError("perturbation fallback rejected " + std::to_string(rejected) +
                                  " nodes; pathological system");
      continue;
    }
    nodes.emplace_back(u);
    values.push_back(det_fraction_free(shifted) / d);
  }
  const auto coeffs = interpolate(nodes, values);
  return {coeffs.front(), ResultantMethod::perturbation_interpolation};
}

Rational sylvester_oracle(const MultiPoly& p, const MultiPoly& q) {
  for (const MultiPoly* f : {&p, &q}) {
    if (f->arity() != 2) throw ArityError("Sylvester oracle needs binary forms");
    if (f->is_zero()) throw std::invalid_argument("Sylvester oracle: zero form");
    const unsigned d = f->total_degree().value();
    if (d == 0 || !f->is_homogeneous_of_degree(d))
      throw std::invalid_argument("Sylvester oracle: input is not a form of positive degree");
  }
  const unsigned a = p.total_degree().value();
  const unsigned b = q.total_degree().value();
  const std::size_t n = a + b;

  RationalMatrix s(n, n);
  for (unsigned r = 0; r < b; ++r)
    for (unsigned k = 0; k <= a; ++k) s(r, r + k) = p.coefficient(Exponent{a - k, k});
  for (unsigned r = 0; r < a; ++r)
    for (unsigned k = 0; k <= b; ++k) s(b + r, r + k) = q.coefficient(Exponent{b - k, k});
  return det_fraction_free(s);
}

}  // namespace lojinf
