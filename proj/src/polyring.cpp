#include "lojinf/polyring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lojinf/errors.hpp"

namespace lojinf {

std::string to_string(const Rational& q) { return q.get_str(); }

unsigned Exponent::total_degree() const noexcept {
  return std::accumulate(powers_.begin(), powers_.end(), 0u);
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.arity() != b.arity()) throw ArityError("exponent arity mismatch");
  std::vector<unsigned> sum(a.arity());
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
  return Exponent(std::move(sum));
}

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = a.total_degree();
  const unsigned db = b.total_degree();
  if (da != db) return da > db;
  return a.powers() > b.powers();
}

unsigned Degree::value() const {
  if (!value_) throw std::logic_error("degree of the zero polynomial is minus infinity");
  return *value_;
}

std::string to_string(const Degree& d) {
  return d.is_minus_infinity() ? std::string("-inf") : std::to_string(d.value());
}

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw std::invalid_argument("polynomial arity must be positive");
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
  MultiPoly p(arity);
  p.add_term(Exponent(arity), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw std::out_of_range("variable index out of range");
  Exponent e(arity);
  e[index] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(e.arity());
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::linear(std::span<const Rational> coefficients) {
  MultiPoly p(coefficients.size());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    Exponent e(coefficients.size());
    e[i] = 1;
    p.add_term(e, coefficients[i]);
  }
  return p;
}

Degree MultiPoly::total_degree() const {
  // The first key in graded order has maximal total degree.
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree(terms_.begin()->first.total_degree());
}

Degree MultiPoly::degree_in(std::size_t index) const {
  if (index >= arity_) throw std::out_of_range("variable index out of range");
  if (terms_.empty()) return Degree::minus_infinity();
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e[index]);
  return Degree(best);
}

bool MultiPoly::is_homogeneous_of_degree(unsigned d) const {
  if (terms_.empty()) return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.total_degree() == d; });
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.arity() != arity_) throw ArityError("term arity does not match polynomial arity");
  if (c == 0) return;
  Rational q(c);
  q.canonicalize();
  auto [it, inserted] = terms_.try_emplace(e, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_arity(const MultiPoly& other) const {
  if (other.arity_ != arity_)
    throw ArityError("arity mismatch: " + std::to_string(arity_) + " vs " +
                     std::to_string(other.arity_));
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  MultiPoly r(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(arity_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw ArityError("evaluation point has wrong length");
  // Cache powers per variable; exponents are small.
  std::vector<std::vector<Rational>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) powers[i].push_back(Rational(1));
  auto power_of = [&](std::size_t i, unsigned k) -> const Rational& {
    auto& cache = powers[i];
    while (cache.size() <= k) cache.push_back(cache.back() * point[i]);
    return cache[k];
  };
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i)
      if (e[i] != 0) term *= power_of(i, e[i]);
    sum += term;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != arity_) throw ArityError("substitution needs one image per variable");
  const std::size_t target = images.front().arity();
  for (const auto& q : images)
    if (q.arity() != target) throw ArityError("substitution images differ in arity");

  std::vector<std::vector<MultiPoly>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) powers[i].push_back(constant(target, 1));
  auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  MultiPoly result(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (std::size_t i = 0; i < arity_; ++i)
      if (e[i] != 0) term = term * power_of(i, e[i]);
    result += term;
  }
  return result;
}

MultiPoly MultiPoly::specialize(std::size_t index, const Rational& value) const {
  if (index >= arity_) throw std::out_of_range("variable index out of range");
  MultiPoly result(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent reduced = e;
    reduced[index] = 0;
    Rational factor = 1;
    for (unsigned k = 0; k < e[index]; ++k) factor *= value;
    result.add_term(reduced, c * factor);
  }
  return result;
}

MultiPoly scalar_multiply(const Rational& c, const MultiPoly& p) { return c * p; }

std::vector<std::string> default_variable_names(std::size_t arity, std::string_view stem,
                                                std::size_t first_index) {
  std::vector<std::string> names;
  names.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i)
    names.push_back(std::string(stem) + std::to_string(first_index + i));
  return names;
}

std::string to_string(const MultiPoly& p, std::span<const std::string> names) {
  if (names.size() != p.arity()) throw ArityError("wrong number of variable names");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;

    bool wrote_factor = false;
    if (magnitude != 1 || e.total_degree() == 0) {
      out << magnitude.get_str();
      wrote_factor = true;
    }
    for (std::size_t i = 0; i < e.arity(); ++i) {
      if (e[i] == 0) continue;
      if (wrote_factor) out << '*';
      out << names[i];
      if (e[i] > 1) out << '^' << e[i];
      wrote_factor = true;
    }
  }
  return out.str();
}

std::string to_string(const MultiPoly& p) {
  const auto names = default_variable_names(p.arity());
  return to_string(p, names);
}

MultiPoly homogenize(const MultiPoly& p, unsigned d) {
  if (p.is_zero()) throw std::invalid_argument("cannot homogenize the zero polynomial");
  if (p.total_degree().value() > d)
    throw std::invalid_argument("homogenization degree " + std::to_string(d) +
                                " is below the total degree " + to_string(p.total_degree()));
  MultiPoly form(p.arity() + 1);
  for (const auto& [e, c] : p.terms()) {
    std::vector<unsigned> powers(p.arity() + 1);
    powers[0] = d - e.total_degree();
    std::copy(e.powers().begin(), e.powers().end(), powers.begin() + 1);
    form.add_term(Exponent(std::move(powers)), c);
  }
  return form;
}

MultiPoly dehomogenize(const MultiPoly& form) {
  if (form.arity() < 2) throw ArityError("dehomogenize needs at least two variables");
  MultiPoly p(form.arity() - 1);
  for (const auto& [e, c] : form.terms())
    p.add_term(Exponent(std::vector<unsigned>(e.powers().begin() + 1, e.powers().end())), c);
  return p;
}

MultiPoly leading_form(const MultiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("leading form of the zero polynomial");
  const unsigned d = p.total_degree().value();
  MultiPoly lead(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e.total_degree() != d) break;
    lead.add_term(e, c);
  }
  return lead;
}

PolyMap::PolyMap(std::vector<MultiPoly> components, std::vector<std::string> variable_names)
    : components_(std::move(components)), names_(std::move(variable_names)) {
  const std::size_t n = components_.size();
  if (n == 0) throw std::invalid_argument("a polynomial map needs at least one component");
  if (names_.empty()) names_ = default_variable_names(n, "z", 1);
  if (names_.size() != n)
    throw ArityError("number of polynomials (" + std::to_string(n) +
                     ") differs from number of variables (" + std::to_string(names_.size()) + ")");
  degrees_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (components_[i].arity() != n)
      throw ArityError("component " + std::to_string(i + 1) + " has arity " +
                       std::to_string(components_[i].arity()) + ", expected " + std::to_string(n));
    const Degree d = components_[i].total_degree();
    if (d.is_minus_infinity() || d.value() == 0)
      throw std::invalid_argument("component " + std::to_string(i + 1) +
                                  " is constant; every component needs degree >= 1");
    degrees_.push_back(d.value());
  }
}

std::uint64_t PolyMap::bezout_number() const {
  std::uint64_t product = 1;
  for (unsigned d : degrees_) {
    if (product > std::numeric_limits<std::uint64_t>::max() / d)
      throw std::overflow_error("Bezout number exceeds 64 bits");
    product *= d;
  }
  return product;
}

unsigned PolyMap::min_degree() const { return *std::min_element(degrees_.begin(), degrees_.end()); }

std::vector<Rational> PolyMap::evaluate(std::span<const Rational> point) const {
  std::vector<Rational> values;
  values.reserve(n());
  for (const auto& f : components_) values.push_back(f.evaluate(point));
  return values;
}

std::vector<MultiPoly> PolyMap::homogenized() const {
  std::vector<MultiPoly> forms;
  forms.reserve(n());
  for (std::size_t i = 0; i < n(); ++i) forms.push_back(homogenize(components_[i], degrees_[i]));
  return forms;
}

namespace {

Rational determinant(const IntMatrix& matrix) {
  const std::size_t n = matrix.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = matrix[i][j];
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

}  // namespace

PolyMap apply_linear_change(const PolyMap& f, const IntMatrix& matrix) {
  const std::size_t n = f.n();
  if (matrix.size() != n) throw ArityError("linear change has wrong dimension");
  for (const auto& row : matrix)
    if (row.size() != n) throw ArityError("linear change must be square");
  if (determinant(matrix) == 0) throw std::invalid_argument("linear change is singular");

  std::vector<MultiPoly> images;
  images.reserve(n);
  for (const auto& row : matrix) {
    std::vector<Rational> coefficients(row.begin(), row.end());
    images.push_back(MultiPoly::linear(coefficients));
  }
  std::vector<MultiPoly> changed;
  changed.reserve(n);
  for (const auto& component : f.components()) changed.push_back(component.substitute(images));
  return PolyMap(std::move(changed), f.variable_names());
}

LinearChange random_linear_change(const PolyMap& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  const std::size_t n = f.n();
  IntMatrix matrix(n, std::vector<long>(n));
  do {
    for (auto& row : matrix)
      for (auto& x : row) x = entry(rng);
  } while (determinant(matrix) == 0);
  return LinearChange{matrix, apply_linear_change(f, matrix)};
}

}  // namespace lojinf
