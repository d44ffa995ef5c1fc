#include "lojinf/interpolate.hpp"

#include <numeric>
#include <stdexcept>

namespace lojinf {

std::vector<Rational> interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  const std::size_t n = nodes.size();
  if (values.size() != n) throw std::invalid_argument("interpolate: nodes/values length mismatch");
  if (n == 0) return {};

  // Newton divided differences, in place.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = nodes[i] - nodes[i - level];
      if (gap == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }

  // Expand the Newton form into the monomial basis (Horner on the basis).
  std::vector<Rational> coeffs(n, Rational(0));
  coeffs[0] = dd[n - 1];
  std::size_t len = 1;
  for (std::size_t k = n - 1; k-- > 0;) {
    // coeffs <- coeffs * (x - nodes[k]) + dd[k]
    coeffs[len] = coeffs[len - 1];
    for (std::size_t j = len - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - nodes[k] * coeffs[j];
    coeffs[0] = -nodes[k] * coeffs[0] + dd[k];
    ++len;
  }
  return coeffs;
}

Rational evaluate_univariate(std::span<const Rational> coefficients, const Rational& x) {
  Rational acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> interpolate_grid(std::vector<Rational> values,
                                       std::span<const std::size_t> dims) {
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (values.size() != total) throw std::invalid_argument("interpolate_grid: size mismatch");

  std::size_t stride = total;
  for (std::size_t axis = 0; axis < dims.size(); ++axis) {
    const std::size_t len = dims[axis];
    stride /= len;
    std::vector<Rational> nodes(len);
    for (std::size_t k = 0; k < len; ++k) nodes[k] = static_cast<long>(k);

    const std::size_t outer = total / (len * stride);
    std::vector<Rational> line(len);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t s = 0; s < stride; ++s) {
        const std::size_t base = o * len * stride + s;
        for (std::size_t k = 0; k < len; ++k) line[k] = values[base + k * stride];
        const auto coeffs = interpolate(nodes, line);
        for (std::size_t k = 0; k < len; ++k) values[base + k * stride] = coeffs[k];
      }
    }
  }
  return values;
}

MultiPoly univariate_from_coefficients(std::span<const Rational> coefficients) {
  MultiPoly p(1);
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    p.add_term(Exponent{static_cast<unsigned>(k)}, coefficients[k]);
  return p;
}

}  // namespace lojinf
