#pragma once

#include <span>
#include <vector>

#include "lojinf/polyring.hpp"

namespace lojinf {

/// Ascending monomial coefficients of the unique polynomial of degree
/// < nodes.size() through (nodes[i], values[i]). Nodes must be distinct.
std::vector<Rational> interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

/// Horner evaluation of ascending coefficients.
Rational evaluate_univariate(std::span<const Rational> coefficients, const Rational& x);

/// Tensor-grid interpolation on integer nodes 0, 1, ..., dims[a]-1 along every
/// axis. `values` is row-major (last axis fastest); the result has the same
/// layout and holds the coefficient of prod_a x_a^{k_a} at index (k_0, ...).
std::vector<Rational> interpolate_grid(std::vector<Rational> values,
                                       std::span<const std::size_t> dims);

/// Ascending coefficients to an arity-1 MultiPoly.
MultiPoly univariate_from_coefficients(std::span<const Rational> coefficients);

}  // namespace lojinf
