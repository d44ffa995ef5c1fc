#include "lojinf/pgcurve.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <random>
#include <set>
#include <thread>

#include "detail/seed.hpp"
#include "lojinf/errors.hpp"
#include "lojinf/interpolate.hpp"

namespace lojinf {

LinearForm::LinearForm(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw std::invalid_argument("linear form needs at least one coefficient");
  if (std::all_of(coefficients_.begin(), coefficients_.end(), [](const Rational& c) { return c == 0; }))
    throw std::invalid_argument("linear form has all coefficients zero");
}

LinearForm LinearForm::coordinate(std::size_t n, std::size_t index) {
  if (index >= n) throw std::out_of_range("coordinate index out of range");
  std::vector<Rational> c(n, Rational(0));
  c[index] = 1;
  return LinearForm(std::move(c));
}

Rational LinearForm::evaluate(std::span<const Rational> z) const {
  if (z.size() != n()) throw ArityError("linear form evaluated at a point of wrong length");
  Rational sum = 0;
  for (std::size_t i = 0; i < n(); ++i) sum += coefficients_[i] * z[i];
  return sum;
}

MultiPoly LinearForm::projective() const {
  std::vector<Rational> c(n() + 1, Rational(0));
  std::copy(coefficients_.begin(), coefficients_.end(), c.begin() + 1);
  return MultiPoly::linear(c);
}

std::string to_string(const LinearForm& g) {
  const auto names = default_variable_names(g.n() + 1, "Z");
  return to_string(g.projective(), names);
}

FormSystem pg_form_system(const PolyMap& f, const LinearForm& g, std::span<const Rational> w,
                          const Rational& t) {
  const std::size_t n = f.n();
  if (w.size() != n) throw ArityError("w must have one entry per component");
  if (g.n() != n) throw ArityError("linear form has the wrong number of coefficients");

  std::vector<MultiPoly> forms = f.homogenized();
  std::vector<unsigned> degrees = f.degrees();
  for (std::size_t i = 0; i < n; ++i) {
    Exponent z0(n + 1);
    z0[0] = degrees[i];
    forms[i].add_term(z0, -w[i]);
  }
  MultiPoly last = g.projective();
  Exponent z0(n + 1);
  z0[0] = 1;
  last.add_term(z0, -t);
  forms.push_back(std::move(last));
  degrees.push_back(1);
  return FormSystem(std::move(forms), std::move(degrees));
}

Rational pg_value(const PolyMap& f, const LinearForm& g, std::span<const Rational> w,
                  const Rational& t, const ResultantOptions& options) {
  return resultant(pg_form_system(f, g, w, t), options).value;
}

StarCertificate certify_star(const PolyMap& f, const LinearForm& g, unsigned attempts,
                             std::uint64_t seed, const ResultantOptions& options) {
  const std::vector<Rational> zero(f.n(), Rational(0));
  std::mt19937_64 rng(seed);
  std::set<long> tried;
  long range = 10;
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    long s;
    do {
      if (tried.size() >= static_cast<std::size_t>(2 * range + 1)) range *= 2;
      s = std::uniform_int_distribution<long>(-range, range)(rng);
    } while (!tried.insert(s).second);

    // Res(F~, s0 Z_0 + G) is P_G(0, -s0).
    const Rational s0(s);
    ResultantValue witness = resultant(pg_form_system(f, g, zero, -s0), options);
    if (!witness.is_zero()) return StarCertificate{g, s0, std::move(witness), true};
  }
  throw CertificationError("cannot certify V(F~_1, ..., F~_n, Z_0, G) = {} for G = " + to_string(g) +
                           " after " + std::to_string(attempts) + " attempts");
}

namespace {

/// Visits candidate forms in choose_g order until `visit` returns false.
template <typename Visit>
void for_each_candidate(const PolyMap& f, std::uint64_t seed, const PgOptions& options, Visit visit) {
  const std::size_t n = f.n();
  std::vector<LinearForm> seen;
  auto fresh = [&](const LinearForm& g) {
    if (std::find(seen.begin(), seen.end(), g) != seen.end()) return false;
    seen.push_back(g);
    return true;
  };

  std::uint64_t stream = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const LinearForm g = LinearForm::coordinate(n, i);
    fresh(g);
    if (!visit(g, detail::mix_seed(seed, stream++))) return;
  }

  std::mt19937_64 rng(detail::mix_seed(seed, 0xf0f0));
  std::uniform_int_distribution<long> coefficient(-5, 5);
  unsigned drawn = 0;
  unsigned guard = 0;
  while (drawn < options.random_form_budget && guard++ < 100 * (options.random_form_budget + 1)) {
    std::vector<Rational> c(n);
    bool all_zero = true;
    for (auto& x : c) {
      x = coefficient(rng);
      all_zero = all_zero && x == 0;
    }
    if (all_zero) continue;
    LinearForm g(std::move(c));
    if (!fresh(g)) continue;
    ++drawn;
    if (!visit(g, detail::mix_seed(seed, stream++))) return;
  }
}

}  // namespace

std::vector<StarCertificate> certified_forms(const PolyMap& f, std::size_t count,
                                             std::uint64_t seed, const PgOptions& options) {
  std::vector<StarCertificate> found;
  if (count == 0) return found;
  for_each_candidate(f, seed, options, [&](const LinearForm& g, std::uint64_t s) {
    try {
      found.push_back(certify_star(f, g, options.certificate_attempts, s, options.resultant));
    } catch (const CertificationError&) {
    }
    return found.size() < count;
  });
  return found;
}

StarCertificate choose_g(const PolyMap& f, std::uint64_t seed, const PgOptions& options) {
  auto found = certified_forms(f, 1, seed, options);
  if (found.empty())
    throw CertificationError(
        "growth theorem hypothesis could not be certified; V(F~_1, ..., F~_n) is likely infinite");
  return std::move(found.front());
}

PGSlice pg_slice(const PolyMap& f, const LinearForm& g, std::span<const Rational> w,
                 const ResultantOptions& options) {
  PGSlice slice;
  slice.w.assign(w.begin(), w.end());
  slice.degree_bound_used = f.bezout_number();
  std::vector<Rational> values;
  for (std::uint64_t t = 0; t <= slice.degree_bound_used; ++t) {
    slice.nodes.emplace_back(static_cast<unsigned long>(t));
    values.push_back(pg_value(f, g, w, slice.nodes.back(), options));
  }
  slice.poly_in_t = univariate_from_coefficients(interpolate(slice.nodes, values));
  if (!slice.identically_zero() && slice.degree().value() > slice.degree_bound_used)
    throw InconsistencyError("P_G slice exceeds the Bezout degree bound");
  return slice;
}

std::uint64_t pg_full_grid_size(const PolyMap& f) {
  const std::uint64_t bezout = f.bezout_number();
  std::uint64_t size = bezout + 1;
  for (unsigned d : f.degrees()) {
    const std::uint64_t axis = bezout / d + 1;
    if (size > std::numeric_limits<std::uint64_t>::max() / axis)
      return std::numeric_limits<std::uint64_t>::max();
    size *= axis;
  }
  return size;
}

PGFull pg_full(const PolyMap& f, const LinearForm& g, const PgOptions& options) {
  const std::size_t n = f.n();
  const std::uint64_t grid = pg_full_grid_size(f);
  if (grid > options.grid_cap)
    throw GridCapError("P_G interpolation grid has " + std::to_string(grid) +
                       " nodes, above the cap of " + std::to_string(options.grid_cap));

  PGFull full;
  full.t_degree_bound = f.bezout_number();
  std::vector<std::size_t> dims;
  for (unsigned d : f.degrees()) {
    full.w_degree_bounds.push_back(full.t_degree_bound / d);
    dims.push_back(full.w_degree_bounds.back() + 1);
  }
  dims.push_back(full.t_degree_bound + 1);

  auto node_of = [&](std::size_t flat) {
    std::vector<Rational> coords(n + 1);
    for (std::size_t a = n + 1; a-- > 0;) {
      coords[a] = static_cast<unsigned long>(flat % dims[a]);
      flat /= dims[a];
    }
    return coords;
  };

  // Grid nodes are independent; each worker fills a disjoint slot range.
  std::vector<Rational> values(grid);
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(1, grid / 8));
  std::vector<std::future<void>> jobs;
  for (std::size_t k = 0; k < workers; ++k) {
    jobs.push_back(std::async(std::launch::async, [&, k] {
      for (std::size_t flat = k; flat < grid; flat += workers) {
        const auto coords = node_of(flat);
        const std::span<const Rational> w(coords.data(), n);
        values[flat] = pg_value(f, g, w, coords[n], options.resultant);
      }
    }));
  }
  for (auto& job : jobs) job.get();

  const auto coefficients = interpolate_grid(std::move(values), dims);
  full.poly = MultiPoly(n + 1);
  for (std::size_t flat = 0; flat < coefficients.size(); ++flat) {
    if (coefficients[flat] == 0) continue;
    std::vector<unsigned> powers(n + 1);
    std::size_t rest = flat;
    for (std::size_t a = n + 1; a-- > 0;) {
      powers[a] = static_cast<unsigned>(rest % dims[a]);
      rest /= dims[a];
    }
    full.poly.add_term(Exponent(std::move(powers)), coefficients[flat]);
  }
  return full;
}

}  // namespace lojinf
