#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "numbers.hpp"

namespace vfilt {

namespace detail {

/// Decides max { sum lambda : sum_i lambda_i * col_i <= rhs, lambda >= 0 }
/// >= target by exact rational simplex (Bland's rule, so it terminates).
/// The all-slack basis is feasible since rhs >= 0, and the program is
/// bounded whenever every column is nonzero; an unbounded ray still means
/// the target is reached.
inline bool max_lambda_sum_reaches(
    const std::vector<std::vector<Rational>>& cols,
    const std::vector<Rational>& rhs, const Rational& target) {
  if (target <= 0) return true;
  const std::size_t l = cols.size();
  const std::size_t m = rhs.size();
  const std::size_t ncols = l + m;

  std::vector<std::vector<Rational>> t(m,
                                       std::vector<Rational>(ncols + 1, 0));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t i = 0; i < l; ++i) t[r][i] = cols[i][r];
    t[r][l + r] = 1;
    t[r][ncols] = rhs[r];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) basis[r] = l + r;

  // Minimize c.x with c_i = -1 on the lambda columns; reduced costs start
  // at c because the slack basis has zero cost.
  std::vector<Rational> obj(ncols, 0);
  for (std::size_t i = 0; i < l; ++i) obj[i] = -1;

  const std::size_t npos = static_cast<std::size_t>(-1);
  for (;;) {
    Rational lambda_sum = 0;
    for (std::size_t r = 0; r < m; ++r)
      if (basis[r] < l) lambda_sum += t[r][ncols];
    if (lambda_sum >= target) return true;

    std::size_t enter = npos;
    for (std::size_t j = 0; j < ncols; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == npos) return false;  // optimal and still below target

    std::size_t leave = npos;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][ncols] / t[r][enter];
      if (leave == npos || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == npos) return true;  // unbounded ray increases the sum

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j <= ncols; ++j) t[r][j] -= f * t[leave][j];
    }
    const Rational fo = obj[enter];
    if (fo != 0)
      for (std::size_t j = 0; j < ncols; ++j) obj[j] -= fo * t[leave][j];
    basis[leave] = enter;
  }
}

}  // namespace detail

/// Newton polyhedron of a proper nonzero monomial ideal: the convex hull of
/// the generator exponents plus the nonnegative orthant.
class NewtonPolyhedron {
public:
  explicit NewtonPolyhedron(MonomialIdeal ideal) : ideal_(std::move(ideal)) {
    if (ideal_.is_zero() || ideal_.is_unit())
      throw domain_error("Newton polyhedron requires a proper nonzero ideal");
  }

  const MonomialIdeal& ideal() const noexcept { return ideal_; }

  /// Whether point lies in n times the polyhedron, i.e. there are
  /// lambda_i >= 0 with sum lambda_i = n and sum lambda_i a_i <= point.
  /// Scaling a solution with larger sum down to exactly n keeps the
  /// inequalities valid, so this reduces to max sum lambda >= n.
  bool contains(const Monomial& point, const Int& n = 1) const {
    if (n < 0) throw domain_error("Newton polyhedron: negative multiple");
    if (point.size() != ideal_.num_vars())
      throw ring_mismatch_error("Newton polyhedron: dimension mismatch");
    const auto& gens = ideal_.generators();
    std::vector<std::vector<Rational>> cols;
    cols.reserve(gens.size());
    for (const auto& g : gens) {
      std::vector<Rational> col(point.size());
      for (std::size_t j = 0; j < point.size(); ++j) col[j] = g.exp(j);
      cols.push_back(std::move(col));
    }
    std::vector<Rational> rhs(point.size());
    for (std::size_t j = 0; j < point.size(); ++j) rhs[j] = point.exp(j);
    return detail::max_lambda_sum_reaches(cols, rhs, Rational(n));
  }

private:
  MonomialIdeal ideal_;
};

/// Whether f lies in the integral closure of I^n.
inline bool closure_membership(const MonomialIdeal& ideal, const Monomial& f,
                               const Int& n = 1) {
  return NewtonPolyhedron(ideal).contains(f, n);
}

namespace detail {

/// Visits all exponent vectors within bounds whose total degree is exactly
/// deg, in descending lexicographic order.
template <typename Visit>
inline void walk_degree_slice(const std::vector<long>& bounds,
                              std::vector<long>& e, std::size_t idx, long deg,
                              Visit&& visit) {
  if (idx + 1 == e.size()) {
    if (deg <= bounds[idx]) {
      e[idx] = deg;
      visit(const_cast<const std::vector<long>&>(e));
    }
    return;
  }
  for (long val = std::min(bounds[idx], deg); val >= 0; --val) {
    e[idx] = val;
    walk_degree_slice(bounds, e, idx + 1, deg - val, visit);
  }
}

}  // namespace detail

/// Integral closure of I^n, computed from the Newton polyhedron: the minimal
/// generators lie in the box [0, n*d_j] (d_j the maximum exponent of
/// variable j over G(I)) because clamping a coordinate down to n*d_j never
/// breaks membership in n times the polyhedron.
inline MonomialIdeal closure_power(const MonomialIdeal& ideal, const Int& n) {
  if (n < 0) throw domain_error("closure power requires n >= 0");
  if (n == 0) return MonomialIdeal::unit(ideal.ring());
  if (ideal.is_zero() || ideal.is_unit()) return ideal;

  const std::size_t nvars = ideal.num_vars();
  std::vector<long> bounds(nvars, 0);
  Int box_size = 1;
  long total = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    Int d = 0;
    for (const auto& g : ideal.generators()) d = std::max(d, g.exp(j));
    Int nd = n * d;
    if (nd > 1000000)
      throw scale_limit_error("closure power: exponent range too large");
    bounds[j] = nd.convert_to<long>();
    total += bounds[j];
    box_size *= nd + 1;
    if (box_size > 2000000)
      throw scale_limit_error("closure power: search box too large");
  }

  NewtonPolyhedron np(ideal);
  std::vector<Monomial> found;
  std::vector<long> e(nvars, 0);
  for (long deg = 0; deg <= total; ++deg) {
    detail::walk_degree_slice(
        bounds, e, 0, deg, [&](const std::vector<long>& point) {
          Monomial m{std::vector<Int>(point.begin(), point.end())};
          for (const auto& g : found)
            if (g.divides(m)) return;  // already inside the ideal found so far
          if (np.contains(m, n)) found.push_back(std::move(m));
        });
  }
  return MonomialIdeal(ideal.ring(), std::move(found));
}

}  // namespace vfilt
