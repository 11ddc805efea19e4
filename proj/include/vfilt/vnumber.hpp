#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "parallel.hpp"
#include "prime.hpp"

namespace vfilt {

/// A local v-number together with the prime it belongs to and a witness
/// monomial f of minimum degree with (I : f) = p.
struct VResult {
  Int value;
  MonomialPrime prime;
  Monomial witness;

  friend bool operator==(const VResult& a, const VResult& b) {
    return a.value == b.value && a.prime == b.prime && a.witness == b.witness;
  }
};

/// Local v-number of I at an associated prime p, with Ass(I) supplied by the
/// caller. Computes A = (I : p) and B = A meet sat(I, q_p); the minimum
/// generator degree of A outside B is the value, and the witness is the
/// first minimum-degree generator whose colon is exactly p.
inline VResult local_v(const MonomialIdeal& ideal, const MonomialPrime& p,
                       const std::vector<MonomialPrime>& ass) {
  require_same_ring(ideal.ring(), p.ring(), "local_v");
  if (ideal.is_zero() || ideal.is_unit())
    throw domain_error("local v-number requires a proper nonzero ideal");
  if (std::find(ass.begin(), ass.end(), p) == ass.end())
    throw domain_error("local v-number: " + to_string(p) +
                       " is not an associated prime");

  const MonomialIdeal p_ideal = p.as_ideal();
  const MonomialIdeal a = colon_ideal(ideal, p_ideal);
  const MonomialIdeal b =
      intersect(a, saturation(ideal, q_p(ass, p, ideal.ring())));

  std::optional<Int> best;
  for (const auto& g : a.generators()) {
    if (b.contains(g)) continue;
    if (!best || g.degree() < *best) best = g.degree();
  }
  if (!best)
    throw internal_error("local v-number: no candidate generator at " +
                         to_string(p));
  for (const auto& g : a.generators()) {
    if (g.degree() != *best || b.contains(g)) continue;
    if (colon(ideal, g) == p_ideal) return VResult{*best, p, g};
  }
  throw internal_error(
      "local v-number: no minimum-degree candidate has colon exactly " +
      to_string(p));
}

inline VResult local_v(const MonomialIdeal& ideal, const MonomialPrime& p) {
  return local_v(ideal, p, associated_primes(ideal));
}

/// Local v-numbers at every associated prime, in canonical prime order.
inline std::vector<VResult> local_v_all(const MonomialIdeal& ideal) {
  const auto ass = associated_primes(ideal);
  return parallel_map(
      ass, [&](const MonomialPrime& p) { return local_v(ideal, p, ass); });
}

/// The v-number: minimum of the local v-numbers. Ties go to the first prime
/// in canonical order.
inline VResult v(const MonomialIdeal& ideal) {
  const auto all = local_v_all(ideal);
  if (all.empty())
    throw internal_error("v-number: no associated primes found");
  const VResult* best = &all.front();
  for (const auto& r : all)
    if (r.value < best->value) best = &r;
  return *best;
}

/// Brute-force check: scans monomials in increasing total degree (canonical
/// order within a degree) for the first f with (I : f) = p. Per-variable
/// exponents are bounded by the maximum exponent of that variable over G(I);
/// clamping an exponent down to that bound never changes the colon, so the
/// scan is exhaustive. Degrees above the cap (default: the quotient-method
/// value) are not searched; returns nullopt when nothing is found.
inline std::optional<VResult> local_v_oracle(
    const MonomialIdeal& ideal, const MonomialPrime& p,
    std::optional<Int> degree_cap = std::nullopt) {
  require_same_ring(ideal.ring(), p.ring(), "local_v_oracle");
  if (ideal.is_zero() || ideal.is_unit())
    throw domain_error("local v-number requires a proper nonzero ideal");
  const Int cap = degree_cap ? *degree_cap : local_v(ideal, p).value;

  const std::size_t nvars = ideal.num_vars();
  std::vector<long> bounds(nvars, 0);
  Int box_size = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    Int d = 0;
    for (const auto& g : ideal.generators()) d = std::max(d, g.exp(i));
    if (d > 1000000)
      throw scale_limit_error("local_v_oracle: exponent too large to scan");
    bounds[i] = d.convert_to<long>();
    box_size *= d + 1;
    if (box_size > 4000000)
      throw scale_limit_error("local_v_oracle: search box too large");
  }

  std::vector<Monomial> box;
  box.reserve(box_size.convert_to<std::size_t>());
  std::vector<long> e(nvars, 0);
  for (;;) {
    Monomial m{std::vector<Int>(e.begin(), e.end())};
    if (m.degree() <= cap) box.push_back(std::move(m));
    std::size_t i = 0;
    while (i < nvars && e[i] == bounds[i]) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  std::sort(box.begin(), box.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_greater(a, b);
  });

  const MonomialIdeal p_ideal = p.as_ideal();
  for (const auto& m : box)
    if (colon(ideal, m) == p_ideal) return VResult{m.degree(), p, m};
  return std::nullopt;
}

}  // namespace vfilt
