#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "newton.hpp"
#include "prime.hpp"

namespace vfilt {

enum class FiltrationKind {
  ordinary,        // I^n
  symbolic_minass, // intersection over minimal primes of I^n localized
  symbolic_ass,    // saturation at the variables avoiding every Ass(I)
  generalized,     // saturation of I^n at a caller-chosen ideal L
  closure,         // integral closure of I^n
  explicit_table,  // caller-supplied ideals indexed from n = 0
};

inline std::string to_string(FiltrationKind kind) {
  switch (kind) {
    case FiltrationKind::ordinary: return "ordinary";
    case FiltrationKind::symbolic_minass: return "symbolic_minass";
    case FiltrationKind::symbolic_ass: return "symbolic_ass";
    case FiltrationKind::generalized: return "generalized";
    case FiltrationKind::closure: return "closure";
    case FiltrationKind::explicit_table: return "explicit_table";
  }
  throw internal_error("unknown filtration kind");
}

/// A graded family of ideals F(0) = R, F(1), F(2), ... described by how to
/// produce the n-th member.
class FiltrationSpec {
public:
  static FiltrationSpec ordinary(MonomialIdeal base) {
    return FiltrationSpec(FiltrationKind::ordinary, std::move(base));
  }
  static FiltrationSpec symbolic_minass(MonomialIdeal base) {
    return FiltrationSpec(FiltrationKind::symbolic_minass, std::move(base));
  }
  /// The multiplier defaults to the product of the variables lying in no
  /// associated prime of the base (the unit ideal when every variable is
  /// covered, in which case the family is just the ordinary powers).
  static FiltrationSpec symbolic_ass(MonomialIdeal base) {
    FiltrationSpec spec(FiltrationKind::symbolic_ass, base);
    std::vector<bool> covered(base.num_vars(), false);
    for (const auto& p : associated_primes(base))
      for (auto i : p.support()) covered[i] = true;
    std::vector<Int> e(base.num_vars(), Int(0));
    for (std::size_t i = 0; i < covered.size(); ++i)
      if (!covered[i]) e[i] = 1;
    spec.multiplier_ = principal(base.ring(), Monomial(std::move(e)));
    return spec;
  }
  static FiltrationSpec generalized(MonomialIdeal base,
                                    MonomialIdeal multiplier) {
    require_same_ring(base.ring(), multiplier.ring(), "generalized filtration");
    if (multiplier.is_zero())
      throw domain_error("generalized filtration: zero multiplier");
    FiltrationSpec spec(FiltrationKind::generalized, std::move(base));
    spec.multiplier_ = std::move(multiplier);
    return spec;
  }
  static FiltrationSpec closure(MonomialIdeal base) {
    return FiltrationSpec(FiltrationKind::closure, std::move(base));
  }
  static FiltrationSpec explicit_table(RingPtr ring,
                                       std::vector<MonomialIdeal> table) {
    if (table.empty())
      throw domain_error("explicit filtration: empty table");
    for (const auto& ideal : table)
      require_same_ring(ring, ideal.ring(), "explicit filtration");
    if (!table.front().is_unit())
      throw domain_error("explicit filtration: entry 0 must be the unit ideal");
    FiltrationSpec spec(FiltrationKind::explicit_table, std::move(ring));
    spec.table_ = std::move(table);
    return spec;
  }

  FiltrationKind kind() const noexcept { return kind_; }
  const RingPtr& ring() const noexcept { return ring_; }

  const MonomialIdeal& base() const {
    if (!base_)
      throw domain_error("explicit filtration has no base ideal");
    return *base_;
  }
  const MonomialIdeal& multiplier() const {
    if (!multiplier_)
      throw domain_error("filtration has no saturation multiplier");
    return *multiplier_;
  }
  const std::vector<MonomialIdeal>& table() const {
    if (kind_ != FiltrationKind::explicit_table)
      throw domain_error("filtration has no explicit table");
    return table_;
  }

private:
  FiltrationSpec(FiltrationKind kind, MonomialIdeal base)
      : kind_(kind), ring_(base.ring()), base_(std::move(base)) {
    if (base_->is_zero() || base_->is_unit())
      throw domain_error("filtration base must be a proper nonzero ideal");
  }
  FiltrationSpec(FiltrationKind kind, RingPtr ring)
      : kind_(kind), ring_(std::move(ring)) {}

  FiltrationKind kind_;
  RingPtr ring_;
  std::optional<MonomialIdeal> base_;
  std::optional<MonomialIdeal> multiplier_;
  std::vector<MonomialIdeal> table_;
};

namespace detail {

/// J localized at the monomial prime p and pulled back: saturate at the
/// product of the variables outside p.
inline MonomialIdeal localize_at(const MonomialIdeal& ideal,
                                 const MonomialPrime& p) {
  std::vector<Int> e(ideal.num_vars(), Int(0));
  std::vector<bool> in_p(ideal.num_vars(), false);
  for (auto i : p.support()) in_p[i] = true;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!in_p[i]) e[i] = 1;
  return saturation(ideal, principal(ideal.ring(), Monomial(std::move(e))));
}

}  // namespace detail

inline MonomialIdeal evaluate(const FiltrationSpec& spec, const Int& n) {
  if (n < 0) throw domain_error("filtration index must be nonnegative");
  switch (spec.kind()) {
    case FiltrationKind::ordinary:
      return power(spec.base(), n);
    case FiltrationKind::symbolic_minass: {
      if (n == 0) return MonomialIdeal::unit(spec.ring());
      const MonomialIdeal pw = power(spec.base(), n);
      std::vector<MonomialIdeal> parts;
      for (const auto& p : minimal_primes(spec.base()))
        parts.push_back(detail::localize_at(pw, p));
      return intersect(parts, spec.ring());
    }
    case FiltrationKind::symbolic_ass:
    case FiltrationKind::generalized:
      if (n == 0) return MonomialIdeal::unit(spec.ring());
      return saturation(power(spec.base(), n), spec.multiplier());
    case FiltrationKind::closure:
      return closure_power(spec.base(), n);
    case FiltrationKind::explicit_table: {
      const auto& table = spec.table();
      if (n >= table.size())
        throw domain_error("explicit filtration: index " + n.str() +
                           " is outside the table");
      return table[n.convert_to<std::size_t>()];
    }
  }
  throw internal_error("unknown filtration kind");
}

/// Symbolic power of a squarefree ideal as the intersection of the n-th
/// powers of its associated primes.
inline MonomialIdeal symbolic_power_via_primes(const MonomialIdeal& ideal,
                                               const Int& n) {
  if (!is_squarefree(ideal))
    throw domain_error("symbolic_power_via_primes requires a squarefree ideal");
  if (ideal.is_zero() || ideal.is_unit())
    throw domain_error("symbolic_power_via_primes requires a proper nonzero ideal");
  if (n < 0) throw domain_error("filtration index must be nonnegative");
  if (n == 0) return MonomialIdeal::unit(ideal.ring());
  std::vector<MonomialIdeal> parts;
  for (const auto& p : associated_primes(ideal))
    parts.push_back(power(p.as_ideal(), n));
  return intersect(parts, ideal.ring());
}

struct SvdResult {
  Int e;      // F(e*n) == F(e)^n for every checked n
  Int n_max;  // range of n the equality was checked on
};

/// Smallest e <= e_max with F(e*n) = F(e)^n for all n <= n_max, if any.
inline std::optional<SvdResult> svd_detect(const FiltrationSpec& spec,
                                           const Int& e_max,
                                           const Int& n_max) {
  if (e_max < 1 || n_max < 1)
    throw domain_error("svd_detect requires positive bounds");
  for (Int e = 1; e <= e_max; ++e) {
    const MonomialIdeal f_e = evaluate(spec, e);
    bool ok = true;
    for (Int n = 2; n <= n_max && ok; ++n)
      ok = (evaluate(spec, e * n) == power(f_e, n));
    if (ok) return SvdResult{e, n_max};
  }
  return std::nullopt;
}

/// Smallest n0 such that Ass(F(n)) is the same set for every n in
/// [n0, n_max].
inline Int ass_stabilization_index(const FiltrationSpec& spec,
                                   const Int& n_max) {
  if (n_max < 1) throw domain_error("ass_stabilization_index requires n_max >= 1");
  std::vector<std::vector<MonomialPrime>> ass_by_n;
  for (Int n = 1; n <= n_max; ++n)
    ass_by_n.push_back(associated_primes(evaluate(spec, n)));
  std::size_t n0 = ass_by_n.size();  // 1-based index of the last entry
  while (n0 > 1 && ass_by_n[n0 - 2] == ass_by_n.back()) --n0;
  return Int(n0);
}

}  // namespace vfilt
