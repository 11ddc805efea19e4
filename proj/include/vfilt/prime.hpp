#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"

namespace vfilt {

/// Monomial prime: the ideal generated by a nonempty set of variables,
/// stored as the sorted list of variable indices (its support).
class MonomialPrime {
public:
  MonomialPrime(RingPtr ring, std::vector<std::size_t> support)
      : ring_(std::move(ring)), support_(std::move(support)) {
    if (!ring_) throw domain_error("monomial prime requires a ring context");
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()),
                   support_.end());
    if (support_.empty())
      throw domain_error("monomial prime requires nonempty support");
    if (support_.back() >= ring_->size())
      throw ring_mismatch_error("monomial prime support exceeds ring dimension");
  }

  static MonomialPrime from_names(const RingPtr& ring,
                                  const std::vector<std::string>& names) {
    std::vector<std::size_t> supp;
    supp.reserve(names.size());
    for (const auto& n : names) supp.push_back(ring->index_of(n));
    return MonomialPrime(ring, std::move(supp));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  std::size_t height() const noexcept { return support_.size(); }

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    out.reserve(support_.size());
    for (auto i : support_) out.push_back(ring_->name(i));
    return out;
  }

  bool contains(const MonomialPrime& other) const {
    return std::includes(support_.begin(), support_.end(),
                         other.support_.begin(), other.support_.end());
  }

  bool strictly_contains(const MonomialPrime& other) const {
    return support_.size() > other.support_.size() && contains(other);
  }

  MonomialIdeal as_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(support_.size());
    for (auto i : support_)
      gens.push_back(Monomial::variable(ring_->size(), i));
    return MonomialIdeal(ring_, std::move(gens));
  }

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return same_ring(a.ring_, b.ring_) && a.support_ == b.support_;
  }
  friend bool operator!=(const MonomialPrime& a, const MonomialPrime& b) {
    return !(a == b);
  }
  /// Canonical prime order: lexicographic on the sorted support sequences.
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
    return a.support_ < b.support_;
  }

private:
  RingPtr ring_;
  std::vector<std::size_t> support_;
};

inline std::string to_string(const MonomialPrime& p) {
  std::string out = "(";
  const auto& supp = p.support();
  for (std::size_t k = 0; k < supp.size(); ++k) {
    if (k > 0) out += ",";
    out += p.ring()->name(supp[k]);
  }
  return out + ")";
}

/// Irreducible monomial ideal (x_i^{a_i} : i in dom), as a partial map from
/// variable index to a positive exponent.
struct IrreducibleComponent {
  RingPtr ring;
  std::vector<std::pair<std::size_t, Int>> exps;  // sorted by variable index

  MonomialIdeal as_ideal() const {
    std::vector<Monomial> gens;
    gens.reserve(exps.size());
    for (const auto& [i, a] : exps)
      gens.push_back(Monomial::variable(ring->size(), i, a));
    return MonomialIdeal(ring, std::move(gens));
  }

  MonomialPrime support() const {
    std::vector<std::size_t> supp;
    supp.reserve(exps.size());
    for (const auto& [i, a] : exps) supp.push_back(i);
    return MonomialPrime(ring, std::move(supp));
  }

  friend bool operator==(const IrreducibleComponent& a,
                         const IrreducibleComponent& b) {
    return a.exps == b.exps;
  }
  friend bool operator<(const IrreducibleComponent& a,
                        const IrreducibleComponent& b) {
    return a.exps < b.exps;
  }
};

/// D is contained in C as ideals: every generator x_j^{b} of D lies in C,
/// i.e. C has x_j^{a} with a <= b.
inline bool component_contained_in(const IrreducibleComponent& d,
                                   const IrreducibleComponent& c) {
  for (const auto& [j, b] : d.exps) {
    auto it = std::lower_bound(
        c.exps.begin(), c.exps.end(), j,
        [](const auto& entry, std::size_t idx) { return entry.first < idx; });
    if (it == c.exps.end() || it->first != j || it->second > b) return false;
  }
  return true;
}

namespace detail {

inline std::string ideal_key(const MonomialIdeal& ideal) {
  std::string key;
  for (const auto& g : ideal.generators()) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      key += g.exp(i).str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

/// Splits on the lowest variable index occurring in a mixed generator; the
/// canonical-first such generator keeps the recursion deterministic.
inline void decompose_rec(
    const MonomialIdeal& ideal,
    std::unordered_map<std::string, std::vector<IrreducibleComponent>>& memo,
    std::vector<IrreducibleComponent>& out) {
  const std::string key = ideal_key(ideal);
  if (auto it = memo.find(key); it != memo.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
    return;
  }

  std::size_t split_var = ideal.num_vars();
  const Monomial* split_gen = nullptr;
  for (const auto& g : ideal.generators()) {
    if (g.support().size() < 2) continue;  // pure power or identity
    std::size_t lowest = g.support().front();
    if (lowest < split_var) {
      split_var = lowest;
      split_gen = &g;
    }
  }

  std::vector<IrreducibleComponent> comps;
  if (split_gen == nullptr) {
    // Base case: every generator is a pure power x_i^{a_i}; after
    // minimalization each variable occurs at most once.
    IrreducibleComponent c{ideal.ring(), {}};
    for (const auto& g : ideal.generators()) {
      auto supp = g.support();
      c.exps.emplace_back(supp.front(), g.exp(supp.front()));
    }
    std::sort(c.exps.begin(), c.exps.end());
    comps.push_back(std::move(c));
  } else {
    const Monomial& g = *split_gen;
    const std::size_t nvars = ideal.num_vars();
    Monomial pure = Monomial::variable(nvars, split_var, g.exp(split_var));
    std::vector<Int> rest = g.exponents();
    rest[split_var] = 0;
    Monomial tail{std::move(rest)};

    std::vector<IrreducibleComponent> merged;
    decompose_rec(sum(ideal, principal(ideal.ring(), pure)), memo, merged);
    decompose_rec(sum(ideal, principal(ideal.ring(), tail)), memo, merged);

    // Dedupe and drop components containing another component.
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    for (std::size_t i = 0; i < merged.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < merged.size() && !redundant; ++j)
        if (j != i && component_contained_in(merged[j], merged[i]))
          redundant = true;
      if (!redundant) comps.push_back(merged[i]);
    }
  }

  memo.emplace(key, comps);
  out.insert(out.end(), comps.begin(), comps.end());
}

}  // namespace detail

/// Reference implementation via the splitting recursion. Exponential on
/// large inputs; kept as an independent cross-check for the dual-based
/// production routine below.
inline std::vector<IrreducibleComponent> irreducible_decomposition_by_splitting(
    const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw domain_error("irreducible decomposition of the zero ideal");
  if (ideal.is_unit())
    throw domain_error("irreducible decomposition of the unit ideal");

  std::unordered_map<std::string, std::vector<IrreducibleComponent>> memo;
  std::vector<IrreducibleComponent> comps;
  detail::decompose_rec(ideal, memo, comps);

  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());

  // Pairwise prefilter, then the full redundancy filter.
  std::vector<IrreducibleComponent> kept;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      if (j != i && component_contained_in(comps[j], comps[i]))
        redundant = true;
    if (!redundant) kept.push_back(comps[i]);
  }

  bool changed = true;
  while (changed && kept.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      std::vector<MonomialIdeal> others;
      others.reserve(kept.size() - 1);
      for (std::size_t j = 0; j < kept.size(); ++j)
        if (j != i) others.push_back(kept[j].as_ideal());
      MonomialIdeal inter = intersect(others, ideal.ring());
      if (kept[i].as_ideal().contains_ideal(inter)) {
        kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return kept;
}

/// Irredundant irreducible decomposition. The intersection of the returned
/// components equals I and no component contains the intersection of the
/// others.
///
/// Computed through Alexander duality with respect to the componentwise
/// maximum exponent vector a: the dual of I is the intersection, over the
/// generators g of I, of (x_i^{a_i + 1 - g_i} : g_i >= 1), and the minimal
/// generators b of the dual correspond bijectively to the irredundant
/// irreducible components (x_i^{a_i + 1 - b_i} : b_i >= 1) of I. This
/// produces the same unique decomposition as the splitting recursion while
/// staying polynomial in the sizes of the input and output.
inline std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal) {
  if (ideal.is_zero())
    throw domain_error("irreducible decomposition of the zero ideal");
  if (ideal.is_unit())
    throw domain_error("irreducible decomposition of the unit ideal");

  const std::size_t nvars = ideal.num_vars();
  std::vector<Int> bound(nvars, 0);
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < nvars; ++i)
      bound[i] = std::max(bound[i], g.exp(i));

  std::vector<MonomialIdeal> pieces;
  pieces.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    std::vector<Monomial> duals;
    for (std::size_t i = 0; i < nvars; ++i)
      if (g.exp(i) >= 1)
        duals.push_back(Monomial::variable(nvars, i, bound[i] + 1 - g.exp(i)));
    pieces.emplace_back(ideal.ring(), std::move(duals));
  }

  // Balanced fold keeps the intermediate generating sets small.
  while (pieces.size() > 1) {
    std::vector<MonomialIdeal> next;
    next.reserve(pieces.size() / 2 + 1);
    for (std::size_t k = 0; k + 1 < pieces.size(); k += 2)
      next.push_back(intersect(pieces[k], pieces[k + 1]));
    if (pieces.size() % 2 == 1) next.push_back(pieces.back());
    pieces = std::move(next);
  }

  // Minimal dual generators are exactly the irredundant components, so no
  // further redundancy filtering is required.
  std::vector<IrreducibleComponent> comps;
  comps.reserve(pieces.front().generators().size());
  for (const auto& b : pieces.front().generators()) {
    IrreducibleComponent c{ideal.ring(), {}};
    for (std::size_t i = 0; i < nvars; ++i)
      if (b.exp(i) >= 1) c.exps.emplace_back(i, bound[i] + 1 - b.exp(i));
    comps.push_back(std::move(c));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

inline std::vector<MonomialPrime> associated_primes(
    const MonomialIdeal& ideal) {
  auto comps = irreducible_decomposition(ideal);
  std::vector<MonomialPrime> primes;
  primes.reserve(comps.size());
  for (const auto& c : comps) primes.push_back(c.support());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

inline std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  auto ass = associated_primes(ideal);
  std::vector<MonomialPrime> minimal;
  for (const auto& p : ass) {
    bool is_min = true;
    for (const auto& q : ass)
      if (p.strictly_contains(q)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(p);
  }
  return minimal;
}

/// Maximal height among the associated primes.
inline std::size_t bight(const MonomialIdeal& ideal) {
  std::size_t best = 0;
  for (const auto& p : associated_primes(ideal))
    best = std::max(best, p.height());
  return best;
}

/// Product of the associated primes strictly containing p; the unit ideal
/// when none exist. Overload for callers that already computed Ass(I).
inline MonomialIdeal q_p(const std::vector<MonomialPrime>& ass,
                         const MonomialPrime& p, const RingPtr& ring) {
  if (std::find(ass.begin(), ass.end(), p) == ass.end())
    throw domain_error("q_p: prime " + to_string(p) +
                       " is not an associated prime");
  MonomialIdeal result = MonomialIdeal::unit(ring);
  for (const auto& q : ass)
    if (q.strictly_contains(p)) result = product(result, q.as_ideal());
  return result;
}

inline MonomialIdeal q_p(const MonomialIdeal& ideal, const MonomialPrime& p) {
  return q_p(associated_primes(ideal), p, ideal.ring());
}

}  // namespace vfilt
