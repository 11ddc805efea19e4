#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "monomial.hpp"
#include "numbers.hpp"
#include "ring.hpp"

namespace vfilt {

/// Monomial ideal, held by its unique minimal generators: an antichain under
/// divisibility, sorted in the canonical (decreasing lex) order. The empty
/// generator set is the zero ideal; {identity} is the unit ideal R.
class MonomialIdeal {
public:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators)
      : ring_(std::move(ring)) {
    if (!ring_) throw domain_error("monomial ideal requires a ring context");
    for (const auto& g : generators)
      if (g.size() != ring_->size())
        throw ring_mismatch_error(
            "minimalize: generator dimension does not match ring");
    gens_ = reduce(std::move(generators));
  }

  static MonomialIdeal zero(RingPtr ring) {
    return MonomialIdeal(std::move(ring), {});
  }

  static MonomialIdeal unit(RingPtr ring) {
    std::size_t n = ring->size();
    return MonomialIdeal(std::move(ring), {Monomial::identity(n)});
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t num_vars() const noexcept { return ring_->size(); }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && gens_[0].is_identity();
  }
  /// Proper: neither the unit ideal nor (vacuously) undefined; zero is proper.
  bool is_proper() const noexcept { return !is_unit(); }

  bool contains(const Monomial& f) const {
    if (f.size() != ring_->size())
      throw ring_mismatch_error("contains: monomial does not match ring");
    for (const auto& g : gens_)
      if (g.divides(f)) return true;
    return false;
  }

  bool contains_ideal(const MonomialIdeal& other) const {
    require_same_ring(ring_, other.ring_, "contains_ideal");
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

private:
  /// Dedupe, drop every monomial divisible by another, sort canonically.
  static std::vector<Monomial> reduce(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), lex_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
        if (j != i && gens[j].divides(gens[i])) redundant = true;
      if (!redundant) kept.push_back(gens[i]);
    }
    return kept;
  }

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// Divisibility-antichain generating the same ideal (spec name for the ctor).
inline MonomialIdeal minimalize(std::vector<Monomial> gens, RingPtr ring) {
  return MonomialIdeal(std::move(ring), std::move(gens));
}

inline MonomialIdeal principal(RingPtr ring, Monomial m) {
  return MonomialIdeal(std::move(ring), {std::move(m)});
}

inline bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a == b;
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "sum");
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "product");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g * h);
  return MonomialIdeal(a.ring(), std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& a, const Int& n) {
  if (n < 0) throw domain_error("ideal power must be nonnegative");
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  for (Int t = 0; t < n; ++t) result = product(result, a);
  return result;
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return MonomialIdeal(a.ring(), std::move(gens));
}

/// n-ary intersection; folds pairwise, minimalizing after every step.
/// The empty intersection is the unit ideal.
inline MonomialIdeal intersect(const std::vector<MonomialIdeal>& ideals,
                               const RingPtr& ring) {
  MonomialIdeal result = MonomialIdeal::unit(ring);
  for (const auto& ideal : ideals) result = intersect(result, ideal);
  return result;
}

inline MonomialIdeal colon(const MonomialIdeal& a, const Monomial& f) {
  if (f.size() != a.num_vars())
    throw ring_mismatch_error("colon: monomial does not match ring");
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) gens.push_back(g.colon_by(f));
  return MonomialIdeal(a.ring(), std::move(gens));
}

inline MonomialIdeal colon_ideal(const MonomialIdeal& a,
                                 const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "colon_ideal");
  if (b.is_zero()) throw domain_error("colon by the zero ideal is undefined");
  bool first = true;
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  for (const auto& g : b.generators()) {
    MonomialIdeal c = colon(a, g);
    result = first ? std::move(c) : intersect(result, c);
    first = false;
  }
  return result;
}

/// I : J^infinity, via the ascending colon chain (terminates by ACC).
inline MonomialIdeal saturation(const MonomialIdeal& a,
                                const MonomialIdeal& b) {
  MonomialIdeal current = a;
  for (;;) {
    MonomialIdeal next = colon_ideal(current, b);
    if (next == current) return current;
    current = std::move(next);
  }
}

/// Least total degree among minimal generators.
inline Int alpha(const MonomialIdeal& a) {
  if (a.is_zero()) throw domain_error("alpha of the zero ideal is undefined");
  Int best = a.generators().front().degree();
  for (const auto& g : a.generators()) {
    Int d = g.degree();
    if (d < best) best = d;
  }
  return best;
}

inline MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size());
  for (const auto& g : a.generators()) {
    std::vector<Int> e(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) e[i] = g.exp(i) > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

inline bool is_squarefree(const MonomialIdeal& a) {
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

/// Render like "(x^2, x*y^4)"; "(0)" for the zero ideal.
inline std::string to_string(const MonomialIdeal& a) {
  if (a.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(*a.ring(), a.generators()[i]);
  }
  return out + ")";
}

}  // namespace vfilt
