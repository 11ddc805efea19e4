#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numbers.hpp"
#include "ring.hpp"

namespace vfilt {

/// Exponent vector of fixed length. The identity monomial is all zeros;
/// degree is the coordinate sum (total degree).
class Monomial {
public:
  explicit Monomial(std::vector<Int> exponents) : e_(std::move(exponents)) {
    for (const auto& a : e_)
      if (a < 0) throw domain_error("monomial exponents must be nonnegative");
  }

  static Monomial identity(std::size_t nvars) {
    return Monomial(std::vector<Int>(nvars, Int(0)));
  }

  static Monomial variable(std::size_t nvars, std::size_t i, Int power = Int(1)) {
    std::vector<Int> e(nvars, Int(0));
    e.at(i) = std::move(power);
    return Monomial(std::move(e));
  }

  std::size_t size() const noexcept { return e_.size(); }
  const Int& exp(std::size_t i) const { return e_.at(i); }
  const std::vector<Int>& exponents() const noexcept { return e_; }

  Int degree() const {
    Int d = 0;
    for (const auto& a : e_) d += a;
    return d;
  }

  bool is_identity() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& a) { return a == 0; });
  }

  bool is_squarefree() const {
    return std::all_of(e_.begin(), e_.end(), [](const Int& a) { return a <= 1; });
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > 0) s.push_back(i);
    return s;
  }

  bool divides(const Monomial& other) const {
    check_dim(other, "divides");
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    check_dim(other, "product");
    std::vector<Int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + other.e_[i];
    return Monomial(std::move(r));
  }

  /// this / gcd(this, f): the per-generator colon quotient.
  Monomial colon_by(const Monomial& f) const {
    check_dim(f, "colon");
    std::vector<Int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i)
      r[i] = e_[i] > f.e_[i] ? e_[i] - f.e_[i] : Int(0);
    return Monomial(std::move(r));
  }

  Monomial pow(const Int& k) const {
    if (k < 0) throw domain_error("monomial power must be nonnegative");
    std::vector<Int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] * k;
    return Monomial(std::move(r));
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.check_dim(b, "lcm");
    std::vector<Int> r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
    return Monomial(std::move(r));
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.check_dim(b, "gcd");
    std::vector<Int> r(a.e_.size());
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      r[i] = a.e_[i] < b.e_[i] ? a.e_[i] : b.e_[i];
    return Monomial(std::move(r));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return !(a == b);
  }

private:
  void check_dim(const Monomial& other, const char* op) const {
    if (e_.size() != other.e_.size())
      throw ring_mismatch_error(std::string(op) + ": monomial dimensions differ");
  }

  std::vector<Int> e_;
};

/// Canonical generator order: decreasing lexicographic term order
/// (compare exponents left to right, larger first).
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i);
  }
  return a.size() > b.size();
}

/// Render like "x^2*y" ("1" for the identity) in the given ring.
inline std::string to_string(const RingContext& ring, const Monomial& m) {
  if (m.size() != ring.size())
    throw ring_mismatch_error("to_string: monomial does not match ring");
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.exp(i) == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.name(i);
    if (m.exp(i) != 1) out += "^" + m.exp(i).str();
  }
  return out.empty() ? "1" : out;
}

}  // namespace vfilt
