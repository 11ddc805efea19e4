#pragma once

#include <vector>

#include <vfilt/ideal.hpp>
#include <vfilt/monomial.hpp>
#include <vfilt/ring.hpp>

namespace vfilt_test {

inline vfilt::Monomial mono(const std::vector<long>& e) {
  std::vector<vfilt::Int> v(e.begin(), e.end());
  return vfilt::Monomial(std::move(v));
}

inline vfilt::MonomialIdeal ideal_of(const vfilt::RingPtr& ring,
                                     const std::vector<std::vector<long>>& rows) {
  std::vector<vfilt::Monomial> gens;
  gens.reserve(rows.size());
  for (const auto& row : rows) gens.push_back(mono(row));
  return vfilt::MonomialIdeal(ring, std::move(gens));
}

/// Visit every exponent vector with 0 <= e[i] <= bounds[i].
template <typename Visit>
inline void for_each_in_box(const std::vector<long>& bounds, Visit&& visit) {
  std::vector<long> e(bounds.size(), 0);
  for (;;) {
    visit(const_cast<const std::vector<long>&>(e));
    std::size_t i = 0;
    while (i < e.size() && e[i] == bounds[i]) {
      e[i] = 0;
      ++i;
    }
    if (i == e.size()) return;
    ++e[i];
  }
}

}  // namespace vfilt_test
