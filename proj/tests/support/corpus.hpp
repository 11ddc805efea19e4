#pragma once

#include <random>
#include <vector>

#include <vfilt/ideal.hpp>
#include <vfilt/ring.hpp>

namespace vfilt_test {

inline vfilt::MonomialIdeal random_ideal(std::mt19937_64& rng,
                                         const vfilt::RingPtr& ring,
                                         int min_gens = 1, int max_gens = 5,
                                         long max_exp = 3) {
  std::uniform_int_distribution<int> gen_count(min_gens, max_gens);
  std::uniform_int_distribution<long> exp_dist(0, max_exp);
  std::uniform_int_distribution<std::size_t> pos(0, ring->size() - 1);
  std::uniform_int_distribution<long> nonzero(1, max_exp);
  const int k = gen_count(rng);
  std::vector<vfilt::Monomial> gens;
  gens.reserve(static_cast<std::size_t>(k));
  for (int g = 0; g < k; ++g) {
    std::vector<vfilt::Int> e(ring->size());
    bool all_zero = true;
    for (auto& a : e) {
      long x = exp_dist(rng);
      a = x;
      if (x != 0) all_zero = false;
    }
    if (all_zero) e[pos(rng)] = nonzero(rng);
    gens.emplace_back(std::move(e));
  }
  return vfilt::MonomialIdeal(ring, std::move(gens));
}

/// Deterministic corpus of proper nonzero ideals in <= 4 variables with
/// exponents <= 3 (the shared property-test corpus).
inline std::vector<vfilt::MonomialIdeal> corpus(unsigned long seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<vfilt::RingPtr> rings;
  for (std::size_t m = 1; m <= 4; ++m) rings.push_back(vfilt::make_ring_x(m));
  std::uniform_int_distribution<std::size_t> ring_pick(0, rings.size() - 1);
  std::vector<vfilt::MonomialIdeal> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count)
    out.push_back(random_ideal(rng, rings[ring_pick(rng)]));
  return out;
}

}  // namespace vfilt_test
