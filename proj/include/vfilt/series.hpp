#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "filtration.hpp"
#include "numbers.hpp"
#include "parallel.hpp"
#include "vnumber.hpp"

namespace vfilt {

struct SampleRange {
  Int lo;
  Int hi;
};

/// Sampled v-numbers of a filtration: values[k] holds the result at
/// n = lo + k, either the global v-number or, when prime is set, the local
/// one at that prime.
struct VSeries {
  FiltrationSpec spec;
  std::optional<MonomialPrime> prime;
  Int lo;
  std::vector<VResult> values;

  Int hi() const { return lo + Int(values.size()) - 1; }
  const VResult& at(const Int& n) const {
    if (n < lo || n > hi())
      throw domain_error("series index " + n.str() + " outside sampled range");
    return values[(n - lo).convert_to<std::size_t>()];
  }
};

inline VSeries v_series(const FiltrationSpec& spec,
                        std::optional<MonomialPrime> prime,
                        const SampleRange& range) {
  if (range.lo < 1 || range.hi < range.lo)
    throw domain_error("series range must satisfy 1 <= lo <= hi");
  if (prime) require_same_ring(spec.ring(), prime->ring(), "v_series");

  std::vector<Int> ns;
  for (Int n = range.lo; n <= range.hi; ++n) ns.push_back(n);
  auto values = parallel_map(ns, [&](const Int& n) -> VResult {
    const MonomialIdeal member = evaluate(spec, n);
    if (prime) {
      auto ass = associated_primes(member);
      if (std::find(ass.begin(), ass.end(), *prime) == ass.end())
        throw domain_error("prime " + to_string(*prime) +
                           " is not an associated prime at n = " + n.str());
      return local_v(member, *prime, ass);
    }
    return v(member);
  });
  return VSeries{spec, std::move(prime), range.lo, std::move(values)};
}

/// v(n) = slope * n + intercept on one residue class.
struct FitLine {
  Rational slope;
  Rational intercept;

  bool matches(const Int& n, const Int& value) const {
    return slope * Rational(n) + intercept == Rational(value);
  }
  friend bool operator==(const FitLine& a, const FitLine& b) {
    return a.slope == b.slope && a.intercept == b.intercept;
  }
};

/// Eventually quasi-linear description of a series: one line per residue
/// class of n modulo the period; every sample with n >= n0 lies on its line.
struct QuasiLinearFit {
  Int period;
  std::vector<FitLine> lines;  // indexed by n mod period
  Int n0;

  const FitLine& line_for(const Int& n) const {
    return lines[(n % period).convert_to<std::size_t>()];
  }
};

/// Fits each residue class through its last two samples. Returns nullopt
/// when the third-from-last sample of some class already disagrees; n0 is
/// the smallest sampled n from which every class agrees with its line.
/// Classes need at least three samples each.
inline std::optional<QuasiLinearFit> quasi_linear_fit(const VSeries& series,
                                                      const Int& period) {
  if (period < 1) throw domain_error("fit period must be positive");
  const std::size_t t = period.convert_to<std::size_t>();

  std::vector<std::vector<std::pair<Int, Int>>> classes(t);
  for (std::size_t k = 0; k < series.values.size(); ++k) {
    const Int n = series.lo + Int(k);
    classes[(n % period).convert_to<std::size_t>()].emplace_back(
        n, series.values[k].value);
  }
  for (const auto& cls : classes)
    if (cls.size() < 3)
      throw domain_error("fit with period " + period.str() +
                         " needs at least three samples per residue class");

  QuasiLinearFit fit{period, std::vector<FitLine>(t), 0};
  Int n0 = series.lo;
  for (std::size_t r = 0; r < t; ++r) {
    const auto& cls = classes[r];
    const auto& [n1, v1] = cls[cls.size() - 2];
    const auto& [n2, v2] = cls[cls.size() - 1];
    FitLine line{Rational(v2 - v1) / Rational(n2 - n1), 0};
    line.intercept = Rational(v2) - line.slope * Rational(n2);
    if (!line.matches(cls[cls.size() - 3].first, cls[cls.size() - 3].second))
      return std::nullopt;
    std::size_t first = cls.size() - 3;
    while (first > 0 && line.matches(cls[first - 1].first, cls[first - 1].second))
      --first;
    n0 = std::max(n0, cls[first].first);
    fit.lines[r] = line;
  }
  fit.n0 = n0;
  return fit;
}

/// Outcome of the slope search: the first fitting period in 1..6, the common
/// slope when all residue classes share one, and otherwise the v(n)/n tail
/// of the samples as a divergence diagnostic.
struct SlopeLimitResult {
  std::optional<QuasiLinearFit> fit;
  std::optional<Rational> slope;
  std::vector<std::pair<Int, Rational>> ratio_tail;
};

inline SlopeLimitResult slope_limit(const VSeries& series) {
  bool attempted = false;
  for (Int period = 1; period <= 6; ++period) {
    // Class sizes only shrink as the period grows; stop once too small.
    Int smallest = Int(series.values.size());
    for (Int r = 0; r < period; ++r) {
      Int count = 0;
      for (Int n = series.lo; n <= series.hi(); ++n)
        if (n % period == r) ++count;
      smallest = std::min(smallest, count);
    }
    if (smallest < 3) break;
    attempted = true;
    auto fit = quasi_linear_fit(series, period);
    if (!fit) continue;
    SlopeLimitResult result{std::move(fit), std::nullopt, {}};
    bool common = true;
    for (const auto& line : result.fit->lines)
      common = common && line.slope == result.fit->lines.front().slope;
    if (common) result.slope = result.fit->lines.front().slope;
    return result;
  }
  if (!attempted)
    throw domain_error("sample range too small to attempt any period");

  SlopeLimitResult result{std::nullopt, std::nullopt, {}};
  const std::size_t tail = std::min<std::size_t>(series.values.size(), 4);
  for (std::size_t k = series.values.size() - tail; k < series.values.size();
       ++k) {
    const Int n = series.lo + Int(k);
    result.ratio_tail.emplace_back(n,
                                   Rational(series.values[k].value) / Rational(n));
  }
  return result;
}

/// Difference of the common slopes of the local v-number series at two
/// primes (second minus first).
inline Rational slope_gap(const FiltrationSpec& spec, const MonomialPrime& a,
                          const MonomialPrime& b, const SampleRange& range) {
  auto ra = slope_limit(v_series(spec, a, range));
  auto rb = slope_limit(v_series(spec, b, range));
  if (!ra.slope || !rb.slope)
    throw domain_error(
        "slope gap requires a common-slope linear fit at both primes");
  return *rb.slope - *ra.slope;
}

}  // namespace vfilt
