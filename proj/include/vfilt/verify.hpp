#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "filtration.hpp"
#include "graph.hpp"
#include "parallel.hpp"
#include "series.hpp"
#include "vnumber.hpp"

namespace vfilt {

/// Configured bounds for verification runs; exceeding them is a refusal,
/// never a silent truncation.
struct ScaleLimits {
  std::size_t max_vars = 12;
  Int max_n = 8;
};

/// One closed-form statement instantiated at concrete parameters. The id
/// selects the statement; params and range supply the instance.
struct TheoremCase {
  std::string id;
  std::map<std::string, long> params;
  SampleRange range{1, 1};
};

/// One exact comparison: expected (closed form) versus computed (from
/// scratch), both rendered as strings so integers, rationals, and booleans
/// report uniformly.
struct VerifyRow {
  Int n;
  std::string label;
  std::string expected;
  std::string computed;
  bool pass;
};

struct VerifyReport {
  TheoremCase theorem_case;
  std::vector<VerifyRow> rows;
  bool pass = false;
  double seconds = 0.0;
};

/// Built-in sample filtrations addressable by name: "example-1.1" is the
/// quadratic-growth table (x^2, x*y^(n^2)) in [x, y]; "example-1.2" the
/// principal table (x^ceil(n*sqrt(2))) in [x]. The returned explicit table
/// covers n = 0..hi.
inline FiltrationSpec named_filtration(const std::string& name,
                                       const Int& hi) {
  if (hi < 1) throw domain_error("named filtration needs a table up to n >= 1");
  if (name == "example-1.1") {
    auto ring = make_ring({"x", "y"});
    std::vector<MonomialIdeal> table = {MonomialIdeal::unit(ring)};
    for (Int n = 1; n <= hi; ++n) {
      std::vector<Int> a{2, 0}, b{1, n * n};
      table.push_back(MonomialIdeal(
          ring, {Monomial(std::move(a)), Monomial(std::move(b))}));
    }
    return FiltrationSpec::explicit_table(ring, std::move(table));
  }
  if (name == "example-1.2") {
    auto ring = make_ring({"x"});
    std::vector<MonomialIdeal> table = {MonomialIdeal::unit(ring)};
    for (Int n = 1; n <= hi; ++n) {
      std::vector<Int> a{ceil_sqrt(2 * n * n)};
      table.push_back(MonomialIdeal(ring, {Monomial(std::move(a))}));
    }
    return FiltrationSpec::explicit_table(ring, std::move(table));
  }
  throw domain_error("unknown named filtration: " + name);
}

namespace detail {

inline long case_param(const TheoremCase& c, const std::string& name) {
  auto it = c.params.find(name);
  if (it == c.params.end())
    throw domain_error("case " + c.id + " requires parameter '" + name + "'");
  return it->second;
}

inline void require_range(const TheoremCase& c, const ScaleLimits& limits) {
  if (c.range.lo < 1 || c.range.hi < c.range.lo)
    throw domain_error("case " + c.id + " requires a range with 1 <= lo <= hi");
  if (c.range.hi > limits.max_n)
    throw scale_limit_error("case " + c.id + ": range exceeds the scale limit n <= " +
                            limits.max_n.str());
}

inline void require_vars(const TheoremCase& c, std::size_t nvars,
                         const ScaleLimits& limits) {
  if (nvars > limits.max_vars)
    throw scale_limit_error(
        "case " + c.id + ": " + std::to_string(nvars) +
        " variables exceed the scale limit of " +
        std::to_string(limits.max_vars));
}

inline VerifyRow int_row(Int n, std::string label, const Int& expected,
                         const Int& computed) {
  return {std::move(n), std::move(label), expected.str(), computed.str(),
          expected == computed};
}

inline VerifyRow bool_row(Int n, std::string label, bool expected,
                          bool computed) {
  return {std::move(n), std::move(label), expected ? "true" : "false",
          computed ? "true" : "false", expected == computed};
}

/// floor(a*n/2): the shared shape of the cycle and triangle-family formulas.
inline Int half_floor(const Int& a, const Int& n) { return a * n / 2; }

inline std::vector<Int> range_values(const SampleRange& range) {
  std::vector<Int> ns;
  for (Int n = range.lo; n <= range.hi; ++n) ns.push_back(n);
  return ns;
}

inline std::vector<VerifyRow> flatten(
    std::vector<std::vector<VerifyRow>> groups) {
  std::vector<VerifyRow> rows;
  for (auto& g : groups)
    rows.insert(rows.end(), std::make_move_iterator(g.begin()),
                std::make_move_iterator(g.end()));
  return rows;
}

// Complete bipartite covers: v = n*p1 + p2 - 2 and the regularity gap grows
// by p2 - p1 per step.
inline std::vector<VerifyRow> rows_t41(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  const long p1 = case_param(c, "p1");
  const long p2 = case_param(c, "p2");
  require_range(c, limits);
  auto g = complete_bipartite_graph(p1, p2);
  require_vars(c, g.ring()->size(), limits);
  auto spec = FiltrationSpec::symbolic_minass(cover_ideal(g));
  FamilyTag tag{"Kb", p1, p2, nullptr};
  return flatten(parallel_map(range_values(c.range), [&](const Int& n) {
    const Int computed = v(evaluate(spec, n)).value;
    std::vector<VerifyRow> rows;
    rows.push_back(int_row(n, "v", n * p1 + p2 - 2, computed));
    rows.push_back(int_row(n, "reg - v", (n - 1) * (p2 - p1),
                           reg_closed_form(tag, n) - computed));
    return rows;
  }));
}

// Complete-graph covers: parity-split linear formula, regularity gap zero at
// n = 1, 2 and strictly positive from n = 3 on.
inline std::vector<VerifyRow> rows_t43(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  const long m = case_param(c, "m");
  require_range(c, limits);
  auto g = complete_graph(m);
  require_vars(c, g.ring()->size(), limits);
  auto spec = FiltrationSpec::symbolic_minass(cover_ideal(g));
  FamilyTag tag{"K", m, 0, nullptr};
  return flatten(parallel_map(range_values(c.range), [&](const Int& n) {
    const Int computed = v(evaluate(spec, n)).value;
    // (m/2)n + m - 3 at even n, (m/2)n + m/2 - 2 = m(n+1)/2 - 2 at odd n;
    // both sides are integers for every parity of m.
    const Int expected =
        (n % 2 == 0) ? Int(m * n / 2 + m - 3) : Int(m * (n + 1) / 2 - 2);
    std::vector<VerifyRow> rows;
    rows.push_back(int_row(n, "v", expected, computed));
    const Int gap = reg_closed_form(tag, n) - computed;
    if (n <= 2) {
      rows.push_back(int_row(n, "reg - v", 0, gap));
    } else if (n == 3) {
      rows.push_back({n, "reg - v", "> 0", gap.str(), gap > 0});
    }
    return rows;
  }));
}

// Cycle covers: every local and the global v equal floor(u*n/2), i.e. slope
// u/2 with intercept 0 (even u or even n) and -1/2 (odd u, odd n).
inline std::vector<VerifyRow> rows_t45(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  const long u = case_param(c, "u");
  require_range(c, limits);
  auto g = cycle_graph(u);
  require_vars(c, g.ring()->size(), limits);
  auto spec = FiltrationSpec::symbolic_minass(cover_ideal(g));
  return flatten(parallel_map(range_values(c.range), [&](const Int& n) {
    const auto F = evaluate(spec, n);
    const Int expected = half_floor(u, n);
    std::vector<VerifyRow> rows;
    const auto locals = local_v_all(F);
    rows.push_back(int_row(n, "associated primes", u, Int(locals.size())));
    for (const auto& r : locals)
      rows.push_back(
          int_row(n, "v at " + to_string(r.prime), expected, r.value));
    rows.push_back(int_row(n, "v", expected, v(F).value));
    return rows;
  }));
}

// Pendant-complete covers: pendant-edge primes sit on one line, core-edge
// primes on a steeper one, and the global v follows the pendant line.
inline std::vector<VerifyRow> rows_t47(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  const long m = case_param(c, "m");
  const long s = case_param(c, "s");
  require_range(c, limits);
  auto g = pendant_complete_graph(m, s);
  require_vars(c, g.ring()->size(), limits);
  auto spec = FiltrationSpec::symbolic_minass(cover_ideal(g));
  const std::size_t cores = static_cast<std::size_t>(m);
  return flatten(parallel_map(range_values(c.range), [&](const Int& n) {
    const auto F = evaluate(spec, n);
    std::vector<VerifyRow> rows;
    const auto locals = local_v_all(F);
    rows.push_back(int_row(n, "associated primes",
                           Int(m) * (m - 1) / 2 + Int(m) * s,
                           Int(locals.size())));
    for (const auto& r : locals) {
      const auto& supp = r.prime.support();
      const bool core_edge = supp.size() == 2 && supp[0] < cores && supp[1] < cores;
      const Int expected =
          core_edge ? (m + s - 1) * n + s - 1 : m * n + s - 2;
      rows.push_back(int_row(n,
                             std::string(core_edge ? "core " : "pendant ") +
                                 "v at " + to_string(r.prime),
                             expected, r.value));
    }
    rows.push_back(int_row(n, "v", m * n + s - 2, v(F).value));
    return rows;
  }));
}

// Doubled bipartite family: structural properties plus the v/bight gap.
inline std::vector<VerifyRow> rows_c44(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  const long p = case_param(c, "p");
  auto g = doubled_bipartite_graph(p);
  require_vars(c, g.ring()->size(), limits);
  const Int vnum = v(cover_ideal(g)).value;
  const Int big = Int(bight(edge_ideal(g)));
  std::vector<VerifyRow> rows;
  rows.push_back(bool_row(p, "bipartite", true, is_bipartite(g)));
  rows.push_back(bool_row(p, "unmixed", true, is_unmixed_edge_ideal(g)));
  if (g.num_vertices() <= 10)
    rows.push_back(bool_row(p, "complete multipartite", false,
                            is_complete_multipartite(g)));
  rows.push_back(int_row(p, "v", 3 * p - 2, vnum));
  rows.push_back(int_row(p, "bight", 2 * p, big));
  rows.push_back(int_row(p, "v - bight", p - 2, vnum - big));
  return rows;
}

// Bipartite instance whose regularity comes from the closed-form chain while
// v is computed directly on the constructed graph.
inline std::vector<VerifyRow> rows_t46(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  const long k = case_param(c, "k");
  const long m = case_param(c, "m");
  auto g = fakhari_graph(complete_bipartite_graph(m, m + 1), k + 1);
  require_vars(c, g.ring()->size(), limits);
  const Int vnum = v(cover_ideal(g)).value;
  const Int reg = reg_closed_form(FamilyTag{"Kb", m, m + 1, nullptr}, k + 1);
  std::vector<VerifyRow> rows;
  rows.push_back(int_row(k, "reg - v", k, reg - vnum));
  return rows;
}

// Slope gap between a core-edge and a pendant-edge prime equals t = s - 1.
inline std::vector<VerifyRow> rows_c49(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  const long m = case_param(c, "m");
  const long t = case_param(c, "t");
  require_range(c, limits);
  auto g = pendant_complete_graph(m, t + 1);
  require_vars(c, g.ring()->size(), limits);
  auto spec = FiltrationSpec::symbolic_minass(cover_ideal(g));
  const MonomialPrime pendant(g.ring(), {0, static_cast<std::size_t>(m)});
  const MonomialPrime core(g.ring(), {0, 1});
  const Rational gap = slope_gap(spec, pendant, core, c.range);
  std::vector<VerifyRow> rows;
  rows.push_back({c.range.hi, "slope gap", Int(t).str(),
                  rational_to_string(gap), gap == Rational(t)});
  return rows;
}

// Quadratic-growth family (x^2, x*y^(n^2)): v = n^2 at both primes.
inline std::vector<VerifyRow> rows_e11(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  require_range(c, limits);
  auto spec = named_filtration("example-1.1", c.range.hi);
  return flatten(parallel_map(range_values(c.range), [&](const Int& n) {
    const auto F = evaluate(spec, n);
    std::vector<VerifyRow> rows;
    const auto locals = local_v_all(F);
    rows.push_back(int_row(n, "associated primes", 2, Int(locals.size())));
    for (const auto& r : locals)
      rows.push_back(int_row(n, "v at " + to_string(r.prime), n * n, r.value));
    rows.push_back(int_row(n, "v", n * n, v(F).value));
    return rows;
  }));
}

// Principal family (x^ceil(n*sqrt(2))): v = ceil(n*sqrt(2)) - 1.
inline std::vector<VerifyRow> rows_e12(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  require_range(c, limits);
  auto spec = named_filtration("example-1.2", c.range.hi);
  return flatten(parallel_map(range_values(c.range), [&](const Int& n) {
    std::vector<VerifyRow> rows;
    rows.push_back(int_row(n, "v", ceil_sqrt(2 * n * n) - 1,
                           v(evaluate(spec, n)).value));
    return rows;
  }));
}

// Four-generator example: all three local v-numbers equal floor(3n/2).
inline std::vector<VerifyRow> rows_e36(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  require_range(c, limits);
  auto ring = make_ring({"x", "y", "z", "w"});
  std::vector<Monomial> gens;
  for (auto e : std::vector<std::vector<Int>>{
           {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}})
    gens.emplace_back(std::move(e));
  auto spec =
      FiltrationSpec::symbolic_minass(MonomialIdeal(ring, std::move(gens)));
  return flatten(parallel_map(range_values(c.range), [&](const Int& n) {
    const auto F = evaluate(spec, n);
    std::vector<VerifyRow> rows;
    const auto locals = local_v_all(F);
    rows.push_back(int_row(n, "associated primes", 3, Int(locals.size())));
    for (const auto& r : locals)
      rows.push_back(int_row(n, "v at " + to_string(r.prime),
                             half_floor(3, n), r.value));
    return rows;
  }));
}

// Polarizing the k-th symbolic cover power lands exactly on the cover ideal
// of the expanded graph, with equal v on both sides.
inline std::vector<VerifyRow> rows_r42(const TheoremCase& c,
                                       const ScaleLimits& limits) {
  const long k = case_param(c, "k");
  Graph g = c.params.count("km") ? complete_graph(case_param(c, "km"))
                                 : cycle_graph(case_param(c, "cu"));
  auto expanded = fakhari_graph(g, k);
  require_vars(c, expanded.ring()->size(), limits);
  auto lhs =
      polarize(evaluate(FiltrationSpec::symbolic_minass(cover_ideal(g)), k));
  auto rhs = cover_ideal(expanded);
  std::vector<VerifyRow> rows;
  rows.push_back(bool_row(k, "polarized power = expanded cover",
                          true, lhs == rhs && same_ring(lhs.ring(), rhs.ring())));
  rows.push_back(int_row(k, "v of polarization", v(rhs).value, v(lhs).value));
  return rows;
}

}  // namespace detail

/// Runs one case: every expected value comes from the closed form, every
/// computed value from scratch via the quotient method and ideal arithmetic.
inline VerifyReport run_verify_case(const TheoremCase& c,
                                    const ScaleLimits& limits = {}) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerifyRow> rows;
  if (c.id == "T4.1") rows = detail::rows_t41(c, limits);
  else if (c.id == "T4.3") rows = detail::rows_t43(c, limits);
  else if (c.id == "T4.5") rows = detail::rows_t45(c, limits);
  else if (c.id == "T4.7") rows = detail::rows_t47(c, limits);
  else if (c.id == "C4.4") rows = detail::rows_c44(c, limits);
  else if (c.id == "T4.6") rows = detail::rows_t46(c, limits);
  else if (c.id == "C4.9") rows = detail::rows_c49(c, limits);
  else if (c.id == "E1.1") rows = detail::rows_e11(c, limits);
  else if (c.id == "E1.2") rows = detail::rows_e12(c, limits);
  else if (c.id == "E3.6") rows = detail::rows_e36(c, limits);
  else if (c.id == "R4.2") rows = detail::rows_r42(c, limits);
  else throw domain_error("unknown verify case id: " + c.id);

  VerifyReport report;
  report.theorem_case = c;
  report.rows = std::move(rows);
  report.pass = true;
  for (const auto& r : report.rows) report.pass = report.pass && r.pass;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

/// The desk-scale instances of one id (or of every id when empty).
inline std::vector<TheoremCase> default_cases(const std::string& id = "") {
  std::vector<TheoremCase> cases;
  auto want = [&id](const char* c) { return id.empty() || id == c; };
  if (want("T4.1"))
    for (auto [p1, p2] : std::vector<std::pair<long, long>>{
             {2, 2}, {2, 3}, {3, 3}, {2, 4}})
      cases.push_back({"T4.1", {{"p1", p1}, {"p2", p2}}, {1, 5}});
  if (want("T4.3"))
    for (long m : {3, 4, 5}) cases.push_back({"T4.3", {{"m", m}}, {1, 6}});
  if (want("T4.5"))
    for (long u : {4, 5, 6, 7}) cases.push_back({"T4.5", {{"u", u}}, {1, 5}});
  if (want("T4.7"))
    for (auto [m, s] :
         std::vector<std::pair<long, long>>{{2, 2}, {3, 2}, {2, 3}})
      cases.push_back({"T4.7", {{"m", m}, {"s", s}}, {1, 4}});
  if (want("C4.4"))
    for (long p : {2, 3}) cases.push_back({"C4.4", {{"p", p}}, {1, 1}});
  if (want("T4.6")) cases.push_back({"T4.6", {{"k", 1}, {"m", 2}}, {1, 1}});
  if (want("C4.9"))
    for (long t : {1, 2})
      cases.push_back({"C4.9", {{"m", 2}, {"t", t}}, {1, 6}});
  if (want("E1.1")) cases.push_back({"E1.1", {}, {1, 5}});
  if (want("E1.2")) cases.push_back({"E1.2", {}, {1, 5}});
  if (want("E3.6")) cases.push_back({"E3.6", {}, {1, 6}});
  if (want("R4.2")) {
    cases.push_back({"R4.2", {{"k", 2}, {"km", 3}}, {1, 1}});
    cases.push_back({"R4.2", {{"k", 2}, {"cu", 5}}, {1, 1}});
  }
  if (cases.empty()) throw domain_error("unknown verify case id: " + id);
  return cases;
}

/// Seeded random monomial ideal: up to max_vars variables, exponents up to
/// max_exp, at most max_gens generators, always proper and nonzero.
inline MonomialIdeal random_monomial_ideal(std::mt19937& rng,
                                           std::size_t max_vars = 4,
                                           long max_exp = 3,
                                           std::size_t max_gens = 5) {
  std::uniform_int_distribution<std::size_t> var_count(1, max_vars);
  const std::size_t nvars = var_count(rng);
  RingPtr ring = make_ring_x(nvars);
  std::uniform_int_distribution<std::size_t> gen_count(1, max_gens);
  std::uniform_int_distribution<long> exp_dist(0, max_exp);
  const std::size_t ngens = gen_count(rng);
  std::vector<Monomial> gens;
  while (gens.size() < ngens) {
    std::vector<Int> e(nvars, Int(0));
    Int total = 0;
    for (auto& x : e) {
      x = exp_dist(rng);
      total += x;
    }
    if (total == 0) continue;  // keep the ideal proper
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ring, std::move(gens));
}

struct OracleSpotCheck {
  long ideals = 0;
  long comparisons = 0;
  long failures = 0;
  std::string first_failure;
};

/// Cross-checks the quotient method against the brute-force oracle on seeded
/// random ideals: equal values, valid witnesses, and oracle silence below
/// the claimed degree.
inline OracleSpotCheck oracle_spot_check(unsigned seed, long count,
                                         std::size_t max_vars = 4,
                                         long max_exp = 3) {
  std::mt19937 rng(seed);
  OracleSpotCheck result;
  for (long i = 0; i < count; ++i) {
    MonomialIdeal ideal = random_monomial_ideal(rng, max_vars, max_exp);
    ++result.ideals;
    for (const auto& p : associated_primes(ideal)) {
      ++result.comparisons;
      std::string failure;
      const VResult quotient = local_v(ideal, p);
      if (colon(ideal, quotient.witness) != p.as_ideal())
        failure = "witness does not colon to the prime";
      else if (quotient.witness.degree() != quotient.value)
        failure = "witness degree differs from the value";
      else if (auto scanned = local_v_oracle(ideal, p);
               !scanned || scanned->value != quotient.value)
        failure = "oracle disagrees with the quotient method";
      else if (quotient.value > 0 &&
               local_v_oracle(ideal, p, quotient.value - 1))
        failure = "oracle found a witness below the claimed degree";
      if (!failure.empty()) {
        ++result.failures;
        if (result.first_failure.empty())
          result.first_failure = "ideal " + to_string(ideal) + " at prime " +
                                 to_string(p) + ": " + failure;
      }
    }
  }
  return result;
}

}  // namespace vfilt
