// Acceptance harness: runs the fourteen shipping criteria end to end and
// prints one [PASS|FAIL] line per criterion. Every comparison is exact
// (integer or rational equality, tolerance zero). Exits nonzero if any
// criterion fails.

#include <vfilt/vfilt.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace vfilt;

/// Runs all built-in instances of one verify case id; reports the first
/// failing row on failure.
bool default_cases_pass(const std::string& id, std::string& detail) {
  for (const auto& c : default_cases(id)) {
    const VerifyReport report = run_verify_case(c);
    if (report.pass) continue;
    for (const auto& row : report.rows) {
      if (row.pass) continue;
      detail = id + " at n=" + row.n.str() + " " + row.label + ": expected " +
               row.expected + ", computed " + row.computed;
      return false;
    }
  }
  return true;
}

bool criterion_bipartite_covers(std::string& detail) {
  return default_cases_pass("T4.1", detail);
}

bool criterion_complete_covers(std::string& detail) {
  return default_cases_pass("T4.3", detail);
}

bool criterion_cycle_covers(std::string& detail) {
  return default_cases_pass("T4.5", detail);
}

bool criterion_pendant_covers(std::string& detail) {
  return default_cases_pass("T4.7", detail);
}

bool criterion_four_generator_family(std::string& detail) {
  return default_cases_pass("E3.6", detail);
}

bool criterion_nonlinear_families(std::string& detail) {
  if (!default_cases_pass("E1.1", detail)) return false;
  if (!default_cases_pass("E1.2", detail)) return false;
  // The quadratic family admits no quasi-linear description: every period
  // up to 4 must come back empty-handed (sampled wide enough that each
  // residue class has the three points the fitter requires).
  const auto spec = named_filtration("example-1.1", 12);
  const VSeries series = v_series(spec, std::nullopt, {1, 12});
  for (long period = 1; period <= 4; ++period) {
    if (quasi_linear_fit(series, period)) {
      detail = "quadratic family unexpectedly fit period " +
               std::to_string(period);
      return false;
    }
  }
  return true;
}

bool criterion_doubled_bipartite(std::string& detail) {
  bool saw_partition_search = false;
  for (const auto& c : default_cases("C4.4")) {
    const VerifyReport report = run_verify_case(c);
    for (const auto& row : report.rows) {
      if (row.label == "complete multipartite") saw_partition_search = true;
      if (!row.pass) {
        detail = "C4.4 " + row.label + ": expected " + row.expected +
                 ", computed " + row.computed;
        return false;
      }
    }
  }
  if (!saw_partition_search)
    detail = "exhaustive partition search never ran";
  return saw_partition_search;
}

bool criterion_regularity_gap(std::string& detail) {
  return default_cases_pass("T4.6", detail);
}

bool criterion_slope_gap(std::string& detail) {
  return default_cases_pass("C4.9", detail);
}

bool criterion_polarization(std::string& detail) {
  return default_cases_pass("R4.2", detail);
}

bool criterion_stabilization(std::string& detail) {
  auto symbolic = [](const Graph& g) {
    return FiltrationSpec::symbolic_minass(cover_ideal(g));
  };
  const struct {
    const char* name;
    FiltrationSpec spec;
    Int expected;
  } probes[] = {
      {"K(3)", symbolic(complete_graph(3)), 2},
      {"C(5)", symbolic(cycle_graph(5)), 2},
      {"Kb(2,3)", symbolic(complete_bipartite_graph(2, 3)), 1},
  };
  for (const auto& probe : probes) {
    const auto found = svd_detect(probe.spec, 2, 4);
    if (!found || found->e != probe.expected || found->n_max != 4) {
      detail = std::string("svd of the symbolic cover filtration of ") +
               probe.name + ": expected " + probe.expected.str() + ", got " +
               (found ? found->e.str() : std::string("none"));
      return false;
    }
  }
  // The asymptotic slope of the symbolic filtration equals half the initial
  // degree of the second member.
  const Graph slopes[] = {complete_graph(3), cycle_graph(5),
                          fakhari_graph(complete_graph(3), 2)};
  for (const auto& g : slopes) {
    const FiltrationSpec spec = symbolic(g);
    const SlopeLimitResult limit =
        slope_limit(v_series(spec, std::nullopt, {1, 8}));
    const Rational expected = Rational(alpha(evaluate(spec, 2))) / 2;
    if (!limit.slope || *limit.slope != expected) {
      detail = "slope of a symbolic cover series: expected " +
               rational_to_string(expected) + ", got " +
               (limit.slope ? rational_to_string(*limit.slope)
                            : std::string("no fit"));
      return false;
    }
  }
  return true;
}

bool criterion_closure_filtration(std::string& detail) {
  for (const char* text : {"(x^2,y^2) in [x,y]", "(x^3,x*y,y^3) in [x,y]"}) {
    const MonomialIdeal ideal = parse_ideal(text);
    const FiltrationSpec spec = FiltrationSpec::closure(ideal);
    const VSeries series = v_series(spec, std::nullopt, {1, 6});
    const auto fit = quasi_linear_fit(series, 1);
    if (!fit) {
      detail = std::string(text) + ": closure series has no linear tail";
      return false;
    }
    bool slope_in_degrees = false;
    for (const auto& g : ideal.generators())
      slope_in_degrees =
          slope_in_degrees || fit->lines[0].slope == Rational(g.degree());
    if (!slope_in_degrees) {
      detail = std::string(text) + ": tail slope " +
               rational_to_string(fit->lines[0].slope) +
               " is not a generator degree";
      return false;
    }
    const MonomialIdeal closed = evaluate(spec, 1);
    if (!closed.contains_ideal(ideal)) {
      detail = std::string(text) + ": ideal not inside its closure";
      return false;
    }
    for (Int n = 1; n <= 4; ++n) {
      if (!evaluate(spec, n).contains_ideal(power(closed, n))) {
        detail = std::string(text) + ": closure(I)^" + n.str() +
                 " escapes closure(I^" + n.str() + ")";
        return false;
      }
    }
  }
  return true;
}

bool criterion_oracle(std::string& detail) {
  const OracleSpotCheck result = oracle_spot_check(20260814u, 200);
  if (result.failures != 0) {
    detail = result.first_failure;
    return false;
  }
  if (result.ideals != 200) {
    detail = "expected 200 ideals, saw " + std::to_string(result.ideals);
    return false;
  }
  return true;
}

/// Walks every exponent vector in the box [0, bound]^nvars.
template <typename Fn>
void for_each_in_box(std::size_t nvars, long bound, Fn&& fn) {
  std::vector<Int> e(nvars, Int(0));
  while (true) {
    fn(Monomial(e));
    std::size_t i = 0;
    while (i < nvars && e[i] == bound) e[i++] = 0;
    if (i == nvars) return;
    ++e[i];
  }
}

bool criterion_algebra_identities(std::string& detail) {
  std::mt19937 rng(20260814u);
  std::uniform_int_distribution<std::size_t> gen_count(1, 3);
  std::uniform_int_distribution<long> exp_dist(0, 3);
  for (long i = 0; i < 200; ++i) {
    const MonomialIdeal ideal = random_monomial_ideal(rng);
    const RingPtr& ring = ideal.ring();
    const std::size_t nvars = ring->size();
    auto companion = [&]() {
      std::vector<Monomial> gens;
      const std::size_t ngens = gen_count(rng);
      while (gens.size() < ngens) {
        std::vector<Int> e(nvars, Int(0));
        Int total = 0;
        for (auto& x : e) {
          x = exp_dist(rng);
          total += x;
        }
        if (total == 0) continue;
        gens.emplace_back(std::move(e));
      }
      return MonomialIdeal(ring, std::move(gens));
    };
    const MonomialIdeal j = companion();
    const MonomialIdeal k = companion();

    if (colon_ideal(colon_ideal(ideal, j), k) !=
        colon_ideal(ideal, product(j, k))) {
      detail = "(I:J):K differs from I:(JK) for I = " + to_string(ideal);
      return false;
    }

    const MonomialIdeal meet = intersect(ideal, j);
    const MonomialIdeal quot = colon_ideal(ideal, j);
    bool box_ok = true;
    for_each_in_box(nvars, 4, [&](const Monomial& m) {
      if (meet.contains(m) != (ideal.contains(m) && j.contains(m)))
        box_ok = false;
      bool multiplies_in = true;
      for (const auto& g : j.generators())
        multiplies_in = multiplies_in && ideal.contains(m * g);
      if (quot.contains(m) != multiplies_in) box_ok = false;
    });
    if (!box_ok) {
      detail = "box membership disagrees for I = " + to_string(ideal) +
               ", J = " + to_string(j);
      return false;
    }

    std::vector<Monomial> padded = ideal.generators();
    padded.push_back(padded.front() * padded.back());
    if (minimalize(std::move(padded), ring) != ideal) {
      detail = "minimalize is not idempotent on I = " + to_string(ideal);
      return false;
    }

    MonomialIdeal reassembled = MonomialIdeal::unit(ring);
    for (const auto& component : irreducible_decomposition(ideal))
      reassembled = intersect(reassembled, component.as_ideal());
    if (reassembled != ideal) {
      detail = "decomposition does not re-intersect to I = " + to_string(ideal);
      return false;
    }
  }
  return true;
}

struct Criterion {
  int number;
  const char* description;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "complete bipartite cover symbolic v-numbers (T4.1)",
       criterion_bipartite_covers},
      {2, "complete graph cover symbolic v-numbers (T4.3)",
       criterion_complete_covers},
      {3, "cycle cover local and global v-numbers (T4.5)",
       criterion_cycle_covers},
      {4, "pendant-complete cover prime-wise v-numbers (T4.7)",
       criterion_pendant_covers},
      {5, "four-generator symbolic family local v-numbers (E3.6)",
       criterion_four_generator_family},
      {6, "quadratic and irrational-slope families (E1.1, E1.2)",
       criterion_nonlinear_families},
      {7, "doubled bipartite family v against bight (C4.4)",
       criterion_doubled_bipartite},
      {8, "regularity minus v on the expanded bipartite instance (T4.6)",
       criterion_regularity_gap},
      {9, "slope gap between core and pendant primes (C4.9)",
       criterion_slope_gap},
      {10, "polarized symbolic power equals expanded cover (R4.2)",
       criterion_polarization},
      {11, "stabilization exponent detection and slope identity",
       criterion_stabilization},
      {12, "integral-closure filtration linear tails and containments",
       criterion_closure_filtration},
      {13, "quotient method against the brute-force oracle, 200 ideals",
       criterion_oracle},
      {14, "algebra identities on the seeded random corpus",
       criterion_algebra_identities},
  };

  bool all_pass = true;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] criterion %d: %s (%.2fs)\n", pass ? "PASS" : "FAIL",
                criterion.number, criterion.description, seconds);
    if (!pass && !detail.empty()) std::printf("       %s\n", detail.c_str());
    all_pass = all_pass && pass;
  }
  return all_pass ? 0 : 1;
}
