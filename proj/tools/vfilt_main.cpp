// vfilt: exact v-numbers of monomial ideals and their power filtrations.
//
// Subcommands cover the ideal arithmetic (colon, intersect, saturate,
// closure, symbolic powers), the v-number itself (global, local, associated
// and minimal primes, initial degree), sampled series with quasi-linear
// fitting, stabilization detection, and the closed-form verification
// harness. Output is a human table by default and JSON with --json.

#include <CLI11.hpp>

#include <vfilt/vfilt.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace vfilt;

struct Options {
  std::string ideal_text;
  std::string graph_text;
  std::string by_text;
  std::string spec_text;
  std::string prime_text;
  std::string range_text;
  std::string filtration = "ordinary";
  std::string symbolic_kind = "symbolic";
  std::string case_id;
  std::vector<std::string> params;
  long n = -1;  // -1: not given
  long period = 0;
  long emax = 2;
  long nmax = 4;
  long oracle_count = 0;
  long max_vars_flag = -1;
  long max_n_flag = -1;
  unsigned seed = 20260814u;
  bool fit = false;
  bool json = false;
};

long env_positive(const char* name) {
  const char* text = std::getenv(name);
  if (text == nullptr) return -1;
  char* end = nullptr;
  const long value = std::strtol(text, &end, 10);
  if (end == text || *end != '\0' || value < 1)
    throw domain_error(std::string(name) + " must be a positive integer, got '" +
                       text + "'");
  return value;
}

ScaleLimits resolve_limits(const Options& o) {
  ScaleLimits limits;
  if (const long v = env_positive("VFILT_MAX_VARS"); v > 0)
    limits.max_vars = static_cast<std::size_t>(v);
  if (const long v = env_positive("VFILT_MAX_N"); v > 0) limits.max_n = v;
  if (o.max_vars_flag > 0)
    limits.max_vars = static_cast<std::size_t>(o.max_vars_flag);
  if (o.max_n_flag > 0) limits.max_n = o.max_n_flag;
  return limits;
}

void require_vars(std::size_t nvars, const ScaleLimits& limits) {
  if (nvars > limits.max_vars)
    throw scale_limit_error(std::to_string(nvars) +
                            " variables exceed the scale limit of " +
                            std::to_string(limits.max_vars) +
                            " (raise with --max-vars or VFILT_MAX_VARS)");
}

void require_n(const Int& n, const ScaleLimits& limits) {
  if (n < 1) throw domain_error("--n must be >= 1");
  if (n > limits.max_n)
    throw scale_limit_error("n = " + n.str() +
                            " exceeds the scale limit n <= " +
                            limits.max_n.str() +
                            " (raise with --max-n or VFILT_MAX_N)");
}

/// The input ideal: either parsed from --ideal or the vertex-cover ideal of
/// the --graph family.
MonomialIdeal base_ideal(const Options& o, const ScaleLimits& limits) {
  if (!o.ideal_text.empty() && !o.graph_text.empty())
    throw domain_error("provide either --ideal or --graph, not both");
  if (!o.ideal_text.empty()) {
    MonomialIdeal base = parse_ideal(o.ideal_text);
    require_vars(base.ring()->size(), limits);
    return base;
  }
  if (!o.graph_text.empty()) {
    MonomialIdeal base = cover_ideal(parse_graph(o.graph_text));
    require_vars(base.ring()->size(), limits);
    return base;
  }
  throw domain_error("provide --ideal or --graph");
}

FiltrationSpec spec_of(const std::string& kind, MonomialIdeal base) {
  if (kind == "ordinary") return FiltrationSpec::ordinary(std::move(base));
  if (kind == "symbolic") return FiltrationSpec::symbolic_minass(std::move(base));
  if (kind == "symbolic-ass") return FiltrationSpec::symbolic_ass(std::move(base));
  if (kind == "closure") return FiltrationSpec::closure(std::move(base));
  throw domain_error("unknown filtration kind '" + kind +
                     "' (expected ordinary, symbolic, symbolic-ass, or closure)");
}

/// The ideal a pointwise command operates on: the base ideal itself, or the
/// --n-th member of the --filtration built on it.
MonomialIdeal member_ideal(const Options& o, const ScaleLimits& limits) {
  MonomialIdeal base = base_ideal(o, limits);
  if (o.n < 0) return base;
  const Int n(o.n);
  require_n(n, limits);
  return evaluate(spec_of(o.filtration, std::move(base)), n);
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_ideal(const MonomialIdeal& ideal, bool json) {
  if (json) {
    print_json(ideal_to_json(ideal));
    return;
  }
  // Append the ring so the output parses back through --ideal.
  std::cout << to_string(ideal) << " in [";
  const auto& names = ideal.ring()->names();
  for (std::size_t i = 0; i < names.size(); ++i)
    std::cout << (i ? "," : "") << names[i];
  std::cout << "]\n";
}

void print_vresult(const MonomialIdeal& ideal, const VResult& r, bool json) {
  if (json) {
    print_json(vresult_to_json(r));
    return;
  }
  std::cout << "value    " << r.value << "\n"
            << "prime    " << to_string(r.prime) << "\n"
            << "witness  " << to_string(*ideal.ring(), r.witness) << "\n";
}

void print_primes(const std::vector<MonomialPrime>& primes, bool json) {
  if (json) {
    Json arr = Json::array();
    for (const auto& p : primes) arr.push_back(prime_to_json(p));
    print_json(arr);
    return;
  }
  for (const auto& p : primes) std::cout << to_string(p) << "\n";
}

std::string line_formula(const FitLine& line) {
  std::string out = rational_to_string(line.slope) + "*n";
  if (line.intercept > 0) out += " + " + rational_to_string(line.intercept);
  if (line.intercept < 0) out += " - " + rational_to_string(-line.intercept);
  return out;
}

void print_series_human(const VSeries& series,
                        const std::optional<QuasiLinearFit>& fit,
                        const std::optional<SlopeLimitResult>& limit,
                        bool fit_requested) {
  const RingContext& ring = *series.spec.ring();
  std::cout << "n\tv\tprime\twitness\n";
  for (Int n = series.lo; n <= series.hi(); ++n) {
    const VResult& r = series.at(n);
    std::cout << n << "\t" << r.value << "\t" << to_string(r.prime) << "\t"
              << to_string(ring, r.witness) << "\n";
  }
  if (fit) {
    std::cout << "fit: period " << fit->period << ", exact from n = "
              << fit->n0 << "\n";
    for (std::size_t r = 0; r < fit->lines.size(); ++r)
      std::cout << "  n % " << fit->period << " = " << r
                << ": v(n) = " << line_formula(fit->lines[r]) << "\n";
  } else if (fit_requested) {
    std::cout << "no quasi-linear fit on the sampled range\n";
  }
  if (limit) {
    if (limit->slope) {
      std::cout << "slope: " << rational_to_string(*limit->slope) << "\n";
    } else if (!limit->fit) {
      std::cout << "v(n)/n tail:\n";
      for (const auto& [n, ratio] : limit->ratio_tail)
        std::cout << "  n = " << n << ": " << rational_to_string(ratio) << "\n";
    }
  }
}

int cmd_series(const Options& o) {
  const ScaleLimits limits = resolve_limits(o);

  // The sampled range: explicit, or [1, 8] for small rings and [1, 5]
  // otherwise, capped by the configured limit.
  std::optional<SampleRange> range;
  if (!o.range_text.empty()) {
    range = parse_range(o.range_text);
    if (range->lo < 1 || range->hi < range->lo)
      throw domain_error("range must satisfy 1 <= lo <= hi");
    if (range->hi > limits.max_n)
      throw scale_limit_error("range reaches n = " + range->hi.str() +
                              ", above the scale limit n <= " +
                              limits.max_n.str() +
                              " (raise with --max-n or VFILT_MAX_N)");
  }
  auto default_range = [&](std::size_t nvars,
                           std::optional<Int> table_hi) -> SampleRange {
    Int hi = nvars <= 10 ? 8 : 5;
    if (hi > limits.max_n) hi = limits.max_n;
    if (table_hi && hi > *table_hi) hi = *table_hi;
    return {1, hi};
  };

  std::optional<FiltrationSpec> spec;
  if (!o.spec_text.empty()) {
    if (!o.ideal_text.empty() || !o.graph_text.empty())
      throw domain_error("provide --spec or an ideal source, not both");
    if (o.spec_text == "example-1.1" || o.spec_text == "example-1.2") {
      if (!range) range = default_range(2, std::nullopt);
      spec = named_filtration(o.spec_text, range->hi);
    } else {
      std::ifstream in(o.spec_text);
      if (!in) throw domain_error("cannot open spec file '" + o.spec_text + "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      spec = spec_from_json(parse_json_text(buffer.str()));
      require_vars(spec->ring()->size(), limits);
      if (!range) {
        std::optional<Int> table_hi;
        if (spec->kind() == FiltrationKind::explicit_table)
          table_hi = Int(spec->table().size()) - 1;
        range = default_range(spec->ring()->size(), table_hi);
      }
    }
  } else {
    spec = spec_of(o.filtration, base_ideal(o, limits));
    if (!range) range = default_range(spec->ring()->size(), std::nullopt);
  }

  std::optional<MonomialPrime> prime;
  if (!o.prime_text.empty()) prime = parse_prime(o.prime_text, spec->ring());

  const VSeries series = v_series(*spec, prime, *range);

  std::optional<QuasiLinearFit> fit;
  std::optional<SlopeLimitResult> limit;
  if (o.period > 0) {
    fit = quasi_linear_fit(series, Int(o.period));
  } else if (o.fit) {
    limit = slope_limit(series);
    fit = limit->fit;
  }

  if (o.json)
    print_json(series_report_json(series, fit, limit));
  else
    print_series_human(series, fit, limit, o.fit || o.period > 0);
  return 0;
}

int cmd_svd(const Options& o) {
  const ScaleLimits limits = resolve_limits(o);
  if (o.emax < 1 || o.nmax < 1)
    throw domain_error("--emax and --nmax must be >= 1");
  if (Int(o.emax) * o.nmax > limits.max_n)
    throw scale_limit_error(
        "stabilization search evaluates the filtration at n = " +
        (Int(o.emax) * o.nmax).str() + ", above the scale limit n <= " +
        limits.max_n.str() + " (raise with --max-n or VFILT_MAX_N)");
  const FiltrationSpec spec = spec_of(o.filtration, base_ideal(o, limits));
  const auto result = svd_detect(spec, o.emax, o.nmax);
  if (o.json) {
    Json out{{"e_max", o.emax}, {"n_max", o.nmax}};
    out["svd"] = result ? Json(result->e.convert_to<long long>()) : Json();
    print_json(out);
  } else if (result) {
    std::cout << "svd = " << result->e << " (every n <= " << result->n_max
              << " checked)\n";
  } else {
    std::cout << "no stabilization exponent e <= " << o.emax
              << " found (checked n <= " << o.nmax << ")\n";
  }
  return 0;
}

std::string params_suffix(const TheoremCase& c) {
  std::string out;
  for (const auto& [name, value] : c.params)
    out += (out.empty() ? "" : ", ") + name + "=" + std::to_string(value);
  return out.empty() ? "" : " (" + out + ")";
}

void print_report_human(const VerifyReport& report) {
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (report.pass ? "[PASS] " : "[FAIL] ") << report.theorem_case.id
       << params_suffix(report.theorem_case) << " n = "
       << report.theorem_case.range.lo << ".." << report.theorem_case.range.hi
       << ": " << report.rows.size() << " checks (" << report.seconds << "s)";
  std::cout << line.str() << "\n";
  for (const auto& r : report.rows)
    if (!r.pass)
      std::cout << "       n=" << r.n << " " << r.label << ": expected "
                << r.expected << ", computed " << r.computed << "\n";
}

int cmd_verify(const Options& o) {
  const ScaleLimits limits = resolve_limits(o);

  if (o.oracle_count > 0) {
    const auto start = std::chrono::steady_clock::now();
    const OracleSpotCheck check = oracle_spot_check(o.seed, o.oracle_count);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (o.json) {
      Json out{{"seed", o.seed},
               {"ideals", check.ideals},
               {"comparisons", check.comparisons},
               {"failures", check.failures},
               {"seconds", seconds}};
      if (!check.first_failure.empty())
        out["first_failure"] = check.first_failure;
      print_json(out);
    } else {
      std::cout << (check.failures == 0 ? "[PASS] " : "[FAIL] ")
                << "oracle spot-check: seed " << o.seed << ", "
                << check.ideals << " ideals, " << check.comparisons
                << " comparisons, " << check.failures << " failures\n";
      if (!check.first_failure.empty())
        std::cout << "       first failure: " << check.first_failure << "\n";
    }
    return check.failures == 0 ? 0 : 1;
  }

  std::vector<TheoremCase> cases;
  if (!o.params.empty() || !o.range_text.empty()) {
    if (o.case_id.empty())
      throw domain_error("--param and --range require --case");
    TheoremCase c{o.case_id, {}, {1, 4}};
    for (const auto& entry : o.params) {
      const auto eq = entry.find('=');
      std::size_t consumed = 0;
      long value = 0;
      if (eq != std::string::npos && eq > 0) {
        try {
          value = std::stol(entry.substr(eq + 1), &consumed);
        } catch (const std::exception&) {
          consumed = 0;
        }
      }
      if (eq == std::string::npos || eq == 0 ||
          consumed != entry.size() - eq - 1)
        throw domain_error("--param expects name=integer, got '" + entry + "'");
      c.params[entry.substr(0, eq)] = value;
    }
    if (!o.range_text.empty()) c.range = parse_range(o.range_text);
    cases.push_back(std::move(c));
  } else {
    cases = default_cases(o.case_id);
  }

  const auto reports = parallel_map(
      cases, [&](const TheoremCase& c) { return run_verify_case(c, limits); });

  bool all_pass = true;
  double total_seconds = 0.0;
  for (const auto& report : reports) {
    all_pass = all_pass && report.pass;
    total_seconds += report.seconds;
  }

  if (o.json) {
    Json arr = Json::array();
    for (const auto& report : reports)
      arr.push_back(verify_report_json(report));
    print_json(arr);
  } else {
    for (const auto& report : reports) print_report_human(report);
    if (reports.size() > 1) {
      std::size_t passed = 0;
      for (const auto& report : reports) passed += report.pass ? 1 : 0;
      std::ostringstream line;
      line.setf(std::ios::fixed);
      line.precision(2);
      line << reports.size() << " cases: " << passed << " passed, "
           << (reports.size() - passed) << " failed (" << total_seconds
           << "s)";
      std::cout << line.str() << "\n";
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_graph(const Options& o) {
  const ScaleLimits limits = resolve_limits(o);
  if (o.graph_text.empty()) throw domain_error("provide --graph");
  const Graph g = parse_graph(o.graph_text);
  require_vars(g.num_vertices(), limits);
  if (o.json) {
    print_json(graph_to_json(g));
    return 0;
  }
  const auto& names = g.vertex_names();
  std::cout << "graph: " << g.num_vertices() << " vertices, "
            << g.edges().size() << " edges\n";
  std::cout << "vertices: ";
  for (std::size_t i = 0; i < names.size(); ++i)
    std::cout << (i ? ", " : "") << names[i];
  std::cout << "\nedges: ";
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    std::cout << (i ? ", " : "") << "{" << names[g.edges()[i].first] << ","
              << names[g.edges()[i].second] << "}";
  std::cout << "\nbipartite: " << (is_bipartite(g) ? "yes" : "no") << "\n";
  std::cout << "edge ideal:  " << to_string(edge_ideal(g)) << "\n";
  std::cout << "cover ideal: " << to_string(cover_ideal(g)) << "\n";
  return 0;
}

void add_scale_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--max-vars", o.max_vars_flag,
                  "Scale limit on ring variables (default 12)");
  cmd->add_option("--max-n", o.max_n_flag,
                  "Scale limit on filtration indices (default 8)");
}

void add_ideal_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--ideal", o.ideal_text,
                  "Ideal, e.g. '(x^2, x*y^4) in [x,y]'");
  cmd->add_option("--graph", o.graph_text,
                  "Graph family (K(m), Kb(a,b), C(u), Kpend(m,s), hbip(p), "
                  "fakhari(F,k)); its vertex-cover ideal is used");
}

void add_member_flags(CLI::App* cmd, Options& o,
                      const std::vector<std::string>& kinds) {
  cmd->add_option("--filtration", o.filtration,
                  "Filtration kind, used together with --n")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  cmd->add_option("--n", o.n, "Evaluate the filtration at this index");
}

constexpr const char* kAllKinds[] = {"ordinary", "symbolic", "symbolic-ass",
                                     "closure"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact v-numbers of monomial ideals and their power filtrations"};
  app.require_subcommand(1);
  app.footer(
      "Environment: VFILT_MAX_VARS and VFILT_MAX_N override the default scale\n"
      "limits (12 variables, n <= 8); --max-vars and --max-n override both.\n"
      "Exit codes: 0 all requested checks pass, 1 failed checks or math\n"
      "errors, 2 parse errors, 3 scale-limit refusals.");

  Options o;
  const std::vector<std::string> all_kinds(std::begin(kAllKinds),
                                           std::end(kAllKinds));
  int rc = 0;

  auto* v_cmd = app.add_subcommand(
      "v", "Global v-number with the achieving prime and witness");
  add_ideal_source(v_cmd, o);
  add_member_flags(v_cmd, o, all_kinds);
  v_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    const MonomialIdeal ideal = member_ideal(o, limits);
    print_vresult(ideal, v(ideal), o.json);
  });

  auto* vlocal_cmd =
      app.add_subcommand("vlocal", "Local v-number at an associated prime");
  add_ideal_source(vlocal_cmd, o);
  add_member_flags(vlocal_cmd, o, all_kinds);
  vlocal_cmd->add_option("--prime", o.prime_text, "Prime, e.g. 'x,y'")
      ->required();
  vlocal_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    const MonomialIdeal ideal = member_ideal(o, limits);
    const MonomialPrime p = parse_prime(o.prime_text, ideal.ring());
    print_vresult(ideal, local_v(ideal, p), o.json);
  });

  auto* ass_cmd = app.add_subcommand("ass", "Associated primes");
  add_ideal_source(ass_cmd, o);
  add_member_flags(ass_cmd, o, all_kinds);
  ass_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    print_primes(associated_primes(member_ideal(o, limits)), o.json);
  });

  auto* min_cmd = app.add_subcommand("min", "Minimal primes");
  add_ideal_source(min_cmd, o);
  add_member_flags(min_cmd, o, all_kinds);
  min_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    print_primes(minimal_primes(member_ideal(o, limits)), o.json);
  });

  auto* alpha_cmd =
      app.add_subcommand("alpha", "Initial degree (least generator degree)");
  add_ideal_source(alpha_cmd, o);
  add_member_flags(alpha_cmd, o, all_kinds);
  alpha_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    const Int a = alpha(member_ideal(o, limits));
    if (o.json)
      print_json(Json{{"alpha", a.convert_to<long long>()}});
    else
      std::cout << a << "\n";
  });

  auto* colon_cmd = app.add_subcommand("colon", "Colon ideal (I : J)");
  colon_cmd->add_option("--ideal", o.ideal_text, "Ideal I")->required();
  colon_cmd->add_option("--by", o.by_text, "Ideal J in the same ring")
      ->required();
  colon_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    const MonomialIdeal lhs = base_ideal(o, limits);
    print_ideal(colon_ideal(lhs, parse_ideal(o.by_text)), o.json);
  });

  auto* intersect_cmd = app.add_subcommand("intersect", "Intersection I ∩ J");
  intersect_cmd->add_option("--ideal", o.ideal_text, "Ideal I")->required();
  intersect_cmd->add_option("--by", o.by_text, "Ideal J in the same ring")
      ->required();
  intersect_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    const MonomialIdeal lhs = base_ideal(o, limits);
    print_ideal(intersect(lhs, parse_ideal(o.by_text)), o.json);
  });

  auto* saturate_cmd =
      app.add_subcommand("saturate", "Saturation (I : J^infinity)");
  saturate_cmd->add_option("--ideal", o.ideal_text, "Ideal I")->required();
  saturate_cmd->add_option("--by", o.by_text, "Ideal J in the same ring");
  saturate_cmd->add_option("--prime", o.prime_text,
                           "Saturate by this prime instead of --by");
  saturate_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    const MonomialIdeal lhs = base_ideal(o, limits);
    if (o.by_text.empty() == o.prime_text.empty())
      throw domain_error("provide exactly one of --by and --prime");
    const MonomialIdeal rhs =
        o.by_text.empty() ? parse_prime(o.prime_text, lhs.ring()).as_ideal()
                          : parse_ideal(o.by_text);
    print_ideal(saturation(lhs, rhs), o.json);
  });

  auto* closure_cmd =
      app.add_subcommand("closure", "Integral closure of I^n (default n = 1)");
  add_ideal_source(closure_cmd, o);
  closure_cmd->add_option("--n", o.n, "Power to close");
  closure_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    const Int n(o.n < 0 ? 1 : o.n);
    require_n(n, limits);
    print_ideal(evaluate(FiltrationSpec::closure(base_ideal(o, limits)), n),
                o.json);
  });

  auto* symbolic_cmd =
      app.add_subcommand("symbolic", "Symbolic power I^(n) (default n = 1)");
  add_ideal_source(symbolic_cmd, o);
  symbolic_cmd
      ->add_option("--filtration", o.symbolic_kind,
                   "Localize at minimal (symbolic) or associated "
                   "(symbolic-ass) primes")
      ->check(CLI::IsMember({"symbolic", "symbolic-ass"}))
      ->capture_default_str();
  symbolic_cmd->add_option("--n", o.n, "Symbolic power index");
  symbolic_cmd->callback([&] {
    const ScaleLimits limits = resolve_limits(o);
    const Int n(o.n < 0 ? 1 : o.n);
    require_n(n, limits);
    print_ideal(evaluate(spec_of(o.symbolic_kind, base_ideal(o, limits)), n),
                o.json);
  });

  auto* series_cmd = app.add_subcommand(
      "series", "Sampled v-numbers over a range, with optional fit");
  add_ideal_source(series_cmd, o);
  series_cmd->add_option(
      "--spec", o.spec_text,
      "Named filtration (example-1.1, example-1.2) or a JSON spec file");
  series_cmd
      ->add_option("--filtration", o.filtration, "Filtration kind")
      ->check(CLI::IsMember(all_kinds))
      ->capture_default_str();
  series_cmd->add_option("--prime", o.prime_text,
                         "Sample the local v-number at this prime");
  series_cmd->add_option("--range", o.range_text, "Sample range A..B");
  series_cmd->add_option("--period", o.period,
                         "Fit a quasi-linear form with this exact period");
  series_cmd->add_flag("--fit", o.fit,
                       "Search periods 1..6 for a quasi-linear fit");
  series_cmd->callback([&] { rc = cmd_series(o); });

  auto* svd_cmd = app.add_subcommand(
      "svd", "Smallest e with F(e*n) = F(e)^n for all sampled n");
  add_ideal_source(svd_cmd, o);
  svd_cmd->add_option("--filtration", o.filtration, "Filtration kind")
      ->check(CLI::IsMember(all_kinds))
      ->capture_default_str();
  svd_cmd->add_option("--emax", o.emax, "Largest exponent to try")
      ->capture_default_str();
  svd_cmd->add_option("--nmax", o.nmax, "Check n up to this bound")
      ->capture_default_str();
  svd_cmd->callback([&] { rc = cmd_svd(o); });

  auto* verify_cmd = app.add_subcommand(
      "verify", "Closed-form checks; exits 0 only if every check passes");
  verify_cmd->add_option(
      "--case", o.case_id,
      "Case id (T4.1, T4.3, T4.5, T4.7, C4.4, T4.6, C4.9, E1.1, E1.2, E3.6, "
      "R4.2); default: all");
  verify_cmd->add_option("--param", o.params,
                         "Case parameter name=value (repeatable); "
                         "defaults to the built-in instances");
  verify_cmd->add_option("--range", o.range_text,
                         "Sample range A..B for an explicit --param case");
  verify_cmd->add_option(
      "--oracle", o.oracle_count,
      "Cross-check this many random ideals against the brute-force oracle");
  verify_cmd->add_option("--seed", o.seed, "Seed for --oracle")
      ->capture_default_str();
  verify_cmd->callback([&] { rc = cmd_verify(o); });

  auto* graph_cmd =
      app.add_subcommand("graph", "Show a graph family and its ideals");
  graph_cmd->add_option("--graph", o.graph_text, "Graph family")->required();
  graph_cmd->callback([&] { rc = cmd_graph(o); });

  for (auto* cmd : app.get_subcommands({})) {
    add_scale_flags(cmd, o);
    cmd->add_flag("--json", o.json, "Emit JSON instead of a table");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const scale_limit_error& e) {
    std::cerr << "scale limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error";
    const auto parsed = app.get_subcommands();
    if (!parsed.empty()) std::cerr << " in '" << parsed.front()->get_name() << "'";
    std::cerr << ": " << e.what() << "\n";
    return 1;
  }
  return rc;
}
