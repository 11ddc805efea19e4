#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "filtration.hpp"
#include "graph.hpp"
#include "ideal.hpp"
#include "prime.hpp"
#include "series.hpp"
#include "verify.hpp"
#include "vnumber.hpp"

namespace vfilt {

/// JSON with insertion-ordered object keys, so printed documents match the
/// documented field order.
using Json = nlohmann::ordered_json;

namespace detail {

inline long long json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v < lo || v > hi)
    throw domain_error("integer too large for JSON output: " + v.str());
  return v.convert_to<long long>();
}

inline const Json& member(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    throw domain_error(std::string(what) + " JSON requires a '" + key +
                       "' field");
  return j.at(key);
}

inline std::vector<std::string> string_array(const Json& j, const char* what) {
  if (!j.is_array())
    throw domain_error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string())
      throw domain_error(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace detail

/// Parses raw JSON text; syntax errors are reported with line and column.
inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // nlohmann reports a byte offset; recover the line and column.
    std::size_t line = 1, col = 1;
    const std::size_t stop =
        std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error("invalid JSON", line, col);
  }
}

// --- ideals ---------------------------------------------------------------

inline Json ideal_to_json(const MonomialIdeal& ideal) {
  Json vars = Json::array();
  for (const auto& name : ideal.ring()->names()) vars.push_back(name);
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) {
    Json row = Json::array();
    for (std::size_t i = 0; i < g.size(); ++i)
      row.push_back(detail::json_int(g.exp(i)));
    gens.push_back(std::move(row));
  }
  return Json{{"variables", std::move(vars)}, {"generators", std::move(gens)}};
}

inline MonomialIdeal ideal_from_json(const Json& j) {
  auto variables =
      detail::string_array(detail::member(j, "variables", "ideal"), "variables");
  const Json& gens = detail::member(j, "generators", "ideal");
  if (!gens.is_array())
    throw domain_error("ideal 'generators' must be an array");
  RingPtr ring = make_ring(std::move(variables));
  if (gens.empty()) return MonomialIdeal::zero(ring);
  std::vector<Monomial> monomials;
  monomials.reserve(gens.size());
  for (const auto& row : gens) {
    if (!row.is_array() || row.size() != ring->size())
      throw domain_error(
          "each generator must list one exponent per ring variable");
    std::vector<Int> e;
    e.reserve(row.size());
    for (const auto& entry : row) {
      if (!entry.is_number_integer() || entry.get<long long>() < 0)
        throw domain_error("exponents must be nonnegative integers");
      e.emplace_back(entry.get<long long>());
    }
    monomials.emplace_back(std::move(e));
  }
  return MonomialIdeal(ring, std::move(monomials));
}

// --- primes and v-number results -------------------------------------------

inline Json prime_to_json(const MonomialPrime& p) {
  Json out = Json::array();
  for (const auto& name : p.names()) out.push_back(name);
  return out;
}

inline MonomialPrime prime_from_json(const Json& j, const RingPtr& ring) {
  return MonomialPrime::from_names(ring, detail::string_array(j, "prime"));
}

inline Json vresult_to_json(const VResult& r) {
  Json witness = Json::array();
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    witness.push_back(detail::json_int(r.witness.exp(i)));
  return Json{{"value", detail::json_int(r.value)},
              {"prime", prime_to_json(r.prime)},
              {"witness", std::move(witness)}};
}

// --- graphs -----------------------------------------------------------------

inline Json graph_to_json(const Graph& g) {
  Json vertices = Json::array();
  for (const auto& name : g.vertex_names()) vertices.push_back(name);
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges())
    edges.push_back(Json::array({g.vertex_names()[u], g.vertex_names()[v]}));
  return Json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
  auto vertices =
      detail::string_array(detail::member(j, "vertices", "graph"), "vertices");
  const Json& edges = detail::member(j, "edges", "graph");
  if (!edges.is_array()) throw domain_error("graph 'edges' must be an array");
  RingPtr lookup = make_ring(vertices);  // validates distinct nonempty names
  std::vector<Graph::Edge> pairs;
  pairs.reserve(edges.size());
  for (const auto& e : edges) {
    auto ends = detail::string_array(e, "edge");
    if (ends.size() != 2)
      throw domain_error("each edge must name exactly two vertices");
    pairs.emplace_back(lookup->index_of(ends[0]), lookup->index_of(ends[1]));
  }
  return Graph(std::move(vertices), std::move(pairs));
}

// --- filtration specs -------------------------------------------------------

inline Json spec_to_json(const FiltrationSpec& spec) {
  Json out{{"kind", to_string(spec.kind())}};
  switch (spec.kind()) {
    case FiltrationKind::explicit_table: {
      Json table = Json::array();
      for (const auto& ideal : spec.table())
        table.push_back(ideal_to_json(ideal));
      out["table"] = std::move(table);
      break;
    }
    case FiltrationKind::generalized:
      out["base"] = ideal_to_json(spec.base());
      out["multiplier"] = ideal_to_json(spec.multiplier());
      break;
    default:
      out["base"] = ideal_to_json(spec.base());
      break;
  }
  return out;
}

inline FiltrationSpec spec_from_json(const Json& j) {
  const std::string kind =
      detail::member(j, "kind", "filtration spec").get<std::string>();
  if (kind == "explicit_table") {
    const Json& table = detail::member(j, "table", "explicit filtration");
    if (!table.is_array() || table.empty())
      throw domain_error("explicit filtration requires a nonempty table");
    std::vector<MonomialIdeal> ideals;
    ideals.reserve(table.size());
    for (const auto& e : table) ideals.push_back(ideal_from_json(e));
    RingPtr ring = ideals.front().ring();
    return FiltrationSpec::explicit_table(ring, std::move(ideals));
  }
  MonomialIdeal base =
      ideal_from_json(detail::member(j, "base", "filtration spec"));
  if (kind == "ordinary") return FiltrationSpec::ordinary(std::move(base));
  if (kind == "symbolic_minass")
    return FiltrationSpec::symbolic_minass(std::move(base));
  if (kind == "symbolic_ass")
    return FiltrationSpec::symbolic_ass(std::move(base));
  if (kind == "closure") return FiltrationSpec::closure(std::move(base));
  if (kind == "generalized")
    return FiltrationSpec::generalized(
        std::move(base),
        ideal_from_json(detail::member(j, "multiplier", "generalized spec")));
  throw domain_error("unknown filtration kind: " + kind);
}

// --- series reports ----------------------------------------------------------

inline Json fit_to_json(const QuasiLinearFit& fit) {
  Json lines = Json::array();
  for (const auto& line : fit.lines)
    lines.push_back(Json{{"slope", rational_to_string(line.slope)},
                         {"intercept", rational_to_string(line.intercept)}});
  return Json{{"period", detail::json_int(fit.period)},
              {"lines", std::move(lines)},
              {"n0", detail::json_int(fit.n0)}};
}

// --- verification reports -----------------------------------------------------

inline Json verify_report_json(const VerifyReport& report) {
  Json params = Json::object();
  for (const auto& [name, value] : report.theorem_case.params)
    params[name] = value;
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back(Json{{"n", detail::json_int(r.n)},
                        {"check", r.label},
                        {"expected", r.expected},
                        {"computed", r.computed},
                        {"pass", r.pass}});
  return Json{{"id", report.theorem_case.id},
              {"params", std::move(params)},
              {"range", {{"lo", detail::json_int(report.theorem_case.range.lo)},
                         {"hi", detail::json_int(report.theorem_case.range.hi)}}},
              {"rows", std::move(rows)},
              {"pass", report.pass},
              {"seconds", report.seconds}};
}

/// Report for a sampled series: values keyed by n, the requested prime when
/// local, and the fit when one was found.
inline Json series_report_json(
    const VSeries& series, const std::optional<QuasiLinearFit>& fit,
    const std::optional<SlopeLimitResult>& limit = std::nullopt) {
  Json samples = Json::object();
  for (Int n = series.lo; n <= series.hi(); ++n)
    samples[n.str()] = detail::json_int(series.at(n).value);
  Json out{{"samples", std::move(samples)}};
  if (series.prime) out["prime"] = prime_to_json(*series.prime);
  if (fit) out["fit"] = fit_to_json(*fit);
  if (limit) {
    if (limit->slope) out["slope"] = rational_to_string(*limit->slope);
    if (!limit->fit && fit == std::nullopt) {
      Json tail = Json::array();
      for (const auto& [n, ratio] : limit->ratio_tail)
        tail.push_back(Json{{"n", detail::json_int(n)},
                            {"ratio", rational_to_string(ratio)}});
      out["ratio_tail"] = std::move(tail);
    }
  }
  return out;
}

}  // namespace vfilt
