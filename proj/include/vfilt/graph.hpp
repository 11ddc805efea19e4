#pragma once

#include <algorithm>
#include <memory>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ideal.hpp"
#include "prime.hpp"

namespace vfilt {

/// Finite simple graph on named vertices. The vertex names double as the
/// variable names of the polynomial ring carrying its ideals.
class Graph {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
      : ring_(make_ring(std::move(vertices))) {
    for (auto& [u, v] : edges) {
      if (u >= ring_->size() || v >= ring_->size())
        throw domain_error("graph edge endpoint out of range");
      if (u == v) throw domain_error("graph edges may not be loops");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
  }

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t num_vertices() const noexcept { return ring_->size(); }
  const std::vector<std::string>& vertex_names() const noexcept {
    return ring_->names();
  }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t index_of(const std::string& name) const {
    return ring_->index_of(name);
  }

private:
  RingPtr ring_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Families

/// K(m): complete graph on x1..xm.
inline Graph complete_graph(long m) {
  if (m < 1) throw domain_error("complete graph needs at least one vertex");
  std::vector<std::string> names;
  for (long i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(m); ++j)
      edges.emplace_back(i, j);
  return Graph(std::move(names), std::move(edges));
}

/// Kb(a,b) with a <= b: complete bipartite graph on x1..xa, y1..yb.
inline Graph complete_bipartite_graph(long a, long b) {
  if (a < 1 || b < a)
    throw domain_error("complete bipartite graph requires 1 <= a <= b");
  std::vector<std::string> names;
  for (long i = 1; i <= a; ++i) names.push_back("x" + std::to_string(i));
  for (long j = 1; j <= b; ++j) names.push_back("y" + std::to_string(j));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < static_cast<std::size_t>(a); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(b); ++j)
      edges.emplace_back(i, static_cast<std::size_t>(a) + j);
  return Graph(std::move(names), std::move(edges));
}

/// C(u): cycle on x1..xu, u >= 3.
inline Graph cycle_graph(long u) {
  if (u < 3) throw domain_error("cycle graph requires at least three vertices");
  std::vector<std::string> names;
  for (long i = 1; i <= u; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(u); ++i)
    edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<std::size_t>(u) - 1);
  return Graph(std::move(names), std::move(edges));
}

/// Kpend(m,s): complete graph on x1..xm with s pendant vertices xj_1..xj_s
/// attached to each xj.
inline Graph pendant_complete_graph(long m, long s) {
  if (m < 1 || s < 1)
    throw domain_error("pendant complete graph requires m >= 1 and s >= 1");
  std::vector<std::string> names;
  for (long i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  for (long i = 1; i <= m; ++i)
    for (long l = 1; l <= s; ++l)
      names.push_back("x" + std::to_string(i) + "_" + std::to_string(l));
  std::vector<Graph::Edge> edges;
  const auto core = static_cast<std::size_t>(m);
  for (std::size_t i = 0; i < core; ++i)
    for (std::size_t j = i + 1; j < core; ++j) edges.emplace_back(i, j);
  for (std::size_t i = 0; i < core; ++i)
    for (std::size_t l = 0; l < static_cast<std::size_t>(s); ++l)
      edges.emplace_back(i, core + i * static_cast<std::size_t>(s) + l);
  return Graph(std::move(names), std::move(edges));
}

/// fakhari(G,k): vertex v becomes slots v_1..v_k; slots v_p, w_q of an edge
/// (v,w) are joined exactly when p + q <= k + 1.
inline Graph fakhari_graph(const Graph& g, long k) {
  if (k < 1) throw domain_error("expansion requires k >= 1");
  const auto slots = static_cast<std::size_t>(k);
  std::vector<std::string> names;
  for (const auto& v : g.vertex_names())
    for (std::size_t p = 1; p <= slots; ++p)
      names.push_back(v + "_" + std::to_string(p));
  std::vector<Graph::Edge> edges;
  for (const auto& [u, w] : g.edges())
    for (std::size_t p = 1; p <= slots; ++p)
      for (std::size_t q = 1; q + p <= slots + 1; ++q)
        edges.emplace_back(u * slots + (p - 1), w * slots + (q - 1));
  return Graph(std::move(names), std::move(edges));
}

/// hbip(p): bipartite graph on x1..x2p, y1..y2p where the first p left
/// vertices see y1..yp and the last p left vertices see every y.
inline Graph doubled_bipartite_graph(long p) {
  if (p < 1) throw domain_error("doubled bipartite graph requires p >= 1");
  const auto half = static_cast<std::size_t>(p);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= 2 * half; ++i)
    names.push_back("x" + std::to_string(i));
  for (std::size_t j = 1; j <= 2 * half; ++j)
    names.push_back("y" + std::to_string(j));
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < half; ++i)
    for (std::size_t j = 0; j < half; ++j)
      edges.emplace_back(i, 2 * half + j);
  for (std::size_t i = half; i < 2 * half; ++i)
    for (std::size_t j = 0; j < 2 * half; ++j)
      edges.emplace_back(i, 2 * half + j);
  return Graph(std::move(names), std::move(edges));
}

/// Named graph family, possibly wrapping an inner family.
struct FamilyTag {
  std::string kind;  // "K", "Kb", "C", "Kpend", "fakhari", "hbip"
  long a = 0;
  long b = 0;
  std::shared_ptr<FamilyTag> inner;  // fakhari only
};

inline Graph build(const FamilyTag& tag) {
  if (tag.kind == "K") return complete_graph(tag.a);
  if (tag.kind == "Kb") return complete_bipartite_graph(tag.a, tag.b);
  if (tag.kind == "C") return cycle_graph(tag.a);
  if (tag.kind == "Kpend") return pendant_complete_graph(tag.a, tag.b);
  if (tag.kind == "hbip") return doubled_bipartite_graph(tag.a);
  if (tag.kind == "fakhari") {
    if (!tag.inner) throw domain_error("fakhari family requires an inner family");
    return fakhari_graph(build(*tag.inner), tag.a);
  }
  throw domain_error("unknown graph family: " + tag.kind);
}

// ---------------------------------------------------------------------------
// Ideals of a graph

/// Edge ideal: generated by the products over the edges (zero if edgeless).
inline MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    std::vector<Int> e(g.num_vertices(), Int(0));
    e[u] = 1;
    e[v] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(g.ring(), std::move(gens));
}

/// Cover ideal: intersection of the edge primes (u, v). Its generators are
/// the minimal vertex covers.
inline MonomialIdeal cover_ideal(const Graph& g) {
  if (g.edges().empty())
    throw domain_error("cover ideal of an edgeless graph");
  std::vector<MonomialIdeal> parts;
  parts.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges())
    parts.push_back(MonomialPrime(g.ring(), {u, v}).as_ideal());
  return intersect(parts, g.ring());
}

/// Minimal vertex covers, as sorted vertex-index sets in the canonical
/// generator order of the cover ideal.
inline std::vector<std::vector<std::size_t>> minimal_vertex_covers(
    const Graph& g) {
  const MonomialIdeal cover = cover_ideal(g);
  std::vector<std::vector<std::size_t>> covers;
  for (const auto& gen : cover.generators()) covers.push_back(gen.support());
  return covers;
}

inline bool is_bipartite(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> color(n, -1);
  for (std::size_t start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<std::size_t> queue;
    queue.push(start);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (auto v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Whether every associated prime of the edge ideal (equivalently, every
/// minimal vertex cover) has the same height.
inline bool is_unmixed_edge_ideal(const Graph& g) {
  auto covers = minimal_vertex_covers(g);
  for (const auto& c : covers)
    if (c.size() != covers.front().size()) return false;
  return true;
}

/// Whether the vertex set splits into at least two groups such that the
/// edges are exactly the pairs crossing between groups. Searched
/// exhaustively over set partitions, so only small graphs are accepted.
inline bool is_complete_multipartite(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 10)
    throw scale_limit_error("complete multipartite search limited to 10 vertices");
  if (n < 2) return false;
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adjacent[u][v] = adjacent[v][u] = true;

  std::vector<std::size_t> group(n, 0);
  const auto matches = [&](std::size_t ngroups) {
    if (ngroups < 2) return false;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (adjacent[u][v] != (group[u] != group[v])) return false;
    return true;
  };
  // Assign vertex idx to an existing group or the next fresh one.
  const auto search = [&](auto&& self, std::size_t idx,
                          std::size_t ngroups) -> bool {
    if (idx == n) return matches(ngroups);
    for (std::size_t gidx = 0; gidx <= ngroups; ++gidx) {
      group[idx] = gidx;
      if (self(self, idx + 1, std::max(ngroups, gidx + 1))) return true;
    }
    return false;
  };
  return search(search, 0, 0);
}

// ---------------------------------------------------------------------------
// Polarization

/// Polarization: x_j^a expands to the product of fresh squarefree slots
/// x_j_1 .. x_j_a. The output ring lists, variable-major and slot-minor,
/// one run of slots per variable that actually occurs in the generators.
inline MonomialIdeal polarize(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit())
    throw domain_error("polarization requires a proper nonzero ideal");
  const std::size_t nvars = ideal.num_vars();
  std::vector<long> depth(nvars, 0);
  for (std::size_t j = 0; j < nvars; ++j) {
    Int d = 0;
    for (const auto& g : ideal.generators()) d = std::max(d, g.exp(j));
    if (d > 10000)
      throw scale_limit_error("polarization: exponent too large");
    depth[j] = d.convert_to<long>();
  }

  std::vector<std::string> names;
  std::vector<std::size_t> first_slot(nvars, 0);
  for (std::size_t j = 0; j < nvars; ++j) {
    first_slot[j] = names.size();
    for (long l = 1; l <= depth[j]; ++l)
      names.push_back(ideal.ring()->name(j) + "_" + std::to_string(l));
  }
  auto out_ring = make_ring(std::move(names));

  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    std::vector<Int> e(out_ring->size(), Int(0));
    for (std::size_t j = 0; j < nvars; ++j)
      for (Int l = 0; l < g.exp(j); ++l)
        e[first_slot[j] + l.convert_to<std::size_t>()] = 1;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(out_ring, std::move(gens));
}

// ---------------------------------------------------------------------------
// Closed-form regularity registry

/// Castelnuovo-Mumford regularity of R modulo the n-th (symbolic = ordinary)
/// power of the cover ideal, for the families where a closed form is
/// registered.
inline Int reg_closed_form(const FamilyTag& tag, const Int& n) {
  if (n < 1) throw domain_error("regularity closed form requires n >= 1");
  if (tag.kind == "Kb") {
    if (tag.a < 1 || tag.b < tag.a)
      throw domain_error("regularity closed form: invalid Kb parameters");
    return n * Int(tag.b) + Int(tag.a) - 2;
  }
  if (tag.kind == "K") {
    if (tag.a < 2)
      throw domain_error("regularity closed form: complete graph needs m >= 2");
    return n * (Int(tag.a) - 1) - 1;
  }
  throw domain_error("no closed-form regularity registered for family " +
                     tag.kind);
}

}  // namespace vfilt
