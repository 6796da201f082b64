#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zflow/errors.hpp"
#include "zflow/limits.hpp"
#include "zflow/multigraph.hpp"

namespace zflow {

inline int mod3(int x) { return ((x % 3) + 3) % 3; }

/// Per-edge direction overlay for a Multigraph: +1 orients edge id e from
/// edge(e).u to edge(e).v, -1 the other way.
struct Orientation {
  std::vector<signed char> dir;

  bool covers(const Multigraph& g) const {
    if (dir.size() != static_cast<std::size_t>(g.edge_count())) return false;
    for (signed char d : dir)
      if (d != 1 && d != -1) return false;
    return true;
  }

  Orientation reversed() const {
    Orientation r = *this;
    for (auto& d : r.dir) d = -d;
    return r;
  }
};

inline int tail(const Multigraph& g, const Orientation& d, int e) {
  return d.dir[e] > 0 ? g.edge(e).u : g.edge(e).v;
}
inline int head(const Multigraph& g, const Orientation& d, int e) {
  return d.dir[e] > 0 ? g.edge(e).v : g.edge(e).u;
}

inline int out_degree(const Multigraph& g, const Orientation& d, int v) {
  int out = 0;
  for (int e : g.incident_edges(v))
    if (tail(g, d, e) == v) ++out;
  return out;
}
inline int in_degree(const Multigraph& g, const Orientation& d, int v) {
  return g.degree(v) - out_degree(g, d, v);
}

/// d+(v) - d-(v).
inline int balance(const Multigraph& g, const Orientation& d, int v) {
  return 2 * out_degree(g, d, v) - g.degree(v);
}

/// Arcs with tail in x and head outside.
inline int out_degree_of_set(const Multigraph& g, const Orientation& d,
                             const VertexSet& x) {
  int out = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (x.contains(tail(g, d, e)) && !x.contains(head(g, d, e))) ++out;
  return out;
}
inline int in_degree_of_set(const Multigraph& g, const Orientation& d,
                            const VertexSet& x) {
  int in = 0;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!x.contains(tail(g, d, e)) && x.contains(head(g, d, e))) ++in;
  return in;
}

/// Z3-valued vertex labeling with total sum 0 (mod 3).
struct Boundary {
  std::vector<std::uint8_t> value;

  static Boundary zero(int n) { return {std::vector<std::uint8_t>(n, 0)}; }

  int at(int v) const { return value[v]; }
  int size() const { return static_cast<int>(value.size()); }

  bool sum_is_zero() const {
    int s = 0;
    for (auto b : value) s += b;
    return s % 3 == 0;
  }

  int of_set(const VertexSet& x) const {
    int s = 0;
    for (int v : x.vertices()) s += value[v];
    return s % 3;
  }

  Boundary negated() const {
    Boundary n = *this;
    for (auto& b : n.value) b = static_cast<std::uint8_t>(mod3(-b));
    return n;
  }

  bool operator==(const Boundary&) const = default;
};

inline bool verify_beta_orientation(const Multigraph& g, const Orientation& d,
                                    const Boundary& beta) {
  if (!d.covers(g)) throw invalid_argument_error("orientation/edge mismatch");
  if (beta.size() != g.vertex_count())
    throw invalid_argument_error("boundary/vertex mismatch");
  for (int v = 0; v < g.vertex_count(); ++v)
    if (mod3(balance(g, d, v) - beta.at(v)) != 0) return false;
  return true;
}

inline bool verify_mod3_orientation(const Multigraph& g, const Orientation& d) {
  return verify_beta_orientation(g, d, Boundary::zero(g.vertex_count()));
}

/// |tau| for a vertex set with boundary sum b (mod 3) and degree deg: the
/// magnitude of the unique value in {0,+-1,+-2,+-3} matching b mod 3 and
/// deg mod 2. Only the magnitude ever enters the degree bounds.
inline int tau_magnitude(int beta_mod3, int degree) {
  const bool odd = degree % 2 != 0;
  switch (mod3(beta_mod3)) {
    case 0: return odd ? 3 : 0;
    case 1: return odd ? 1 : 2;
    default: return odd ? 1 : 2;
  }
}

struct SearchStats {
  std::uint64_t nodes = 0;
};

enum class CertificateKind {
  Mod3Orientation,
  BetaOrientation,
  Nz3Flow,
  Z3Table,
  NonexistenceByExhaustion,
};

/// Orientation D with values in {1..k-1} flowing tail->head (canonical form:
/// a negative paper value flips the edge instead).
struct FlowAssignment {
  Orientation orientation;
  std::vector<int> value;
};

struct Z3TableEntry {
  Boundary boundary;
  Orientation orientation;
};

/// Verifiable witness attached to every solver answer. A negative answer
/// carries only the exhaustion statistics.
struct Certificate {
  CertificateKind kind = CertificateKind::NonexistenceByExhaustion;
  std::optional<Orientation> orientation;
  std::optional<FlowAssignment> flow;
  std::vector<Z3TableEntry> table;
  SearchStats stats;

  bool exists() const {
    return kind != CertificateKind::NonexistenceByExhaustion;
  }
};

namespace detail {

// Static edge order: repeatedly take the vertex with the fewest free
// incident edges left and emit them. Vertices then close early, which is
// what makes the mod-3/parity pruning bite.
inline std::vector<int> constrained_edge_order(const Multigraph& g,
                                               const std::vector<signed char>& fixed) {
  const int n = g.vertex_count();
  std::vector<int> free_count(n, 0);
  std::vector<char> listed(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (fixed[e] == 0) {
      ++free_count[g.edge(e).u];
      ++free_count[g.edge(e).v];
    } else {
      listed[e] = 1;
    }
  std::vector<int> order;
  for (;;) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (free_count[v] > 0 && (pick < 0 || free_count[v] < free_count[pick]))
        pick = v;
    if (pick < 0) break;
    for (int e : g.incident_edges(pick)) {
      if (listed[e]) continue;
      listed[e] = 1;
      order.push_back(e);
      --free_count[g.edge(e).u];
      --free_count[g.edge(e).v];
    }
  }
  return order;
}

struct BetaSearch {
  const Multigraph& g;
  const Boundary& beta;
  std::vector<int> order;
  std::vector<signed char> dir;   // working assignment
  std::vector<int> bal;           // out - in over assigned edges
  std::vector<int> rem;           // unassigned incident edges
  SearchStats& stats;

  BetaSearch(const Multigraph& g_, const Boundary& beta_,
             const std::vector<signed char>& fixed, SearchStats& stats_)
      : g(g_), beta(beta_), dir(fixed), bal(g_.vertex_count(), 0),
        rem(g_.vertex_count(), 0), stats(stats_) {
    order = constrained_edge_order(g, fixed);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (dir[e] != 0) {
        int t = dir[e] > 0 ? g.edge(e).u : g.edge(e).v;
        int h = g.other_end(e, t);
        ++bal[t];
        --bal[h];
      } else {
        ++rem[g.edge(e).u];
        ++rem[g.edge(e).v];
      }
    }
  }

  bool feasible(int v) const {
    const int gap = mod3(bal[v] - beta.at(v));
    if (rem[v] == 0) return gap == 0;
    if (rem[v] == 1) return gap == 1 || gap == 2;  // one +-1 step left
    return true;  // >= 3 reachable values of matching parity cover all residues
  }

  bool assign(std::size_t idx) {
    if (idx == order.size()) return true;
    ++stats.nodes;
    const int e = order[idx];
    const Edge& ed = g.edge(e);
    --rem[ed.u];
    --rem[ed.v];
    for (signed char d : {static_cast<signed char>(1), static_cast<signed char>(-1)}) {
      const int t = d > 0 ? ed.u : ed.v;
      const int h = d > 0 ? ed.v : ed.u;
      ++bal[t];
      --bal[h];
      if (feasible(ed.u) && feasible(ed.v)) {
        dir[e] = d;
        if (assign(idx + 1)) return true;
      }
      --bal[t];
      ++bal[h];
    }
    dir[e] = 0;
    ++rem[ed.u];
    ++rem[ed.v];
    return false;
  }
};

/// Search for a beta-orientation extending the partially fixed directions
/// (fixed[e] in {0,+1,-1}; 0 = free).
inline std::optional<Orientation> search_beta_orientation(
    const Multigraph& g, const Boundary& beta,
    const std::vector<signed char>& fixed, SearchStats& stats) {
  BetaSearch s(g, beta, fixed, stats);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!s.feasible(v)) return std::nullopt;
  if (!s.assign(0)) return std::nullopt;
  return Orientation{s.dir};
}

}  // namespace detail

/// Backtracking search for an orientation with d+(v)-d-(v) = beta(v) (mod 3)
/// at every vertex. Deterministic; a negative answer is certified by full
/// exhaustion of the pruned search tree.
inline Certificate find_beta_orientation(const Multigraph& g, const Boundary& beta,
                                         const Limits& lim = Limits::from_env()) {
  if (beta.size() != g.vertex_count())
    throw invalid_argument_error("boundary/vertex mismatch");
  if (!beta.sum_is_zero())
    throw invalid_argument_error("boundary values must sum to 0 mod 3");
  if (g.edge_count() > lim.search_edges)
    throw resource_limit_error("orientation search limited to " +
                               std::to_string(lim.search_edges) + " edges");
  Certificate cert;
  std::vector<signed char> fixed(g.edge_count(), 0);
  auto found = detail::search_beta_orientation(g, beta, fixed, cert.stats);
  if (found) {
    cert.kind = CertificateKind::BetaOrientation;
    cert.orientation = std::move(*found);
  }
  return cert;
}

inline Certificate find_mod3_orientation(const Multigraph& g,
                                         const Limits& lim = Limits::from_env()) {
  Certificate cert = find_beta_orientation(g, Boundary::zero(g.vertex_count()), lim);
  if (cert.exists()) cert.kind = CertificateKind::Mod3Orientation;
  return cert;
}

inline bool verify_flow(const Multigraph& g, const FlowAssignment& fa, int k) {
  if (k < 2) throw invalid_argument_error("k must be >= 2");
  if (!fa.orientation.covers(g) ||
      fa.value.size() != static_cast<std::size_t>(g.edge_count()))
    throw invalid_argument_error("flow/edge mismatch");
  for (int f : fa.value)
    if (f < 1 || f > k - 1) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int net = 0;
    for (int e : g.incident_edges(v))
      net += tail(g, fa.orientation, e) == v ? fa.value[e] : -fa.value[e];
    if (net != 0) return false;
  }
  return true;
}

/// Turn a modulo-3 orientation into an exact nowhere-zero 3-flow. Start with
/// f = 1 everywhere; every vertex excess is then a multiple of 3, and a
/// directed path from any excess vertex always reaches a deficit vertex.
/// Flipping each path edge (and swapping its value 1<->2) moves 3 units.
inline FlowAssignment orientation_to_nz3flow(const Multigraph& g,
                                             const Orientation& d) {
  if (!verify_mod3_orientation(g, d))
    throw invalid_argument_error("not a modulo-3 orientation");
  FlowAssignment fa{d, std::vector<int>(g.edge_count(), 1)};
  const int n = g.vertex_count();
  auto excess = [&](int v) {
    int net = 0;
    for (int e : g.incident_edges(v))
      net += tail(g, fa.orientation, e) == v ? fa.value[e] : -fa.value[e];
    return net;
  };
  for (;;) {
    int s = -1;
    for (int v = 0; v < n; ++v)
      if (excess(v) > 0) {
        s = v;
        break;
      }
    if (s < 0) break;
    // BFS along current arc directions from s to a deficit vertex
    std::vector<int> via_edge(n, -1), prev(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{s};
    seen[s] = 1;
    int t = -1;
    for (std::size_t qi = 0; qi < queue.size() && t < 0; ++qi) {
      int v = queue[qi];
      for (int e : g.incident_edges(v)) {
        if (tail(g, fa.orientation, e) != v) continue;
        int w = g.other_end(e, v);
        if (seen[w]) continue;
        seen[w] = 1;
        prev[w] = v;
        via_edge[w] = e;
        if (excess(w) < 0) {
          t = w;
          break;
        }
        queue.push_back(w);
      }
    }
    if (t < 0)
      throw std::logic_error("no augmenting path despite nonzero excess");
    for (int v = t; v != s; v = prev[v]) {
      int e = via_edge[v];
      fa.orientation.dir[e] = static_cast<signed char>(-fa.orientation.dir[e]);
      fa.value[e] = 3 - fa.value[e];
    }
  }
  return fa;
}

/// Brute-force count of nowhere-zero Z_k flows against a fixed reference
/// orientation. The independent oracle for the deletion-contraction count.
inline long long count_nz_zk_flows(const Multigraph& g, int k,
                                   const Limits& lim = Limits::from_env()) {
  if (k < 2) throw invalid_argument_error("k must be >= 2");
  if (g.edge_count() > lim.oracle_edges)
    throw resource_limit_error("flow oracle limited to " +
                               std::to_string(lim.oracle_edges) + " edges");
  std::vector<signed char> none(g.edge_count(), 0);
  std::vector<int> order = detail::constrained_edge_order(g, none);
  std::vector<int> rem(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++rem[e.u];
    ++rem[e.v];
  }
  std::vector<int> sum(g.vertex_count(), 0);  // net flow mod k, reference u->v
  long long total = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      ++total;
      return;
    }
    const Edge& e = g.edge(order[idx]);
    --rem[e.u];
    --rem[e.v];
    for (int f = 1; f < k; ++f) {
      sum[e.u] = (sum[e.u] + f) % k;
      sum[e.v] = (sum[e.v] - f % k + k) % k;
      // a single remaining edge shifts the sum by a nonzero residue, so a
      // vertex at rem == 1 must not already balance
      auto alive = [&](int v) {
        if (rem[v] == 0) return sum[v] == 0;
        if (rem[v] == 1) return sum[v] != 0;
        return true;
      };
      bool ok = alive(e.u) && alive(e.v);
      if (ok) self(self, idx + 1);
      sum[e.u] = (sum[e.u] - f % k + k) % k;
      sum[e.v] = (sum[e.v] + f) % k;
    }
    ++rem[e.u];
    ++rem[e.v];
  };
  rec(rec, 0);
  return total;
}

namespace detail {

// Exact labeled-graph memo key: isolated vertices removed, vertices
// renumbered densely in first-appearance order, edges sorted.
inline std::string flowpoly_key(int n, const std::vector<Edge>& edges) {
  std::vector<int> remap(n, -1);
  int next = 0;
  std::vector<std::pair<int, int>> norm;
  norm.reserve(edges.size());
  for (const Edge& e : edges) {
    if (remap[e.u] < 0) remap[e.u] = next++;
    if (remap[e.v] < 0) remap[e.v] = next++;
    norm.emplace_back(std::min(remap[e.u], remap[e.v]),
                      std::max(remap[e.u], remap[e.v]));
  }
  std::sort(norm.begin(), norm.end());
  std::string key = std::to_string(next) + ";";
  for (auto& [u, v] : norm)
    key += std::to_string(u) + "," + std::to_string(v) + ";";
  return key;
}

inline long long flowpoly_rec(int n, std::vector<Edge> edges, int k,
                              std::map<std::string, long long>& memo) {
  if (edges.empty()) return 1;
  const std::string key = flowpoly_key(n, edges);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Multigraph g(n, edges);
  long long result;
  if (g.has_bridge()) {
    result = 0;
  } else {
    const Edge e = edges[0];
    // deletion
    std::vector<Edge> del(edges.begin() + 1, edges.end());
    long long f_del = flowpoly_rec(n, std::move(del), k, memo);
    // contraction: merge v into u; parallel copies of e would become loops,
    // each contributing a free factor of (k-1)
    long long loop_factor = 1;
    std::vector<Edge> con;
    con.reserve(edges.size());
    for (std::size_t i = 1; i < edges.size(); ++i) {
      int a = edges[i].u == e.v ? e.u : edges[i].u;
      int b = edges[i].v == e.v ? e.u : edges[i].v;
      if (a == b) {
        loop_factor *= k - 1;
        continue;
      }
      con.push_back({a, b});
    }
    long long f_con = loop_factor * flowpoly_rec(n, std::move(con), k, memo);
    result = f_con - f_del;
  }
  memo[key] = result;
  return result;
}

}  // namespace detail

/// Number of nowhere-zero k-flows via the deletion-contraction recursion
/// F(G,k) = F(G/e,k) - F(G\e,k), memoized on the labeled graph.
inline long long flow_polynomial(const Multigraph& g, int k,
                                 const Limits& lim = Limits::from_env()) {
  if (k < 2) throw invalid_argument_error("k must be >= 2");
  if (g.edge_count() > lim.flowpoly_edges)
    throw resource_limit_error("flow polynomial limited to " +
                               std::to_string(lim.flowpoly_edges) + " edges");
  std::map<std::string, long long> memo;
  return detail::flowpoly_rec(g.vertex_count(), g.edges(), k, memo);
}

struct Z3Result {
  bool connected = false;
  std::optional<Boundary> counterexample;  // first unsolvable boundary
  Certificate certificate;                 // kind Z3Table when connected
};

/// Decide Z3-connectivity by sweeping all 3^(n-1) boundaries in
/// lexicographic order (beta on vertices 1..n-1 free, vertex 0 derived).
inline Z3Result z3_connected(const Multigraph& g,
                             const Limits& lim = Limits::from_env()) {
  const int n = g.vertex_count();
  if (n > lim.z3_vertices)
    throw resource_limit_error("Z3-connectivity sweep limited to " +
                               std::to_string(lim.z3_vertices) + " vertices");
  Z3Result result;
  result.certificate.kind = CertificateKind::Z3Table;
  std::vector<std::uint8_t> digits(n > 0 ? n - 1 : 0, 0);
  for (;;) {
    Boundary beta = Boundary::zero(n);
    int s = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      beta.value[i + 1] = digits[i];
      s += digits[i];
    }
    if (n > 0) beta.value[0] = static_cast<std::uint8_t>(mod3(-s));
    Certificate cert = find_beta_orientation(g, beta, lim);
    result.certificate.stats.nodes += cert.stats.nodes;
    if (!cert.exists()) {
      result.connected = false;
      result.counterexample = beta;
      result.certificate.kind = CertificateKind::NonexistenceByExhaustion;
      result.certificate.table.clear();
      return result;
    }
    result.certificate.table.push_back({beta, *cert.orientation});
    // next boundary
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == 2) digits[i++] = 0;
    if (i == digits.size()) break;
    ++digits[i];
  }
  result.connected = true;
  return result;
}

}  // namespace zflow
