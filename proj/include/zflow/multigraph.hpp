#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "zflow/errors.hpp"

namespace zflow {

/// One undirected edge. Endpoints are unordered; u/v is storage order only.
struct Edge {
  int u;
  int v;
};

/// Subset of vertex indices 0..n-1 as a bitmask. Usable for graphs with at
/// most 64 vertices, which covers every exhaustive sweep in this library.
struct VertexSet {
  std::uint64_t bits = 0;

  static VertexSet single(int v) { return {std::uint64_t{1} << v}; }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }
  static VertexSet full(int n) {
    return {n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  void add(int v) { bits |= std::uint64_t{1} << v; }
  bool contains(int v) const { return (bits >> v) & 1u; }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  VertexSet complement(int n) const { return {full(n).bits & ~bits}; }

  std::vector<int> vertices() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  bool operator==(const VertexSet&) const = default;
  // Order by sorted vertex sequence; used to pick canonical cut witnesses.
  bool lex_less(const VertexSet& o) const {
    auto a = vertices();
    auto b = o.vertices();
    return a < b;
  }
};

/// Loopless multigraph with dense vertex indices and stable edge ids.
/// Immutable after construction; contraction and deletion return new values.
class Multigraph {
 public:
  Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw invalid_argument_error("negative vertex count");
    incidence_.resize(n_);
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw invalid_argument_error("edge endpoint out of range");
      if (e.u == e.v) throw invalid_argument_error("loop edge not allowed");
      incidence_[e.u].push_back(static_cast<int>(id));
      incidence_[e.v].push_back(static_cast<int>(id));
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& incident_edges(int v) const { return incidence_[v]; }
  int degree(int v) const { return static_cast<int>(incidence_[v].size()); }

  int other_end(int edge_id, int v) const {
    const Edge& e = edges_[edge_id];
    return e.u == v ? e.v : e.u;
  }

  bool connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int id : incidence_[v]) {
        int w = other_end(id, v);
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  bool has_bridge() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

inline void check_cut_side(const Multigraph& g, const VertexSet& x) {
  if (g.vertex_count() > 64)
    throw invalid_argument_error("vertex-set operations require n <= 64");
  if (x.empty()) throw invalid_argument_error("vertex set must be nonempty");
  if (x == VertexSet::full(g.vertex_count()))
    throw invalid_argument_error("vertex set must be a proper subset");
}

/// Edge ids of the cut associated with x: edges with exactly one end in x.
inline std::vector<int> boundary_edges(const Multigraph& g, const VertexSet& x) {
  check_cut_side(g, x);
  std::vector<int> out;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (x.contains(e.u) != x.contains(e.v)) out.push_back(id);
  }
  return out;
}

/// d(A): number of edges (with multiplicity) leaving A.
inline int degree_of_set(const Multigraph& g, const VertexSet& a) {
  if (a.empty()) throw invalid_argument_error("vertex set must be nonempty");
  if (a == VertexSet::full(g.vertex_count())) return 0;
  int count = 0;
  for (const Edge& e : g.edges())
    if (a.contains(e.u) != a.contains(e.v)) ++count;
  return count;
}

struct ContractionResult {
  Multigraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex
  std::vector<int> edge_map;    // old edge id -> new edge id, -1 if dropped
};

/// G/X: merge X into a single vertex; edges inside X vanish (no loops).
/// Vertices are renumbered densely; the merged vertex takes the position of
/// the smallest member of X so named vertices can be tracked across steps.
inline ContractionResult contract(const Multigraph& g, const VertexSet& x) {
  if (g.vertex_count() > 64)
    throw invalid_argument_error("contract requires n <= 64");
  if (x.empty()) throw invalid_argument_error("vertex set must be nonempty");
  const int n = g.vertex_count();
  std::vector<int> vmap(n, -1);
  int next = 0;
  int merged = -1;
  for (int v = 0; v < n; ++v) {
    if (x.contains(v)) {
      if (merged < 0) merged = next++;
      vmap[v] = merged;
    } else {
      vmap[v] = next++;
    }
  }
  std::vector<Edge> edges;
  std::vector<int> emap(g.edge_count(), -1);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (x.contains(e.u) && x.contains(e.v)) continue;
    emap[id] = static_cast<int>(edges.size());
    edges.push_back({vmap[e.u], vmap[e.v]});
  }
  return {Multigraph(next, std::move(edges)), std::move(vmap), std::move(emap)};
}

struct DeletionResult {
  Multigraph graph;
  std::vector<int> edge_map;  // old edge id -> new edge id, -1 for the deleted
};

/// Same vertex set, edge removed; surviving ids stay dense via the map.
inline DeletionResult delete_edge(const Multigraph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw invalid_argument_error("invalid edge id");
  std::vector<Edge> edges;
  std::vector<int> emap(g.edge_count(), -1);
  for (int id = 0; id < g.edge_count(); ++id) {
    if (id == edge_id) continue;
    emap[id] = static_cast<int>(edges.size());
    edges.push_back(g.edge(id));
  }
  return {Multigraph(g.vertex_count(), std::move(edges)), std::move(emap)};
}

inline bool Multigraph::has_bridge() const {
  // Tarjan lowlink over the multigraph; parallel edges are never bridges.
  const int n = n_;
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool found = false;
  // iterative DFS: (vertex, incoming edge id, next incidence index)
  struct Frame {
    int v, in_edge, idx;
  };
  for (int root = 0; root < n && !found; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty() && !found) {
      Frame& f = stack.back();
      if (f.idx < static_cast<int>(incidence_[f.v].size())) {
        int id = incidence_[f.v][f.idx++];
        if (id == f.in_edge) continue;
        int w = other_end(id, f.v);
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, id, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, in_edge = f.in_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] > disc[p]) {
            // only a bridge if the connecting edge is unique
            int mult = 0;
            const Edge& e = edges_[in_edge];
            for (int id : incidence_[e.u])
              if (other_end(id, e.u) == e.v) ++mult;
            if (mult == 1) found = true;
          }
        }
      }
    }
  }
  return found;
}

/// Canonical text form: "n m" header, then one "u v" line per edge in id
/// order with the smaller endpoint first.
inline std::string serialize(const Multigraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    out << std::min(e.u, e.v) << ' ' << std::max(e.u, e.v) << '\n';
  return out.str();
}

inline Multigraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line[0] == '#') continue;
      return true;
    }
    ++lineno;
    return false;
  };
  if (!next_line()) throw parse_error(lineno, "missing header");
  std::istringstream header(line);
  long long n = 0, m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra) || n < 0 || m < 0)
    throw parse_error(lineno, "malformed header, expected \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) throw parse_error(lineno, "unexpected end of input");
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v) || (row >> extra))
      throw parse_error(lineno, "malformed edge line, expected \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw parse_error(lineno, "vertex index out of range");
    if (u == v) throw parse_error(lineno, "loop edge not allowed");
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

inline Multigraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

}  // namespace zflow
