#pragma once

#include <vector>

#include "zflow/multigraph.hpp"

namespace zflow {

inline Multigraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Multigraph(n, std::move(edges));
}

inline Multigraph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Multigraph(n, std::move(edges));
}

inline Multigraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Multigraph(n, std::move(edges));
}

/// Two vertices joined by m parallel edges (a "dipole").
inline Multigraph dipole(int m) {
  std::vector<Edge> edges(m, Edge{0, 1});
  return Multigraph(2, std::move(edges));
}

inline Multigraph petersen_graph() {
  std::vector<Edge> edges;
  for (int v = 0; v < 5; ++v) {
    edges.push_back({v, (v + 1) % 5});       // outer cycle
    edges.push_back({v, v + 5});             // spokes
    edges.push_back({v + 5, (v + 2) % 5 + 5});  // inner pentagram
  }
  return Multigraph(10, std::move(edges));
}

/// K4 with every vertex blown up into a triangle (the truncated
/// tetrahedron). 3-regular and contractible to K4.
inline Multigraph k4_triangle_blowup() {
  std::vector<Edge> edges;
  for (int t = 0; t < 4; ++t) {
    int base = 3 * t;
    edges.push_back({base, base + 1});
    edges.push_back({base + 1, base + 2});
    edges.push_back({base, base + 2});
  }
  // one edge per K4 edge, using a distinct port vertex of each triangle
  int port[4][4] = {};
  int next[4] = {0, 0, 0, 0};
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      port[u][v] = next[u]++;
      port[v][u] = next[v]++;
    }
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v)
      edges.push_back({3 * u + port[u][v], 3 * v + port[v][u]});
  return Multigraph(12, std::move(edges));
}

}  // namespace zflow
