#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zflow/errors.hpp"
#include "zflow/limits.hpp"
#include "zflow/multigraph.hpp"

namespace zflow {

struct Cut {
  std::vector<int> edges;  // sorted edge ids
  VertexSet witness;       // lexicographically smallest side producing it
};

struct CutCensus {
  int max_size = 0;
  std::vector<Cut> cuts;
  std::map<int, int> counts_by_size;
  int edge_connectivity = 0;

  int count(int size) const {
    auto it = counts_by_size.find(size);
    return it == counts_by_size.end() ? 0 : it->second;
  }
};

/// Global minimum cut by Stoer-Wagner with parallel edges as weights.
/// Returns 0 for a disconnected graph, deliberately independent of the
/// brute-force census so the two can cross-validate.
inline int edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw invalid_argument_error("empty graph");
  if (n == 1) return g.edge_count() == 0 ? 0 : 0;  // single vertex: no cut
  if (!g.connected()) return 0;
  std::vector<std::vector<long long>> w(n, std::vector<long long>(n, 0));
  for (const Edge& e : g.edges()) {
    w[e.u][e.v] += 1;
    w[e.v][e.u] += 1;
  }
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  long long best = -1;
  while (active.size() > 1) {
    // maximum adjacency ordering
    std::vector<int> order;
    std::vector<long long> conn(active.size(), 0);
    std::vector<char> used(active.size(), 0);
    for (std::size_t step = 0; step < active.size(); ++step) {
      int pick = -1;
      for (std::size_t i = 0; i < active.size(); ++i)
        if (!used[i] && (pick < 0 || conn[i] > conn[pick])) pick = static_cast<int>(i);
      used[pick] = 1;
      order.push_back(pick);
      for (std::size_t i = 0; i < active.size(); ++i)
        if (!used[i]) conn[i] += w[active[pick]][active[i]];
    }
    int last = order.back();
    int prev = order[order.size() - 2];
    long long cut_of_phase = conn[last];
    if (best < 0 || cut_of_phase < best) best = cut_of_phase;
    // merge last into prev
    int a = active[prev], b = active[last];
    for (int v : active) {
      if (v == a || v == b) continue;
      w[a][v] += w[b][v];
      w[v][a] += w[v][b];
    }
    active.erase(active.begin() + last);
  }
  return static_cast<int>(best);
}

/// Exhaustive small-cut enumeration over all 2^(n-1) bipartitions, one
/// representative per complementary pair, de-duplicated by edge-id set.
inline CutCensus enumerate_cuts(const Multigraph& g, int max_size,
                                const Limits& lim = Limits::from_env()) {
  const int n = g.vertex_count();
  if (n > lim.census_vertices)
    throw resource_limit_error("census limited to " +
                               std::to_string(lim.census_vertices) +
                               " vertices (got " + std::to_string(n) + ")");
  if (!g.connected())
    throw invalid_argument_error("edge connectivity 0, census undefined");

  CutCensus census;
  census.max_size = max_size;
  int min_cut = g.edge_count() + 1;
  std::map<std::vector<int>, VertexSet> dedup;
  // subsets containing vertex 0, excluding the full set
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t rest = 0; rest < half; ++rest) {
    VertexSet x{(rest << 1) | 1u};
    if (x == VertexSet::full(n)) continue;
    int size = 0;
    for (const Edge& e : g.edges())
      if (x.contains(e.u) != x.contains(e.v)) ++size;
    min_cut = std::min(min_cut, size);
    if (size > max_size) continue;
    std::vector<int> ids;
    for (int id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      if (x.contains(e.u) != x.contains(e.v)) ids.push_back(id);
    }
    VertexSet canon = x;
    VertexSet comp = x.complement(n);
    if (comp.lex_less(canon)) canon = comp;
    auto [it, inserted] = dedup.try_emplace(std::move(ids), canon);
    if (!inserted && canon.lex_less(it->second)) it->second = canon;
  }
  for (auto& [ids, witness] : dedup) {
    census.counts_by_size[static_cast<int>(ids.size())] += 1;
    census.cuts.push_back({ids, witness});
  }
  census.edge_connectivity = n == 1 ? 0 : min_cut;
  return census;
}

struct DegreeClasses {
  std::vector<int> degree3;  // candidates for two parallel augmentation arcs
  std::vector<int> degree5;  // candidates for one augmentation arc
};

inline DegreeClasses degree_classes(const Multigraph& g) {
  DegreeClasses c;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3) c.degree3.push_back(v);
    if (g.degree(v) == 5) c.degree5.push_back(v);
  }
  return c;
}

enum class TheoremId { T1_12, T1_13, T1_14, T1_17 };

inline std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_12: return "1.12";
    case TheoremId::T1_13: return "1.13";
    case TheoremId::T1_14: return "1.14";
    case TheoremId::T1_17: return "1.17";
  }
  return "?";
}

inline TheoremId theorem_from_string(const std::string& s) {
  if (s == "1.12") return TheoremId::T1_12;
  if (s == "1.13") return TheoremId::T1_13;
  if (s == "1.14") return TheoremId::T1_14;
  if (s == "1.17") return TheoremId::T1_17;
  throw invalid_argument_error("unknown theorem id: " + s);
}

struct HypothesisClause {
  std::string name;
  bool holds;
};

struct HypothesisReport {
  TheoremId theorem;
  std::vector<HypothesisClause> clauses;
  int three_cuts = 0;  // |P|
  int five_cuts = 0;   // |Q| (and |S| for the Z3 statement)
  int edge_connectivity = 0;

  bool all_hold() const {
    for (const auto& c : clauses)
      if (!c.holds) return false;
    return true;
  }
};

/// Evaluate one theorem's hypothesis clauses on g.
inline HypothesisReport hypothesis_check(const Multigraph& g, TheoremId id,
                                         const Limits& lim = Limits::from_env()) {
  CutCensus census = enumerate_cuts(g, 5, lim);
  HypothesisReport rep;
  rep.theorem = id;
  rep.three_cuts = census.count(3);
  rep.five_cuts = census.count(5);
  rep.edge_connectivity = census.edge_connectivity;
  const int lambda = census.edge_connectivity;
  switch (id) {
    case TheoremId::T1_12:
      rep.clauses.push_back({"bridgeless", lambda >= 2});
      rep.clauses.push_back(
          {"2|P|+|Q| <= 7", 2 * rep.three_cuts + rep.five_cuts <= 7});
      break;
    case TheoremId::T1_13:
      rep.clauses.push_back({"4-edge-connected", lambda >= 4});
      rep.clauses.push_back({"at most seven 5-edge-cuts", rep.five_cuts <= 7});
      break;
    case TheoremId::T1_14:
      rep.clauses.push_back({"bridgeless", lambda >= 2});
      rep.clauses.push_back({"no 5-edge-cuts", rep.five_cuts == 0});
      rep.clauses.push_back({"at most three 3-edge-cuts", rep.three_cuts <= 3});
      break;
    case TheoremId::T1_17:
      rep.clauses.push_back({"5-edge-connected", lambda >= 5});
      rep.clauses.push_back({"at most five 5-edge-cuts", rep.five_cuts <= 5});
      break;
  }
  return rep;
}

}  // namespace zflow
