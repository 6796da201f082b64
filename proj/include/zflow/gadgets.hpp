#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zflow/cutcensus.hpp"
#include "zflow/errors.hpp"
#include "zflow/flowsolve.hpp"
#include "zflow/limits.hpp"
#include "zflow/multigraph.hpp"

namespace zflow {

// A solver contradicted a condition check that claimed success was
// guaranteed. Never expected; doubles as a falsification probe of the checks.
struct internal_inconsistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

struct GlueResult {
  Multigraph graph;
  std::vector<int> vertex_map;  // original vertex -> vertex in glued graph
};

/// Attach a fresh K7 to every vertex (sharing exactly that vertex). Raises
/// every original degree by 6; the result has 7n vertices and m + 21n edges.
inline GlueResult glue_k7(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges = g.edges();
  int next = n;
  for (int v = 0; v < n; ++v) {
    int block[7];
    block[0] = v;
    for (int i = 1; i < 7; ++i) block[i] = next++;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) edges.push_back({block[i], block[j]});
  }
  std::vector<int> vmap(n);
  for (int v = 0; v < n; ++v) vmap[v] = v;
  return {Multigraph(next, std::move(edges)), std::move(vmap)};
}

enum class AugmentationCase {
  SmallSum,          // 2|P'|+|Q'| <= 5: every added arc leaves z0
  BigSumViaDeg3,     // sum 6 or 7, a degree-3 vertex's pair reversed
  BigSumViaDeg5,     // sum 6 or 7, no degree-3 vertices, two arcs reversed
  DegreeFiveArcs,    // one arc z0 -> each degree-5 vertex
};

/// A base graph together with its z0-augmented companion: the added vertex,
/// the added pre-oriented arcs, and the boundary the extension must realize.
struct Augmentation {
  Multigraph base;
  Multigraph augmented;
  int z0;
  std::vector<int> added_edges;   // ids in augmented, all incident to z0
  std::vector<signed char> pre;   // per augmented edge: +-1 on added, 0 free
  Boundary beta;                  // boundary on the augmented graph
  Boundary base_beta;             // boundary the recovered orientation realizes
  AugmentationCase tag;
};

/// Augmentation targeting a modulo-3 orientation of g: two parallel arcs per
/// degree-3 vertex, one arc per degree-5 vertex, boundary offsets chosen so
/// removing the arcs afterwards cancels exactly.
inline Augmentation z0_augment_3flow(const Multigraph& g) {
  const DegreeClasses cls = degree_classes(g);
  const int t = 2 * static_cast<int>(cls.degree3.size()) +
                static_cast<int>(cls.degree5.size());
  if (t > 7)
    throw invalid_argument_error(
        "augmentation requires 2|deg3|+|deg5| <= 7, got " + std::to_string(t));
  const int n = g.vertex_count();
  const int z0 = n;
  std::vector<Edge> edges = g.edges();
  std::vector<int> added;
  std::vector<int> arc_target;  // parallel to added
  for (int p : cls.degree3)
    for (int rep = 0; rep < 2; ++rep) {
      added.push_back(static_cast<int>(edges.size()));
      arc_target.push_back(p);
      edges.push_back({z0, p});
    }
  for (int q : cls.degree5) {
    added.push_back(static_cast<int>(edges.size()));
    arc_target.push_back(q);
    edges.push_back({z0, q});
  }

  Augmentation aug{g,
                   Multigraph(n + 1, std::move(edges)),
                   z0,
                   added,
                   std::vector<signed char>(g.edge_count() + added.size(), 0),
                   Boundary::zero(n + 1),
                   Boundary::zero(n),
                   AugmentationCase::SmallSum};
  auto set_arc = [&](std::size_t i, bool from_z0) {
    aug.pre[added[i]] = from_z0 ? 1 : -1;  // edges stored (z0, v)
  };

  if (t <= 5) {
    aug.tag = AugmentationCase::SmallSum;
    for (std::size_t i = 0; i < added.size(); ++i) set_arc(i, true);
    for (int p : cls.degree3) aug.beta.value[p] = 1;
    for (int q : cls.degree5) aug.beta.value[q] = 2;
    aug.beta.value[z0] = static_cast<std::uint8_t>(mod3(t));
  } else if (!cls.degree3.empty()) {
    aug.tag = AugmentationCase::BigSumViaDeg3;
    const int chosen = cls.degree3.front();
    for (std::size_t i = 0; i < added.size(); ++i)
      set_arc(i, arc_target[i] != chosen);
    for (int p : cls.degree3)
      aug.beta.value[p] = static_cast<std::uint8_t>(p == chosen ? 2 : 1);
    for (int q : cls.degree5) aug.beta.value[q] = 2;
    aug.beta.value[z0] = static_cast<std::uint8_t>(mod3(t - 4));
  } else {
    aug.tag = AugmentationCase::BigSumViaDeg5;
    // two distinct degree-5 vertices send their arc into z0
    for (std::size_t i = 0; i < added.size(); ++i) set_arc(i, i >= 2);
    for (std::size_t i = 0; i < cls.degree5.size(); ++i)
      aug.beta.value[cls.degree5[i]] = static_cast<std::uint8_t>(i < 2 ? 1 : 2);
    aug.beta.value[z0] = static_cast<std::uint8_t>(mod3(t - 4));
  }
  return aug;
}

/// Augmentation carrying an arbitrary Z3-boundary of a 5-edge-connected
/// graph: one arc z0 -> v per degree-5 vertex, boundary lowered by 1 there.
inline Augmentation z0_augment_z3(const Multigraph& g, const Boundary& beta) {
  if (beta.size() != g.vertex_count())
    throw invalid_argument_error("boundary/vertex mismatch");
  if (!beta.sum_is_zero())
    throw invalid_argument_error("boundary values must sum to 0 mod 3");
  if (edge_connectivity(g) < 5)
    throw invalid_argument_error("augmentation requires a 5-edge-connected graph");
  const DegreeClasses cls = degree_classes(g);
  const int n = g.vertex_count();
  const int z0 = n;
  std::vector<Edge> edges = g.edges();
  std::vector<int> added;
  for (int s : cls.degree5) {
    added.push_back(static_cast<int>(edges.size()));
    edges.push_back({z0, s});
  }
  Augmentation aug{g,
                   Multigraph(n + 1, std::move(edges)),
                   z0,
                   added,
                   std::vector<signed char>(g.edge_count() + added.size(), 0),
                   Boundary::zero(n + 1),
                   beta,
                   AugmentationCase::DegreeFiveArcs};
  for (int id : added) aug.pre[id] = 1;  // all arcs leave z0
  for (int v = 0; v < n; ++v) aug.beta.value[v] = beta.value[v];
  for (int s : cls.degree5)
    aug.beta.value[s] = static_cast<std::uint8_t>(mod3(beta.at(s) - 1));
  aug.beta.value[z0] =
      static_cast<std::uint8_t>(mod3(static_cast<int>(cls.degree5.size())));
  return aug;
}

/// Verdicts for the three extension-lemma conditions at (g, beta, z0, pre).
struct LtwzReport {
  bool min_vertices = false;  // (i)  |V| >= 3
  bool z0_degree = false;     // (ii) d(z0) <= 4+|tau(z0)|
  bool z0_balance = false;    // (ii) pre-orientation balance matches beta(z0)
  bool subsets = false;       // (iii) d(A) >= 4+|tau(A)| for all eligible A
  std::optional<VertexSet> violation;  // first A breaking (iii)

  bool all_ok() const {
    return min_vertices && z0_degree && z0_balance && subsets;
  }
};

/// Check the extension-lemma conditions. Condition (iii) sweeps every
/// nonempty A avoiding z0 with at least two vertices outside A.
inline LtwzReport ltwz_check(const Multigraph& g, const Boundary& beta, int z0,
                             const std::vector<signed char>& pre,
                             const Limits& lim = Limits::from_env()) {
  const int n = g.vertex_count();
  if (z0 < 0 || z0 >= n) throw invalid_argument_error("z0 out of range");
  if (pre.size() != static_cast<std::size_t>(g.edge_count()))
    throw invalid_argument_error("pre-orientation/edge mismatch");
  for (int e = 0; e < g.edge_count(); ++e) {
    const bool at_z0 = g.edge(e).u == z0 || g.edge(e).v == z0;
    if (at_z0 != (pre[e] != 0))
      throw invalid_argument_error(
          "pre-orientation must cover exactly the edges at z0");
  }
  if (n > lim.ltwz_vertices)
    throw resource_limit_error("extension-condition sweep limited to " +
                               std::to_string(lim.ltwz_vertices) + " vertices");

  LtwzReport rep;
  rep.min_vertices = n >= 3;
  const int dz = g.degree(z0);
  rep.z0_degree = dz <= 4 + tau_magnitude(beta.at(z0), dz);
  int bal = 0;
  for (int e : g.incident_edges(z0)) {
    const int from = pre[e] > 0 ? g.edge(e).u : g.edge(e).v;
    bal += from == z0 ? 1 : -1;
  }
  rep.z0_balance = mod3(bal - beta.at(z0)) == 0;

  rep.subsets = true;
  // enumerate subsets of V \ {z0}; skip the one covering all other vertices
  std::vector<int> others;
  for (int v = 0; v < n; ++v)
    if (v != z0) others.push_back(v);
  const std::uint64_t count = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 1; mask + 1 < count; ++mask) {
    VertexSet a;
    for (std::size_t i = 0; i < others.size(); ++i)
      if ((mask >> i) & 1u) a.add(others[i]);
    const int d = degree_of_set(g, a);
    if (d < 4 + tau_magnitude(beta.of_set(a), d)) {
      rep.subsets = false;
      rep.violation = a;
      break;
    }
  }
  return rep;
}

/// Extend a pre-orientation of z0's edges to a full beta-orientation. The
/// conditions checked by ltwz_check are sufficient, not necessary: when they
/// hold, exhaustion means the checker or the search engine is broken and is
/// reported as an internal inconsistency; when they fail, the search still
/// runs and exhaustion is an ordinary negative certificate.
inline Certificate extend_orientation(const Multigraph& g, const Boundary& beta,
                                      int z0, const std::vector<signed char>& pre,
                                      const Limits& lim = Limits::from_env()) {
  LtwzReport rep = ltwz_check(g, beta, z0, pre, lim);
  if (g.edge_count() > lim.search_edges)
    throw resource_limit_error("orientation search limited to " +
                               std::to_string(lim.search_edges) + " edges");
  Certificate cert;
  auto found = detail::search_beta_orientation(g, beta, pre, cert.stats);
  if (!found) {
    if (rep.all_ok())
      throw internal_inconsistency_error(
          "conditions hold but no extension found; condition checker or "
          "search engine is wrong");
    cert.kind = CertificateKind::NonexistenceByExhaustion;
    return cert;
  }
  cert.kind = CertificateKind::BetaOrientation;
  cert.orientation = std::move(*found);
  return cert;
}

/// Drop z0 and its arcs from a full orientation of the augmented graph,
/// returning the induced orientation of the base graph. The augmentation's
/// boundary offsets make the result a base_beta-orientation; anything else
/// means the augmentation rules are wrong.
inline Orientation recover_orientation(const Augmentation& aug,
                                       const Orientation& full) {
  if (!full.covers(aug.augmented))
    throw invalid_argument_error("orientation does not cover augmented graph");
  for (int id : aug.added_edges)
    if (full.dir[id] != aug.pre[id])
      throw invalid_argument_error("orientation does not extend the pre-orientation");
  Orientation base;
  base.dir.assign(full.dir.begin(), full.dir.begin() + aug.base.edge_count());
  if (!verify_beta_orientation(aug.base, base, aug.base_beta))
    throw internal_inconsistency_error(
        "recovered orientation does not realize the base boundary");
  return base;
}

}  // namespace zflow
