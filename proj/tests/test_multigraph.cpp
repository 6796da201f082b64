#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zflow/multigraph.hpp"
#include "zflow/named_graphs.hpp"

using namespace zflow;

TEST_CASE("boundary_edges on fixed graphs") {
  Multigraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  auto cut = boundary_edges(triangle, VertexSet::single(0));
  CHECK(cut == std::vector<int>{0, 2});

  Multigraph k4 = complete_graph(4);
  for (int v = 0; v < 4; ++v)
    CHECK(boundary_edges(k4, VertexSet::single(v)).size() == 3);

  // two consecutive vertices of a 5-cycle
  Multigraph c5 = cycle_graph(5);
  CHECK(boundary_edges(c5, VertexSet::of({1, 2})).size() == 2);
}

TEST_CASE("boundary_edges rejects empty and full sets") {
  Multigraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(boundary_edges(triangle, VertexSet{}), invalid_argument_error);
  CHECK_THROWS_AS(boundary_edges(triangle, VertexSet::full(3)),
                  invalid_argument_error);
}

TEST_CASE("boundary is symmetric under complement") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Multigraph g = testing::random_connected_multigraph(rng, 8, 16);
    VertexSet x = testing::random_nonempty_proper_subset(rng, g.vertex_count());
    CHECK(boundary_edges(g, x) ==
          boundary_edges(g, x.complement(g.vertex_count())));
  }
}

TEST_CASE("degree_of_set examples") {
  CHECK(degree_of_set(dipole(5), VertexSet::single(0)) == 5);
  Multigraph k7 = complete_graph(7);
  CHECK(degree_of_set(k7, VertexSet::of({0, 1, 2})) == 12);
  Multigraph k4 = complete_graph(4);
  CHECK(degree_of_set(k4, VertexSet::of({1, 3})) == 4);
}

TEST_CASE("degree_of_set matches boundary_edges and vertex degrees") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    Multigraph g = testing::random_connected_multigraph(rng, 8, 18);
    VertexSet a = testing::random_nonempty_proper_subset(rng, g.vertex_count());
    CHECK(degree_of_set(g, a) ==
          static_cast<int>(boundary_edges(g, a).size()));
    int degree_sum = 0;
    for (int v : a.vertices()) degree_sum += g.degree(v);
    CHECK(degree_of_set(g, a) <= degree_sum);
  }
  for (int v = 0; v < 4; ++v)
    CHECK(degree_of_set(complete_graph(4), VertexSet::single(v)) == 3);
}

TEST_CASE("contract merges a set into one vertex") {
  Multigraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  auto res = contract(triangle, VertexSet::of({0, 1}));
  CHECK(res.graph.vertex_count() == 2);
  CHECK(res.graph.edge_count() == 2);  // internal edge vanished
  CHECK(res.edge_map[0] == -1);
  CHECK(res.vertex_map[0] == res.vertex_map[1]);

  // singleton contraction keeps the edge multiset
  Multigraph k4 = complete_graph(4);
  auto same = contract(k4, VertexSet::single(2));
  CHECK(same.graph.vertex_count() == 4);
  CHECK(same.graph.edge_count() == 6);

  auto pair = contract(k4, VertexSet::of({0, 1}));
  CHECK(pair.graph.vertex_count() == 3);
  CHECK(pair.graph.edge_count() == 5);
  int merged = pair.vertex_map[0];
  CHECK(pair.graph.degree(merged) == 4);
}

TEST_CASE("contract preserves outside-set degrees and handshake") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    Multigraph g = testing::random_connected_multigraph(rng, 8, 16);
    const int n = g.vertex_count();
    VertexSet x = testing::random_nonempty_proper_subset(rng, n);
    auto res = contract(g, x);
    int handshake = 0;
    for (int v = 0; v < res.graph.vertex_count(); ++v)
      handshake += res.graph.degree(v);
    CHECK(handshake == 2 * res.graph.edge_count());
    // any vertex outside x keeps its degree of the set {v}
    for (int v = 0; v < n; ++v) {
      if (x.contains(v)) continue;
      CHECK(res.graph.degree(res.vertex_map[v]) == g.degree(v));
      break;
    }
  }
}

TEST_CASE("delete_edge") {
  Multigraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  auto res = delete_edge(triangle, 1);
  CHECK(res.graph.edge_count() == 2);
  CHECK(res.graph.vertex_count() == 3);
  CHECK(res.edge_map[1] == -1);
  CHECK(res.edge_map[0] == 0);

  auto two = delete_edge(dipole(2), 0);
  CHECK(two.graph.edge_count() == 1);
  CHECK(two.graph.has_bridge());

  Multigraph k4 = complete_graph(4);
  auto del = delete_edge(k4, 0);
  int deg2 = 0;
  for (int v = 0; v < 4; ++v)
    if (del.graph.degree(v) == 2) ++deg2;
  CHECK(deg2 == 2);

  CHECK_THROWS_AS(delete_edge(k4, 6), invalid_argument_error);
}

TEST_CASE("parse and serialize") {
  Multigraph g = parse_graph("2 3\n0 1\n0 1\n0 1\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);

  // round-trip law on canonical form
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    Multigraph h = testing::random_connected_multigraph(rng, 9, 20);
    std::string text = serialize(h);
    CHECK(serialize(parse_graph(text)) == text);
  }

  // comments and stdin-style content
  Multigraph c = parse_graph("# a triangle\n3 3\n0 1\n1 2\n# middle\n0 2\n");
  CHECK(c.edge_count() == 3);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_graph("3 1\n0 0\n");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_graph("nonsense\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("3 1\n0 7\n"), parse_error);
  CHECK_THROWS_AS(parse_graph("3 2\n0 1\n"), parse_error);
}

TEST_CASE("loopless invariant enforced at construction") {
  CHECK_THROWS_AS(Multigraph(3, {{1, 1}}), invalid_argument_error);
  CHECK_THROWS_AS(Multigraph(2, {{0, 5}}), invalid_argument_error);
}
