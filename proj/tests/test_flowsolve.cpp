#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"
#include "zflow/flowsolve.hpp"
#include "zflow/named_graphs.hpp"

using namespace zflow;

TEST_CASE("verify_mod3_orientation") {
  Multigraph d3 = dipole(3);
  Orientation all_forward{{1, 1, 1}};
  CHECK(verify_mod3_orientation(d3, all_forward));

  Multigraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  Orientation cycle{{1, 1, 1}};
  CHECK(verify_mod3_orientation(triangle, cycle));

  // K4 admits none; spot-check a few orientations and the solver's verdict
  Multigraph k4 = complete_graph(4);
  CHECK_FALSE(verify_mod3_orientation(k4, Orientation{{1, 1, 1, 1, 1, 1}}));
  CHECK_FALSE(verify_mod3_orientation(k4, Orientation{{1, -1, 1, -1, 1, -1}}));
  CHECK_THROWS_AS(verify_mod3_orientation(k4, Orientation{{1, 1}}),
                  invalid_argument_error);
}

TEST_CASE("find_beta_orientation") {
  Multigraph d2 = dipole(2);
  Boundary beta{{1, 2}};
  Certificate cert = find_beta_orientation(d2, beta);
  REQUIRE(cert.exists());
  CHECK(verify_beta_orientation(d2, *cert.orientation, beta));

  CHECK_FALSE(find_beta_orientation(complete_graph(4), Boundary::zero(4)).exists());

  // dipole with m >= 2 always balances with zero boundary
  for (int m = 2; m <= 7; ++m) {
    Certificate c = find_beta_orientation(dipole(m), Boundary::zero(2));
    REQUIRE(c.exists());
    CHECK(verify_mod3_orientation(dipole(m), *c.orientation));
  }

  CHECK_THROWS_AS(find_beta_orientation(d2, Boundary{{1, 1}}),
                  invalid_argument_error);
  Limits tight;
  tight.search_edges = 3;
  CHECK_THROWS_AS(find_beta_orientation(complete_graph(4), Boundary::zero(4), tight),
                  resource_limit_error);
}

TEST_CASE("find_mod3_orientation") {
  Certificate k5 = find_mod3_orientation(complete_graph(5));
  REQUIRE(k5.exists());
  CHECK(verify_mod3_orientation(complete_graph(5), *k5.orientation));

  Certificate pet = find_mod3_orientation(petersen_graph());
  CHECK_FALSE(pet.exists());
  CHECK(pet.stats.nodes > 0);

  CHECK(find_mod3_orientation(Multigraph(1, {})).exists());
}

TEST_CASE("orientation_to_nz3flow") {
  Multigraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  FlowAssignment fa = orientation_to_nz3flow(triangle, Orientation{{1, 1, 1}});
  CHECK(fa.value == std::vector<int>{1, 1, 1});
  CHECK(verify_flow(triangle, fa, 3));

  Multigraph d3 = dipole(3);
  FlowAssignment fb = orientation_to_nz3flow(d3, Orientation{{1, 1, 1}});
  CHECK(verify_flow(d3, fb, 3));
  int twos = 0;
  for (int f : fb.value)
    if (f == 2) ++twos;
  CHECK(twos == 1);  // one unit reversed to value 2 restores exact balance

  CHECK_THROWS_AS(orientation_to_nz3flow(complete_graph(4),
                                         Orientation{{1, 1, 1, 1, 1, 1}}),
                  invalid_argument_error);
}

TEST_CASE("conversion is sound and fragile to corruption") {
  std::mt19937_64 rng(31);
  int converted = 0;
  while (converted < 25) {
    Multigraph g = testing::random_connected_multigraph(rng, 7, 14);
    Certificate cert = find_mod3_orientation(g);
    if (!cert.exists()) continue;
    ++converted;
    FlowAssignment fa = orientation_to_nz3flow(g, *cert.orientation);
    CHECK(verify_flow(g, fa, 3));
    FlowAssignment bad = fa;
    std::uniform_int_distribution<int> pick(0, g.edge_count() - 1);
    int e = pick(rng);
    bad.value[e] = 3 - bad.value[e];
    CHECK_FALSE(verify_flow(g, bad, 3));
  }
}

TEST_CASE("flow count oracle") {
  for (int n : {3, 4, 5, 6}) CHECK(count_nz_zk_flows(cycle_graph(n), 3) == 2);
  CHECK(count_nz_zk_flows(complete_graph(4), 3) == 0);
  CHECK(count_nz_zk_flows(dipole(1), 2) == 0);
  CHECK(count_nz_zk_flows(dipole(1), 5) == 0);
  CHECK_THROWS_AS(count_nz_zk_flows(complete_graph(7), 3),
                  resource_limit_error);
}

TEST_CASE("flow polynomial base values") {
  CHECK(flow_polynomial(cycle_graph(5), 3) == 2);
  CHECK(flow_polynomial(complete_graph(4), 3) == 0);
  CHECK(flow_polynomial(dipole(3), 3) == 2);
  CHECK(flow_polynomial(Multigraph(3, {}), 3) == 1);
  CHECK(flow_polynomial(path_graph(4), 3) == 0);  // bridges kill every flow
  CHECK(flow_polynomial(petersen_graph(), 4) == 0);  // snark: no 4-flow either
}

TEST_CASE("deletion-contraction equals brute force") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 40; ++i) {
    Multigraph g = testing::random_connected_multigraph(rng, 6, 12);
    for (int k : {2, 3, 4})
      CHECK(flow_polynomial(g, k) == count_nz_zk_flows(g, k));
  }
}

TEST_CASE("orientation existence matches positive flow count") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 60; ++i) {
    Multigraph g = testing::random_connected_multigraph(rng, 7, 14);
    CHECK(find_mod3_orientation(g).exists() == (count_nz_zk_flows(g, 3) > 0));
  }
}

TEST_CASE("tau magnitude table") {
  CHECK(tau_magnitude(0, 4) == 0);
  CHECK(tau_magnitude(1, 5) == 1);
  CHECK(tau_magnitude(2, 7) == 1);
  for (int beta = 0; beta < 3; ++beta)
    for (int d = 0; d <= 12; ++d) {
      int t = tau_magnitude(beta, d);
      CHECK(t <= 3);
      CHECK((d - t) % 2 == 0);
      CHECK((mod3(t) == beta || mod3(-t) == beta));
    }
}

TEST_CASE("reversal symmetry of beta orientations") {
  std::mt19937_64 rng(43);
  int found = 0;
  while (found < 20) {
    Multigraph g = testing::random_connected_multigraph(rng, 6, 10);
    Boundary beta = Boundary::zero(g.vertex_count());
    std::uniform_int_distribution<int> bd(0, 2);
    int s = 0;
    for (int v = 1; v < g.vertex_count(); ++v) {
      beta.value[v] = static_cast<std::uint8_t>(bd(rng));
      s += beta.value[v];
    }
    beta.value[0] = static_cast<std::uint8_t>(mod3(-s));
    Certificate cert = find_beta_orientation(g, beta);
    if (!cert.exists()) continue;
    ++found;
    CHECK(verify_beta_orientation(g, cert.orientation->reversed(),
                                  beta.negated()));
  }
}

TEST_CASE("z3_connected") {
  Z3Result k4 = z3_connected(complete_graph(4));
  CHECK_FALSE(k4.connected);
  REQUIRE(k4.counterexample.has_value());
  CHECK(*k4.counterexample == Boundary::zero(4));

  Z3Result d2 = z3_connected(dipole(2));
  CHECK(d2.connected);
  CHECK(d2.certificate.table.size() == 3);
  for (const auto& entry : d2.certificate.table)
    CHECK(verify_beta_orientation(dipole(2), entry.orientation, entry.boundary));

  Z3Result k6 = z3_connected(complete_graph(6));
  CHECK(k6.connected);
  CHECK(k6.certificate.table.size() == 243);

  // connectivity implies a plain modulo-3 orientation (beta = 0 in the table)
  CHECK(find_mod3_orientation(complete_graph(6)).exists());

  Limits tight;
  tight.z3_vertices = 4;
  CHECK_THROWS_AS(z3_connected(complete_graph(6), tight), resource_limit_error);
}
