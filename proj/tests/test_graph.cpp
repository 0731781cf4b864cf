#include <doctest.h>

#include <random>

#include "flipper/budget.hpp"
#include "flipper/generators.hpp"
#include "flipper/graph.hpp"
#include "flipper/ladder.hpp"
#include "flipper/order.hpp"
#include "verify/oracle.hpp"

using namespace flipper;

namespace {

Graph triangle() {
  std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 2}};
  return Graph::build(3, e);
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(130, {3, 64, 129});
  CHECK(s.count() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK(s.first() == Vertex{3});
  CHECK(s.next_after(64) == Vertex{129});
  CHECK_FALSE(s.next_after(129).has_value());
  CHECK(to_string(s) == "{3,64,129}");

  VertexSet t(130, {3, 7});
  CHECK((s & t) == VertexSet(130, {3}));
  CHECK((s | t).count() == 4);
  CHECK((s - t) == VertexSet(130, {64, 129}));
  CHECK((s ^ t) == VertexSet(130, {7, 64, 129}));
  CHECK(s.intersects(t));
  CHECK(s.intersection_count(t) == 1);
  CHECK(VertexSet(130, {3}).is_subset_of(s));

  // Equality ignores the universe.
  CHECK(VertexSet(10, {1, 2}) == VertexSet(200, {1, 2}));
  CHECK(VertexSet(10, {1, 2}).hash() == VertexSet(200, {1, 2}).hash());

  std::vector<Vertex> seen(s.begin(), s.end());
  CHECK(seen == std::vector<Vertex>{3, 64, 129});
}

TEST_CASE("agree_on compares neighbourhoods inside a mask") {
  VertexSet a(8, {1, 2, 5});
  VertexSet b(8, {1, 5, 7});
  CHECK(VertexSet::agree_on(a, b, VertexSet(8, {1, 5})));
  CHECK_FALSE(VertexSet::agree_on(a, b, VertexSet(8, {2})));
}

TEST_CASE("canonical order on vertex sets puts the empty set first") {
  VertexSet empty(5);
  VertexSet one(5, {0});
  VertexSet two(5, {0, 3});
  VertexSet later(5, {1});
  CHECK(canonical_less(empty, one));
  CHECK(canonical_less(one, two));
  CHECK(canonical_less(two, later));
  CHECK_FALSE(canonical_less(one, one));
}

TEST_CASE("vertex order") {
  VertexOrder id;
  CHECK(id.is_identity());
  CHECK(id.min_of(VertexSet(5, {2, 4})) == Vertex{2});
  VertexOrder o = VertexOrder::from_sequence({3, 1, 0, 2});
  CHECK(o.less(3, 0));
  CHECK(o.min_of(VertexSet(4, {0, 1, 2})) == Vertex{1});
  CHECK(o.sorted(VertexSet(4, {0, 1, 2, 3})) == std::vector<Vertex>{3, 1, 0, 2});
  CHECK_THROWS(VertexOrder::from_sequence({0, 0, 1}));
}

TEST_CASE("graph construction") {
  Graph k3 = triangle();
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.adjacent(0, 2));
  CHECK(Graph::build(1, std::vector<Edge>{}).order() == 1);
  std::vector<Edge> loop = {{0, 0}};
  CHECK_THROWS_AS(Graph::build(2, loop), GraphError);
  std::vector<Edge> dup = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::build(2, dup), GraphError);
  std::vector<Edge> range = {{0, 2}};
  CHECK_THROWS_AS(Graph::build(2, range), GraphError);
}

TEST_CASE("induced subgraphs") {
  Graph k3 = triangle();
  Graph e = k3.induced(VertexSet(3, {0, 1}));
  CHECK(e.order() == 2);
  CHECK(e.edge_count() == 1);
  CHECK(e.adjacent(0, 1));
  CHECK_FALSE(e.is_live(2));
  CHECK(k3.induced(k3.vertices()) == k3);

  Graph p = path_graph(4);
  Graph two = p.induced(VertexSet(4, {0, 2}));
  CHECK(two.order() == 2);
  CHECK(two.edge_count() == 0);
  CHECK_THROWS_AS(two.induced(VertexSet(4, {1})), GraphError);
}

TEST_CASE("balls and distances") {
  Graph p5 = path_graph(5);
  CHECK(ball(p5, 2, 1) == VertexSet(5, {1, 2, 3}));
  CHECK(ball(p5, 4, 0) == VertexSet(5, {4}));
  CHECK(ball(triangle(), 0, 1) == VertexSet(3, {0, 1, 2}));
  CHECK(ball(p5, VertexSet(5, {0, 4}), 1) == VertexSet(5, {0, 1, 3, 4}));
  CHECK(distance(path_graph(3), 0, 2) == 2);
  CHECK(distance(p5, 3, 3) == 0);
  CHECK(distance(Graph::edgeless(2), 0, 1) == kInfinity);
  CHECK(is_distance_independent(p5, VertexSet(5, {0, 3}), 2));
  CHECK_FALSE(is_distance_independent(p5, VertexSet(5, {0, 2}), 2));
}

TEST_CASE("ball charges the step budget") {
  StepBudget budget(2);
  CHECK_THROWS_AS(ball(path_graph(10), 0, 9, &budget), BudgetExceeded);
}

TEST_CASE("toggle_between touches each pair once") {
  Graph g = Graph::edgeless(4);
  VertexSet a(4, {0, 1});
  g.toggle_between(a, a);
  CHECK(g.edge_count() == 1);
  CHECK(g.adjacent(0, 1));
  g.toggle_between(VertexSet(4, {0}), VertexSet(4, {0, 2, 3}));
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(0, 3));
  CHECK(g.edge_count() == 3);
}

TEST_CASE("generators") {
  Graph h = half_graph(2);
  CHECK(h.order() == 4);
  CHECK(h.edge_count() == 1);
  CHECK(h.adjacent(0, 3));

  Graph sc = subdivided_clique(3, 1);
  CHECK(sc.order() == 6);
  CHECK(sc.edge_count() == 6);

  Graph g = grid_graph(2, 2);
  CHECK(g.edge_count() == 4);
  for (Vertex v : g.vertices()) CHECK(g.degree(v) == 2);

  CHECK(cycle_graph(7).edge_count() == 7);
  CHECK(clique_graph(5).edge_count() == 10);

  Graph t = random_tree(40, 3);
  CHECK(t.edge_count() == 39);
  for (Vertex v : t.vertices()) CHECK(distance(t, 0, v) != kInfinity);
  CHECK(random_tree(40, 3) == t);

  Graph b = bounded_degree_random(60, 3, 9);
  for (Vertex v : b.vertices()) CHECK(b.degree(v) <= 3);

  for (const std::string& f : sized_families()) CHECK(generate_family(f, 30, 1).order() >= 25);
  CHECK_THROWS(generate_family("moebius", 10, 1));
}

TEST_CASE("uniform_below stays in range and is seeded") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    std::uint64_t x = uniform_below(a, 7);
    CHECK(x < 7);
    CHECK(x == uniform_below(b, 7));
  }
}

TEST_CASE("ladders") {
  CHECK(has_ladder(half_graph(3), 3));
  CHECK(has_ladder(Graph::edgeless(2), 1));
  CHECK_FALSE(has_ladder(Graph::edgeless(1), 1));
  CHECK_FALSE(has_ladder(triangle(), 2));
  CHECK_FALSE(has_ladder(half_graph(3), 4));
}

TEST_CASE("ladder search agrees with brute force") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 2 + uniform_below(rng, 7);
    Graph g = random_graph(n, 20 + unsigned(uniform_below(rng, 60)), rng());
    auto m = oracle::MatrixGraph::from(g);
    for (std::size_t k = 1; k <= 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(has_ladder(g, k) == oracle::has_ladder(m, k));
    }
  }
}

TEST_CASE("isomorphism class enumeration matches known counts") {
  const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(oracle::graphs_up_to_isomorphism(n).size() == expected[n - 1]);
}
