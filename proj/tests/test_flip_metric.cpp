#include <doctest.h>

#include <random>

#include "flipper/flip_metric.hpp"
#include "flipper/generators.hpp"
#include "verify/oracle.hpp"

using namespace flipper;

namespace {

Graph single_edge() {
  std::vector<Edge> e = {{0, 1}};
  return Graph::build(2, e);
}

}  // namespace

TEST_CASE("overlapping sets are never separated") {
  Graph g = path_graph(4);
  Partition p = Partition::single(g.vertices());
  CHECK_FALSE(is_r_separated(g, p, 1, VertexSet(4, {0, 1}), VertexSet(4, {1, 3})).separated);
}

TEST_CASE("distinct vertices are always 1-separated") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(8, 50, rng());
    Partition p({VertexSet(8, {0, 1, 2, 3}), VertexSet(8, {4, 5, 6, 7})});
    Vertex u = Vertex(uniform_below(rng, 8));
    Vertex v = Vertex((u + 1 + uniform_below(rng, 7)) % 8);
    CHECK(is_r_separated(g, p, 1, VertexSet(8, {u}), VertexSet(8, {v})).separated);
  }
}

TEST_CASE("an edge is 2-separated by complementing") {
  Graph g = single_edge();
  Partition p = Partition::single(g.vertices());
  Separation s = is_r_separated(g, p, 2, VertexSet(2, {0}), VertexSet(2, {1}));
  CHECK(s.separated);
  REQUIRE(s.witness.has_value());
  CHECK(*s.witness == FlipSet{AtomicFlip(g.vertices(), g.vertices())});
  CHECK(flip_distance(g, p, 0, 1) == kInfinity);
}

TEST_CASE("the witness is the first separating mask") {
  Graph g = path_graph(3);
  Partition p({VertexSet(3, {0}), VertexSet(3, {1, 2})});
  Separation s = is_r_separated(g, p, 1, VertexSet(3, {0}), VertexSet(3, {1}));
  REQUIRE(s.separated);
  // Pair order is (0,0), (0,1), (1,1); only flipping (0,1) removes the edge 0-1.
  CHECK(*s.witness == FlipSet{AtomicFlip(p[0], p[1])});
}

TEST_CASE("flip balls") {
  Graph g = Graph::edgeless(3);
  std::vector<VertexSet> singles = {VertexSet(3, {0}), VertexSet(3, {1}), VertexSet(3, {2})};
  Partition p(singles);
  CHECK(flip_ball(g, p, 5, 1) == VertexSet(3, {1}));
  Graph q = path_graph(6);
  Partition one = Partition::single(q.vertices());
  CHECK(flip_ball(q, one, 0, 3) == VertexSet(6, {3}));
  CHECK(flip_ball(q, one, 1, 3) == VertexSet(6, {3}));
}

TEST_CASE("flip distances agree with explicit enumeration") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 25; ++i) {
    std::size_t n = 3 + uniform_below(rng, 5);
    Graph g = random_graph(n, 45, rng());
    std::vector<VertexSet> parts(1 + uniform_below(rng, 3), VertexSet(n));
    for (Vertex v = 0; v < n; ++v) parts[v < parts.size() ? v : uniform_below(rng, parts.size())].insert(v);
    Partition p(parts);
    auto mine = flip_distance_matrix(g, p);
    auto theirs = oracle::flip_distances(oracle::MatrixGraph::from(g), oracle::parts_of(p));
    CHECK(mine == theirs);
  }
}

TEST_CASE("dead ids have no distance") {
  Graph g = path_graph(4).induced(VertexSet(4, {0, 1, 2}));
  Partition p = Partition::single(g.vertices());
  CHECK(flip_distance(g, p, 0, 3) == kInfinity);
  CHECK(flip_ball(g, p, 2, 3).empty());
}
