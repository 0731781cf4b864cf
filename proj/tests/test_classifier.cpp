#include <doctest.h>

#include "flipper/classifier.hpp"
#include "flipper/generators.hpp"
#include "verify/instances.hpp"
#include "verify/suites.hpp"

using namespace flipper;

namespace {

Classifier trivial(std::size_t n, Vertex v0) {
  Classifier c;
  c.reps = VertexSet(n, {v0});
  c.exc.assign(n, std::nullopt);
  c.rep.assign(n, v0);
  return c;
}

std::vector<VertexSet> singletons(std::size_t n, std::initializer_list<Vertex> vs) {
  std::vector<VertexSet> out;
  for (Vertex v : vs) out.push_back(VertexSet(n, {v}));
  return out;
}

}  // namespace

TEST_CASE("the trivial classifier is valid") {
  Graph g = path_graph(6);
  Classifier c = trivial(6, 0);
  CHECK_FALSE(validate_classifier(g, c).has_value());
  RaisedPartition p = raised_partition(g, c);
  CHECK(p.parts.size() == 1);
  CHECK(p.parts[0] == g.vertices());
  CHECK(p.anchors == std::vector<Vertex>{0});
  Classifier same = canonize(g, c, VertexOrder());
  CHECK(same.reps == c.reps);
  CHECK(same.blobs.empty());
}

TEST_CASE("a representative inside a blob violates (a)") {
  Graph g = Graph::edgeless(6);
  Classifier c = trivial(6, 0);
  c.blobs = singletons(6, {0});
  c.exc[0] = 0;
  auto bad = validate_classifier(g, c);
  REQUIRE(bad.has_value());
  CHECK(bad->condition == 'a');
}

TEST_CASE("a representative that disagrees in two blobs violates (e)") {
  // Blobs {1},...,{5}. Vertex 6 sees blobs 1 and 2, its representative 0 sees nothing.
  std::vector<Edge> e = {{6, 1}, {6, 2}, {7, 8}, {9, 10}};
  Graph g = Graph::build(12, e);
  Classifier c = trivial(12, 0);
  c.blobs = singletons(12, {1, 2, 3, 4, 5});
  for (std::size_t b = 0; b < 5; ++b) c.exc[b + 1] = b;
  Graph clean = Graph::build(12, std::vector<Edge>{{7, 8}, {9, 10}});
  CHECK_FALSE(validate_classifier(clean, c).has_value());
  auto bad = validate_classifier(g, c);
  REQUIRE(bad.has_value());
  CHECK(bad->condition == 'e');
  CHECK(bad->vertex == 6);

  // One exceptional blob is allowed, two are not.
  c.exc[6] = 0;
  bad = validate_classifier(g, c);
  REQUIRE(bad.has_value());
  CHECK(bad->condition == 'e');
  g = Graph::build(12, std::vector<Edge>{{6, 1}, {7, 8}});
  CHECK_FALSE(validate_classifier(g, c).has_value());
}

TEST_CASE("representatives split by blob adjacency violate (b)") {
  std::vector<Edge> e = {{0, 1}};
  Graph g = Graph::build(7, e);
  Classifier c = trivial(7, 0);
  c.blobs = singletons(7, {1, 2});
  c.exc[1] = 0;
  c.exc[2] = 1;
  auto bad = validate_classifier(g, c);
  REQUIRE(bad.has_value());
  CHECK(bad->condition == 'b');
}

TEST_CASE("five blobs recover the partition greedily") {
  // u=0, v=1 see all five singleton blobs 3..7; w=2 sees none.
  std::vector<Edge> e;
  for (Vertex b = 3; b <= 7; ++b) {
    e.push_back({0, b});
    e.push_back({1, b});
  }
  Graph g = Graph::build(8, e);
  auto blobs = singletons(8, {3, 4, 5, 6, 7});
  RaisedPartition p = partition_from_five(g, blobs, VertexOrder());
  REQUIRE(p.parts.size() == 2);
  CHECK(p.parts[0] == VertexSet(8, {0, 1}));
  CHECK(p.parts[1] == VertexSet(8, {2, 3, 4, 5, 6, 7}));
  CHECK(p.anchors == std::vector<Vertex>{0, 2});

  Graph empty = Graph::edgeless(8);
  RaisedPartition q = partition_from_five(empty, blobs, VertexOrder());
  CHECK(q.parts.size() == 1);
  CHECK(q.parts[0] == empty.vertices());
}

TEST_CASE("partition_from_five rejects bad input") {
  Graph g = Graph::edgeless(8);
  CHECK_THROWS(partition_from_five(g, singletons(8, {1, 2, 3, 4}), VertexOrder()));
  std::vector<VertexSet> overlap = singletons(8, {1, 2, 3, 4});
  overlap.push_back(VertexSet(8, {1, 5}));
  CHECK_THROWS(partition_from_five(g, overlap, VertexOrder()));
}

TEST_CASE("search finds the universal vertex as a representative") {
  std::vector<Edge> e;
  for (Vertex b = 1; b <= 5; ++b) e.push_back({0, b});
  Graph g = Graph::build(6, e);
  auto found = search_classifier(g, singletons(6, {1, 2, 3, 4, 5}), VertexOrder());
  REQUIRE(found.has_value());
  CHECK_FALSE(validate_classifier(g, *found).has_value());
  CHECK(found->reps.contains(0));
}

TEST_CASE("search with no balls returns the trivial classifier") {
  Graph g = path_graph(5);
  auto found = search_classifier(g, {}, VertexOrder());
  REQUIRE(found.has_value());
  CHECK(found->size() == 0);
  CHECK(found->reps == VertexSet(5, {0}));
}

TEST_CASE("search gives up when traces are too varied") {
  // Every non-blob vertex has its own trace on the five blobs.
  std::size_t n = 5 + 32;
  std::vector<Edge> e;
  for (Vertex t = 0; t < 32; ++t)
    for (Vertex b = 0; b < 5; ++b)
      if ((t >> b) & 1U) e.push_back({Vertex(5 + t), b});
  Graph g = Graph::build(n, e);
  ClassifierSearchLimits limits;
  limits.max_order = 1;
  limits.min_size = 5;
  limits.max_vertices = 40;
  CHECK_FALSE(search_classifier(g, singletons(n, {0, 1, 2, 3, 4}), VertexOrder(), limits).has_value());
}

TEST_CASE("reselecting the same representatives keeps the classifier") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto planted = verify::planted_classifier(seed);
    const Classifier& c = planted.classifier;
    Classifier again = reselect_representatives(planted.graph, c, c.reps);
    CHECK_FALSE(validate_classifier(planted.graph, again).has_value());
    CHECK(again.reps == c.reps);
    CHECK(raised_partition(planted.graph, again).as_partition() == raised_partition(planted.graph, c).as_partition());
  }
}

TEST_CASE("canonized classifiers anchor each part at its least member") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto planted = verify::planted_classifier(seed);
    VertexOrder order;
    Classifier c = canonize(planted.graph, planted.classifier, order);
    CHECK_FALSE(validate_classifier(planted.graph, c).has_value());
    RaisedPartition p = raised_partition(planted.graph, c);
    for (std::size_t i = 0; i < p.parts.size(); ++i) CHECK(order.min_of(p.parts[i]) == p.anchors[i]);
    Classifier twice = canonize(planted.graph, c, order);
    CHECK(twice.reps == c.reps);
    CHECK(twice.blobs == c.blobs);
  }
}

TEST_CASE("classifier suite") {
  verify::SuiteOptions opt;
  opt.count = 15;
  auto r = verify::classifier_suite(opt);
  CHECK(r.cases == 15);
  CHECK_MESSAGE(r.ok(), (r.messages.empty() ? "" : r.messages.front()));
}
