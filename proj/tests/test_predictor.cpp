#include <doctest.h>

#include <cstdlib>
#include <random>

#include "flipper/generators.hpp"
#include "flipper/predictor.hpp"
#include "verify/instances.hpp"
#include "verify/suites.hpp"

using namespace flipper;

namespace {

PredictConfig at_radius(std::size_t r) {
  PredictConfig cfg;
  cfg.radius = r;
  return cfg;
}

// Two anchors 0 and 1 joined by an edge, each alone in its part.
TraceCells two_cells(const VertexSet& central) {
  std::vector<Edge> e = {{0, 1}};
  Graph g = Graph::build(2, e);
  RaisedPartition p;
  p.parts = {VertexSet(2, {0}), VertexSet(2, {1})};
  p.anchors = {0, 1};
  return trace_cells(g, p, central, VertexOrder());
}

}  // namespace

TEST_CASE("trivial predictions") {
  Graph g = random_graph(12, 40, 5);
  VertexSet five(12, {0, 2, 4, 6, 8});
  CHECK(predict(g, at_radius(0), five).empty());
  CHECK(predict(g, at_radius(2), VertexSet(12, {0, 1, 2})).empty());
  CHECK(predict(Graph::edgeless(8), at_radius(2), VertexSet(8, {1, 2, 3, 4, 5})).empty());
  CHECK_THROWS(predict(g.induced(VertexSet(12, {0, 1, 2, 3, 4, 5})), at_radius(1), five));
}

TEST_CASE("trace cells group a part by its trace on the anchors") {
  std::vector<Edge> e = {{0, 2}, {0, 3}};
  Graph g = Graph::build(5, e);
  RaisedPartition p;
  p.parts = {VertexSet(5, {0}), VertexSet(5, {1, 2, 3, 4})};
  p.anchors = {0, 1};
  TraceCells t = trace_cells(g, p, VertexSet(5), VertexOrder());
  REQUIRE(t.cells.size() == 3);
  CHECK(t.cells[0].members == VertexSet(5, {0}));
  CHECK(t.cells[1].members == VertexSet(5, {1, 4}));
  CHECK(t.cells[1].trace.empty());
  CHECK(t.cells[2].members == VertexSet(5, {2, 3}));
  CHECK(t.cells[2].trace == VertexSet(5, {0}));
  CHECK_THROWS(trace_cells(g, p, VertexSet(5, {2}), VertexOrder()));

  std::vector<Edge> none;
  RaisedPartition whole;
  whole.parts = {VertexSet::full(4)};
  whole.anchors = {2};
  TraceCells single = trace_cells(Graph::build(4, none), whole, VertexSet(4), VertexOrder());
  REQUIRE(single.cells.size() == 1);
  CHECK(single.cells[0].members == VertexSet::full(4));
}

TEST_CASE("odd and even constructions") {
  TraceCells none = two_cells(VertexSet(2));
  CHECK(flips_odd_case(none).empty());
  CHECK(flips_even_case(none).empty());

  TraceCells both = two_cells(VertexSet(2, {0, 1}));
  FlipSet expected{AtomicFlip(VertexSet(2, {0}), VertexSet(2, {1}))};
  CHECK(flips_odd_case(both) == expected);
  CHECK(flips_even_case(both) == expected);

  // Only anchor 0 is central: the even case still flips, the odd case needs both.
  TraceCells one = two_cells(VertexSet(2, {0}));
  CHECK(flips_odd_case(one).empty());
  CHECK(flips_even_case(one) == expected);
  CHECK(flips_for_radius(one, 3).empty());
  CHECK(flips_for_radius(one, 4) == expected);
}

TEST_CASE("prediction is deterministic and keeps the five smallest") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    auto inst = verify::spaced_instance(1 + uniform_below(rng, 4), rng(), 18, 6);
    if (!inst) continue;
    VertexSet z(inst->graph.universe(), inst->centers);
    PredictConfig cfg = at_radius(inst->radius);
    PredictTrace a = predict_traced(inst->graph, cfg, z);
    PredictTrace b = predict_traced(inst->graph, cfg, z);
    CHECK(a.flips == b.flips);
    CHECK(a.steps == b.steps);
    std::vector<Vertex> smallest(inst->centers);
    std::sort(smallest.begin(), smallest.end());
    smallest.resize(5);
    CHECK(predict(inst->graph, cfg, VertexSet(inst->graph.universe(), smallest)) == a.flips);
  }
}

TEST_CASE("prediction respects the flip-count bound") {
  std::mt19937_64 rng(12);
  std::size_t checked = 0;
  for (int i = 0; i < 40; ++i) {
    std::size_t r = 1 + uniform_below(rng, 5);
    auto inst = verify::spaced_instance(r, rng(), 20);
    if (!inst) continue;
    PredictTrace t = predict_traced(inst->graph, at_radius(r), VertexSet(inst->graph.universe(), inst->centers));
    std::size_t bound = 0;
    for (std::size_t q : t.cells_per_level) bound += std::max<std::size_t>(4, q * q);
    CHECK(t.flips.size() <= bound);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("an exhausted step budget yields the empty set") {
  auto inst = verify::spaced_instance(3, 4, 18);
  REQUIRE(inst.has_value());
  PredictConfig cfg = at_radius(3);
  VertexSet z(inst->graph.universe(), inst->centers);
  REQUIRE_FALSE(predict(inst->graph, cfg, z).empty());
  cfg.step_budget_factor = 0;
  PredictTrace t = predict_traced(inst->graph, cfg, z);
  CHECK(t.guard_tripped);
  CHECK(t.flips.empty());
  cfg = at_radius(3);
  cfg.max_flips = 0;
  t = predict_traced(inst->graph, cfg, z);
  CHECK(t.guard_tripped);
  CHECK(t.flips.empty());
}

TEST_CASE("step budget factor from the environment") {
  ::setenv("FLIPPER_STEP_BUDGET", "7", 1);
  CHECK(step_budget_factor_from_env() == 7);
  ::setenv("FLIPPER_STEP_BUDGET", "junk", 1);
  CHECK(step_budget_factor_from_env(64) == 64);
  ::unsetenv("FLIPPER_STEP_BUDGET");
  CHECK(step_budget_factor_from_env() == 64);
}

TEST_CASE("reference construction base cases") {
  Graph g = random_graph(10, 30, 2);
  VertexSet x(10, {0, 3, 5, 7, 9});
  auto r0 = reference_flips(g, at_radius(0), x);
  REQUIRE(r0.has_value());
  CHECK(r0->y == x);
  CHECK(r0->flips.empty());

  // Centres already far apart: nothing to flip.
  Graph e = Graph::edgeless(8);
  auto far = reference_flips(e, at_radius(3), VertexSet(8, {0, 1, 2, 3, 4, 5}));
  REQUIRE(far.has_value());
  CHECK(far->flips.empty());
  CHECK(far->y.count() == 5);
  CHECK(far->y.is_subset_of(VertexSet(8, {0, 1, 2, 3, 4, 5})));
}

TEST_CASE("construction and predictability suites") {
  verify::SuiteOptions opt;
  opt.count = 8;
  opt.seed = 21;
  auto c = verify::construction_suite(opt);
  CHECK_MESSAGE(c.ok(), (c.messages.empty() ? "" : c.messages.front()));
  auto p = verify::predictability_suite(opt);
  CHECK(p.cases == 8);
  CHECK_MESSAGE(p.ok(), (p.messages.empty() ? "" : p.messages.front()));
}
