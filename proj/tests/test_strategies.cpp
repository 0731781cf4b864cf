#include <doctest.h>

#include "flipper/generators.hpp"
#include "flipper/strategies.hpp"

using namespace flipper;

namespace {

// Returns the queued answers in order, then empty sets.
class Queue : public FlipperStrategy {
 public:
  explicit Queue(std::vector<FlipSet> answers) : answers_(std::move(answers)) {}
  void init(const Graph&) override { at_ = 0; }
  FlipSet next(const Graph&, const ConnectorMove&) override { return at_ < answers_.size() ? answers_[at_++] : FlipSet{}; }

 private:
  std::vector<FlipSet> answers_;
  std::size_t at_ = 0;
};

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::build(leaves + 1, e);
}

GameConfig config(Variant v, std::size_t r) {
  GameConfig cfg;
  cfg.variant = v;
  cfg.radius = r;
  return cfg;
}

PredictConfig star_cfg(std::size_t game_radius) {
  PredictConfig pc;
  pc.radius = 2 * game_radius;
  return pc;
}

}  // namespace

TEST_CASE("greedy connector takes the largest ball") {
  Graph s = star(4);
  Game game(s, config(Variant::flipper, 1));
  GreedySurvivorConnector greedy;
  CHECK(greedy.next(game, game.initial()).center == 0);
  Game flat(Graph::edgeless(3), config(Variant::flipper, 1));
  CHECK(greedy.next(flat, flat.initial()).center == 0);
}

TEST_CASE("farthest connector moves away from earlier centres") {
  Graph p = path_graph(9);
  Game game(p, config(Variant::flipper, 1));
  FarthestConnector far;
  far.init(game);
  Position pos = game.initial();
  Vertex first = far.next(game, pos).center;
  CHECK(first == 0);
}

TEST_CASE("random connector is reproducible") {
  Graph g = random_tree(50, 2);
  Game game(g, config(Variant::flipper, 1));
  RandomConnector a(11), b(11);
  Position pos = game.initial();
  for (int i = 0; i < 10; ++i) CHECK(a.next(game, pos).center == b.next(game, pos).center);
}

TEST_CASE("ball moves carry the full ball in the induced variant") {
  Graph p = path_graph(7);
  Game game(p, config(Variant::induced_subgraph, 2));
  ConnectorMove m = ball_move(game, game.initial(), 3);
  REQUIRE(m.subset.has_value());
  CHECK(*m.subset == VertexSet(7, {1, 2, 3, 4, 5}));
  Game plain(p, config(Variant::flipper, 2));
  CHECK_FALSE(ball_move(plain, plain.initial(), 3).subset.has_value());
}

TEST_CASE("unknown connector names are rejected") {
  CHECK_THROWS(make_connector("sneaky", 1));
  CHECK(make_connector("greedy_survivor", 1) != nullptr);
}

TEST_CASE("single-flip adapter spreads an answer over rounds") {
  AtomicFlip f1(VertexSet(6, {0}), VertexSet(6, {1}));
  AtomicFlip f2(VertexSet(6, {2}), VertexSet(6, {3}));
  AtomicFlip f3(VertexSet(6, {4}), VertexSet(6, {5}));
  FlipSet three{f1, f2, f3};
  SingleFlipAdapter adapter(std::make_unique<Queue>(std::vector<FlipSet>{three}), 0);
  Graph g = Graph::edgeless(6);
  adapter.init(g);
  ConnectorMove move{0, std::nullopt};
  std::vector<AtomicFlip> emitted;
  for (int i = 0; i < 3; ++i) {
    FlipSet one = adapter.next(g, move);
    REQUIRE(one.size() == 1);
    emitted.push_back(*one.begin());
  }
  CHECK(emitted == std::vector<AtomicFlip>(three.begin(), three.end()));
  CHECK(adapter.inner_calls() == 1);
  CHECK(adapter.widest_answer() == 3);
  FlipSet noop = adapter.next(g, move);
  REQUIRE(noop.size() == 1);
  CHECK(noop.begin()->is_noop());
  CHECK(adapter.inner_calls() == 2);
}

TEST_CASE("single-flip adapter pads to a fixed period") {
  SingleFlipAdapter adapter(std::make_unique<Queue>(std::vector<FlipSet>{}), 4);
  Graph g = Graph::edgeless(3);
  adapter.init(g);
  for (int i = 0; i < 8; ++i) adapter.next(g, {0, std::nullopt});
  CHECK(adapter.inner_calls() == 2);
}

TEST_CASE("flip star beats the greedy connector on a path") {
  Game game(path_graph(50), [] {
    GameConfig cfg = config(Variant::flipper, 2);
    cfg.schedule = MoveSchedule::growing(256);
    return cfg;
  }());
  FlipStar star(star_cfg(2));
  GreedySurvivorConnector greedy;
  Transcript t = run_game(game, star, greedy);
  CHECK(t.outcome.kind == OutcomeKind::flipper_wins);
  CHECK(t.outcome.round <= 20);
}

TEST_CASE("flip star isolates its tracked vertices and returns to induced subgraphs") {
  Graph g = random_tree(60, 8);
  GameConfig cfg = config(Variant::flipper, 1);
  cfg.schedule = MoveSchedule::growing(256);
  Game game(g, cfg);
  FlipStar star(star_cfg(1));
  RandomConnector con(4);
  std::size_t pairs = 0;
  Transcript t = run_game(game, star, con, [&](const RoundRecord&, const Position& pos) {
    const auto& info = star.last_move();
    if (info.second_half) {
      ++pairs;
      CHECK(pos.arena == g.induced(pos.arena.vertices()));
    }
    if (info.isolation && !info.second_half) {
      for (Vertex x : star.tracked())
        if (pos.arena.is_live(x)) CHECK(pos.arena.degree(x) == 0);
    }
  });
  CHECK(t.outcome.kind == OutcomeKind::flipper_wins);
  CHECK(pairs > 0);
}

TEST_CASE("flip star is never asked on a single vertex") {
  Game game(Graph::edgeless(1), config(Variant::flipper, 1));
  FlipStar star(star_cfg(1));
  RandomConnector con(1);
  Transcript t = run_game(game, star, con);
  CHECK(t.rounds.empty());
  CHECK(star.tracked().empty());
}

TEST_CASE("separator classes in the first round") {
  Graph g = random_graph(9, 40, 6);
  SeparatorAsPseudoFlipper pf(std::make_unique<ScriptedSeparator>(std::vector<VertexSet>{VertexSet(9, {4})}));
  pf.init(g);
  Partition p = pf.next(4, g.vertices());
  std::vector<VertexSet> parts = {VertexSet(9, {4}), g.neighbors(4), g.vertices() - g.neighbors(4) - VertexSet(9, {4})};
  std::erase_if(parts, [](const VertexSet& s) { return s.empty(); });
  CHECK(p == Partition(parts));
  CHECK(pf.picks() == VertexSet(9, {4}));
}

TEST_CASE("simulating a one-part pseudo-flipper takes two moves per round") {
  Graph g = Graph::edgeless(2);
  PseudoFlipperAsFlipper sim(
      std::make_unique<SeparatorAsPseudoFlipper>(std::make_unique<ScriptedSeparator>(std::vector<VertexSet>{})), 1);
  sim.init(g);
  FlipSet first = sim.next(g, {0, std::nullopt});
  CHECK(first == FlipSet{AtomicFlip(g.vertices(), g.vertices())});
  CHECK_FALSE(sim.round_finished());
  FlipSet second = sim.next(g, {0, std::nullopt});
  CHECK(second == first);
  CHECK(sim.round_finished());
  CHECK(sim.simulated_rounds() == 1);
  CHECK(sim.region() == VertexSet(2, {0}));
}

TEST_CASE("scripted flipper replays its moves") {
  FlipSet f{AtomicFlip(VertexSet(3, {0}), VertexSet(3, {1}))};
  ScriptedFlipper s({f, {}}, {7, 9});
  Graph g = Graph::edgeless(3);
  s.init(g);
  CHECK(s.next(g, {0, std::nullopt}) == f);
  CHECK(s.last_steps() == 7);
  CHECK(s.next(g, {0, std::nullopt}).empty());
  CHECK(s.last_steps() == 9);
}
