#pragma once

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <random>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flipper/game.hpp"
#include "flipper/predictor.hpp"

namespace flipper {

// ---- connectors ----

// Uniform centre among the arena (or region) vertices.
class RandomConnector : public ConnectorStrategy {
 public:
  explicit RandomConnector(std::uint64_t seed) : seed_(seed), rng_(seed) {}
  void init(const Game&) override { rng_.seed(seed_); }
  ConnectorMove next(const Game& game, const Position& pos) override;

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

// Centre whose move keeps the most vertices; ties go to the smaller id.
class GreedySurvivorConnector : public ConnectorStrategy {
 public:
  ConnectorMove next(const Game& game, const Position& pos) override;
};

// Centre farthest from every earlier centre still present; ties go to the smaller id.
class FarthestConnector : public ConnectorStrategy {
 public:
  void init(const Game&) override { played_.clear(); }
  ConnectorMove next(const Game& game, const Position& pos) override;

 private:
  std::vector<Vertex> played_;
};

// Replays a fixed list of moves and throws once it runs out.
class ScriptedConnector : public ConnectorStrategy {
 public:
  explicit ScriptedConnector(std::vector<ConnectorMove> moves) : moves_(std::move(moves)) {}
  void init(const Game&) override { at_ = 0; }
  ConnectorMove next(const Game& game, const Position& pos) override;

 private:
  std::vector<ConnectorMove> moves_;
  std::size_t at_ = 0;
};

// Builds a full-ball move around center for the game's variant.
ConnectorMove ball_move(const Game& game, const Position& pos, Vertex center);

// random, greedy_survivor, farthest_from_played. Throws on other names.
std::unique_ptr<ConnectorStrategy> make_connector(std::string_view kind, std::uint64_t seed);

// ---- flipper strategies ----

// Predicts on every five-element subset of the tracked set, then isolates the
// tracked set. Each flip set is played twice in a row so that the arena
// returns to an induced subgraph of the input. Era i ends by tracking the least
// arena vertex not yet tracked.
class FlipStar : public FlipperStrategy {
 public:
  struct MoveInfo {
    std::size_t era = 0;
    bool isolation = false;
    bool second_half = false;
  };

  // cfg.radius is the prediction radius, twice the game radius.
  explicit FlipStar(PredictConfig cfg) : cfg_(std::move(cfg)) {}

  void init(const Graph& g) override;
  FlipSet next(const Graph& local, const ConnectorMove& move) override;
  std::size_t last_steps() const override { return last_steps_; }

  const MoveInfo& last_move() const noexcept { return last_; }
  const std::vector<Vertex>& tracked() const noexcept { return tracked_; }
  // Move pairs played in each finished era.
  const std::vector<std::size_t>& pairs_per_era() const noexcept { return pairs_per_era_; }

 private:
  void start_era();
  bool advance_subset();

  PredictConfig cfg_;
  Graph g_;
  std::vector<Vertex> tracked_;
  VertexSet tracked_set_;
  std::vector<Vertex> era_members_;
  std::vector<std::size_t> subset_;
  bool subset_ready_ = false;
  bool second_half_ = false;
  bool pending_isolation_ = false;
  FlipSet pending_;
  std::size_t era_ = 1;
  std::size_t pairs_in_era_ = 0;
  std::vector<std::size_t> pairs_per_era_;
  std::unordered_map<VertexSet, PredictTrace, VertexSetHash> cache_;
  MoveInfo last_;
  std::size_t last_steps_ = 0;
};

// Plays the inner strategy one atomic flip per round. The inner strategy is
// asked only when the queue runs dry; its answer is padded with no-op flips to
// pad_to entries (0 disables padding; an empty answer still yields one no-op).
class SingleFlipAdapter : public FlipperStrategy {
 public:
  SingleFlipAdapter(std::unique_ptr<FlipperStrategy> inner, std::size_t pad_to)
      : inner_(std::move(inner)), pad_to_(pad_to) {}

  void init(const Graph& g) override;
  FlipSet next(const Graph& local, const ConnectorMove& move) override;
  std::size_t last_steps() const override { return last_steps_; }

  FlipperStrategy& inner() noexcept { return *inner_; }
  std::size_t inner_calls() const noexcept { return inner_calls_; }
  // Largest answer the inner strategy gave, before padding.
  std::size_t widest_answer() const noexcept { return widest_; }

 private:
  std::unique_ptr<FlipperStrategy> inner_;
  std::size_t pad_to_;
  std::deque<AtomicFlip> queue_;
  std::size_t inner_calls_ = 0;
  std::size_t widest_ = 0;
  std::size_t last_steps_ = 0;
};

// Pseudo-flipper whose partition is always the classes of the separator's
// picks so far.
class SeparatorAsPseudoFlipper : public PseudoFlipperStrategy {
 public:
  explicit SeparatorAsPseudoFlipper(std::unique_ptr<SeparatorStrategy> separator) : separator_(std::move(separator)) {}

  void init(const Graph& g) override;
  Partition next(Vertex center, const VertexSet& region) override;

  const VertexSet& picks() const noexcept { return picks_; }
  const Partition& partition() const noexcept { return partition_; }

 private:
  std::unique_ptr<SeparatorStrategy> separator_;
  Graph g_;
  VertexSet picks_;
  Partition partition_;
};

// Flipper that simulates a pseudo-flipper at twice the game radius. Each
// simulated round walks through every flip of the current partition and then
// back to the input graph; the last centre feeds the pseudo-flipper.
class PseudoFlipperAsFlipper : public FlipperStrategy {
 public:
  PseudoFlipperAsFlipper(std::unique_ptr<PseudoFlipperStrategy> inner, std::size_t game_radius, std::size_t cap = 5)
      : inner_(std::move(inner)), radius_(game_radius), cap_(cap) {}

  void init(const Graph& g) override;
  FlipSet next(const Graph& local, const ConnectorMove& move) override;

  // Region and partition of the simulated pseudo game.
  const VertexSet& region() const noexcept { return region_; }
  const Partition& partition() const noexcept { return partition_; }
  bool round_finished() const noexcept { return finished_; }
  std::size_t simulated_rounds() const noexcept { return simulated_; }

 private:
  std::unique_ptr<PseudoFlipperStrategy> inner_;
  std::size_t radius_;
  std::size_t cap_;
  Graph g_;
  VertexSet region_;
  Partition partition_;
  std::optional<PartitionFlips> flips_;
  std::uint64_t mask_ = 0;
  std::uint64_t moves_in_round_ = 0;
  bool finished_ = false;
  std::size_t simulated_ = 0;
};

// Replays recorded flip sets (and their step counts).
class ScriptedFlipper : public FlipperStrategy {
 public:
  ScriptedFlipper(std::vector<FlipSet> moves, std::vector<std::size_t> steps = {})
      : moves_(std::move(moves)), steps_(std::move(steps)) {}
  void init(const Graph&) override { at_ = 0; }
  FlipSet next(const Graph& local, const ConnectorMove& move) override;
  std::size_t last_steps() const override { return last_steps_; }

 private:
  std::vector<FlipSet> moves_;
  std::vector<std::size_t> steps_;
  std::size_t at_ = 0;
  std::size_t last_steps_ = 0;
};

// Replays a list of picks; after the list runs out it picks nothing.
class ScriptedSeparator : public SeparatorStrategy {
 public:
  explicit ScriptedSeparator(std::vector<VertexSet> picks) : picks_(std::move(picks)) {}
  void init(const Graph&) override { at_ = 0; }
  VertexSet next(Vertex center, const VertexSet& region) override;

 private:
  std::vector<VertexSet> picks_;
  std::size_t at_ = 0;
};

}  // namespace flipper
