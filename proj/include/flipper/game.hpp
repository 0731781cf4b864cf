#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flipper/flips.hpp"

namespace flipper {

enum class Variant { flipper, induced_subgraph, pseudo_flipper, separation };

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
inline bool is_flipper_like(Variant v) { return v == Variant::flipper || v == Variant::induced_subgraph; }

// How many flips (or partition splits, or separator picks) round i allows.
class MoveSchedule {
 public:
  static MoveSchedule constant(std::size_t k) { return MoveSchedule(Kind::constant, k); }
  // max(i, k) in round i.
  static MoveSchedule growing(std::size_t k) { return MoveSchedule(Kind::growing, k); }
  static MoveSchedule unbounded() { return MoveSchedule(Kind::unbounded, 0); }

  std::size_t limit(std::size_t round) const;
  std::string describe() const;
  static std::optional<MoveSchedule> parse(std::string_view text);

 private:
  enum class Kind { constant, growing, unbounded };
  MoveSchedule(Kind kind, std::size_t k) : kind_(kind), k_(k) {}
  Kind kind_;
  std::size_t k_;
};

struct GameConfig {
  Variant variant = Variant::flipper;
  std::size_t radius = 1;
  std::size_t max_rounds = 1000;
  MoveSchedule schedule = MoveSchedule::constant(1);
  std::size_t partition_cap = 5;
};

// subset is the chosen vertex set in the induced-subgraph variant and empty
// otherwise.
struct ConnectorMove {
  Vertex center = 0;
  std::optional<VertexSet> subset;
};

struct Position {
  std::size_t round = 0;
  Graph arena;          // flipper variants
  VertexSet region;     // pseudo-flipper and separation variants
  Partition partition;  // pseudo-flipper variant
  VertexSet separators; // separation variant
};

using FlipperMove = std::variant<FlipSet, Partition, VertexSet>;

class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Game {
 public:
  Game(Graph g, GameConfig cfg);

  const Graph& graph() const noexcept { return graph_; }
  const GameConfig& config() const noexcept { return cfg_; }

  Position initial() const;
  std::size_t arena_size(const Position& pos) const;
  bool won(const Position& pos) const { return arena_size(pos) == 1; }

  // Partition whose flips define distances in the pseudo variants.
  Partition region_partition(const Position& pos) const;

  // Throw GameError when the move is not legal in pos.
  void check_connector_move(const Position& pos, const ConnectorMove& move) const;
  void check_flipper_move(const Position& pos, const FlipperMove& move) const;

  // Arena after the connector move, before the flipper answers (flipper variants).
  Graph localize(const Position& pos, const ConnectorMove& move) const;
  // Region after the connector move (pseudo variants).
  VertexSet localize_region(const Position& pos, Vertex center) const;

  Position step(const Position& pos, const ConnectorMove& cmove, const FlipperMove& fmove) const;

 private:
  Graph graph_;
  GameConfig cfg_;
};

class ConnectorStrategy {
 public:
  virtual ~ConnectorStrategy() = default;
  virtual void init(const Game&) {}
  virtual ConnectorMove next(const Game& game, const Position& pos) = 0;
};

class FlipperStrategy {
 public:
  virtual ~FlipperStrategy() = default;
  virtual void init(const Graph& g) = 0;
  // local is the arena right after the connector move.
  virtual FlipSet next(const Graph& local, const ConnectorMove& move) = 0;
  // Deterministic work counter for the last move, 0 if not tracked.
  virtual std::size_t last_steps() const { return 0; }
};

class PseudoFlipperStrategy {
 public:
  virtual ~PseudoFlipperStrategy() = default;
  virtual void init(const Graph& g) = 0;
  virtual Partition next(Vertex center, const VertexSet& region) = 0;
};

class SeparatorStrategy {
 public:
  virtual ~SeparatorStrategy() = default;
  virtual void init(const Graph& g) = 0;
  virtual VertexSet next(Vertex center, const VertexSet& region) = 0;
};

struct RoundRecord {
  std::size_t round = 0;
  ConnectorMove connector;
  FlipperMove flipper;
  std::size_t arena_size = 0;
  std::size_t steps = 0;
};

enum class OutcomeKind { flipper_wins, round_limit, connector_forfeit, flipper_forfeit };

struct Outcome {
  OutcomeKind kind = OutcomeKind::round_limit;
  std::size_t round = 0;
  std::string reason;
};

std::string_view outcome_name(OutcomeKind k);

struct Transcript {
  Variant variant = Variant::flipper;
  std::size_t radius = 1;
  std::size_t n = 0;
  std::size_t max_rounds = 0;
  std::vector<RoundRecord> rounds;
  Outcome outcome;
};

using RoundObserver = std::function<void(const RoundRecord&, const Position&)>;

Transcript run_game(const Game& game, FlipperStrategy& flipper, ConnectorStrategy& connector,
                    const RoundObserver& observe = {});
Transcript run_game(const Game& game, PseudoFlipperStrategy& flipper, ConnectorStrategy& connector,
                    const RoundObserver& observe = {});
Transcript run_game(const Game& game, SeparatorStrategy& separator, ConnectorStrategy& connector,
                    const RoundObserver& observe = {});

// Positions 0..k reached by feeding the recorded moves back through step.
std::vector<Position> replay(const Game& game, const Transcript& t);

}  // namespace flipper
