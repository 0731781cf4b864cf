#include "flipper/game.hpp"

#include <algorithm>
#include <charconv>

#include "flipper/flip_metric.hpp"

namespace flipper {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::flipper: return "flipper";
    case Variant::induced_subgraph: return "induced_subgraph";
    case Variant::pseudo_flipper: return "pseudo_flipper";
    case Variant::separation: return "separation";
  }
  return "flipper";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : {Variant::flipper, Variant::induced_subgraph, Variant::pseudo_flipper, Variant::separation}) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

std::size_t MoveSchedule::limit(std::size_t round) const {
  switch (kind_) {
    case Kind::constant: return k_;
    case Kind::growing: return std::max(round, k_);
    case Kind::unbounded: return kInfinity;
  }
  return k_;
}

std::string MoveSchedule::describe() const {
  switch (kind_) {
    case Kind::constant: return std::to_string(k_);
    case Kind::growing: return "max(i," + std::to_string(k_) + ")";
    case Kind::unbounded: return "unbounded";
  }
  return {};
}

std::optional<MoveSchedule> MoveSchedule::parse(std::string_view text) {
  auto number = [](std::string_view s) -> std::optional<std::size_t> {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
  };
  if (text == "unbounded") return unbounded();
  if (text.starts_with("max(i,") && text.ends_with(")")) {
    auto k = number(text.substr(6, text.size() - 7));
    if (k) return growing(*k);
    return std::nullopt;
  }
  if (auto k = number(text)) return constant(*k);
  return std::nullopt;
}

std::string_view outcome_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::flipper_wins: return "flipper_wins";
    case OutcomeKind::round_limit: return "round_limit";
    case OutcomeKind::connector_forfeit: return "connector_forfeit";
    case OutcomeKind::flipper_forfeit: return "flipper_forfeit";
  }
  return "round_limit";
}

Game::Game(Graph g, GameConfig cfg) : graph_(std::move(g)), cfg_(cfg) {
  if (graph_.order() == 0) throw GameError("game needs at least one vertex");
}

Position Game::initial() const {
  Position pos;
  if (is_flipper_like(cfg_.variant)) {
    pos.arena = graph_;
  } else {
    pos.region = graph_.vertices();
    if (cfg_.variant == Variant::pseudo_flipper) pos.partition = Partition::single(graph_.vertices());
    pos.separators = VertexSet(graph_.universe());
  }
  return pos;
}

std::size_t Game::arena_size(const Position& pos) const {
  return is_flipper_like(cfg_.variant) ? pos.arena.order() : pos.region.count();
}

Partition Game::region_partition(const Position& pos) const {
  if (cfg_.variant == Variant::separation) return s_classes(graph_, pos.separators);
  return pos.partition;
}

void Game::check_connector_move(const Position& pos, const ConnectorMove& move) const {
  const std::string at = "round " + std::to_string(pos.round + 1) + ": ";
  switch (cfg_.variant) {
    case Variant::flipper:
      if (move.subset) throw GameError(at + "flipper variant takes a centre, not a vertex set");
      if (!pos.arena.is_live(move.center)) throw GameError(at + "centre " + std::to_string(move.center) + " is not in the arena");
      return;
    case Variant::induced_subgraph: {
      if (!move.subset || move.subset->empty()) throw GameError(at + "move must be a non-empty vertex set");
      const VertexSet& s = *move.subset;
      if (!s.is_subset_of(pos.arena.vertices())) throw GameError(at + "set " + to_string(s) + " leaves the arena");
      if (pos.arena.is_live(move.center) && s.is_subset_of(ball(pos.arena, move.center, cfg_.radius))) return;
      for (Vertex c : ball(pos.arena, *s.first(), cfg_.radius)) {
        if (s.is_subset_of(ball(pos.arena, c, cfg_.radius))) return;
      }
      throw GameError(at + "set " + to_string(s) + " fits in no ball of radius " + std::to_string(cfg_.radius));
    }
    case Variant::pseudo_flipper:
    case Variant::separation:
      if (move.subset) throw GameError(at + "pseudo variants take a centre, not a vertex set");
      if (!pos.region.contains(move.center)) throw GameError(at + "centre " + std::to_string(move.center) + " is outside the region");
      return;
  }
}

void Game::check_flipper_move(const Position& pos, const FlipperMove& move) const {
  const std::size_t round = pos.round + 1;
  const std::size_t limit = cfg_.schedule.limit(round);
  const std::string at = "round " + std::to_string(round) + ": ";
  switch (cfg_.variant) {
    case Variant::flipper:
    case Variant::induced_subgraph: {
      const FlipSet* f = std::get_if<FlipSet>(&move);
      if (!f) throw GameError(at + "expected a flip set");
      if (f->size() > limit) {
        throw GameError(at + std::to_string(f->size()) + " flips exceed the limit of " + std::to_string(limit));
      }
      return;
    }
    case Variant::pseudo_flipper: {
      const Partition* p = std::get_if<Partition>(&move);
      if (!p) throw GameError(at + "expected a partition");
      if (!p->refines(pos.partition)) throw GameError(at + "partition does not refine the previous one");
      if (p->size() - pos.partition.size() > limit) {
        throw GameError(at + std::to_string(p->size() - pos.partition.size()) + " splits exceed the limit of " +
                        std::to_string(limit));
      }
      if (p->size() > cfg_.partition_cap) {
        throw GameError(at + "partition has more than " + std::to_string(cfg_.partition_cap) + " parts");
      }
      return;
    }
    case Variant::separation: {
      const VertexSet* s = std::get_if<VertexSet>(&move);
      if (!s) throw GameError(at + "expected a separator pick");
      if (!s->is_subset_of(graph_.vertices())) throw GameError(at + "separator pick is not a vertex");
      if (s->count() > limit) throw GameError(at + "too many separator picks");
      if (s_classes(graph_, pos.separators | *s).size() > cfg_.partition_cap) {
        throw GameError(at + "separator classes exceed the cap of " + std::to_string(cfg_.partition_cap));
      }
      return;
    }
  }
}

Graph Game::localize(const Position& pos, const ConnectorMove& move) const {
  check_connector_move(pos, move);
  if (cfg_.variant == Variant::induced_subgraph) return pos.arena.induced(*move.subset);
  return pos.arena.induced(ball(pos.arena, move.center, cfg_.radius));
}

VertexSet Game::localize_region(const Position& pos, Vertex center) const {
  return pos.region & flip_ball(graph_, region_partition(pos), cfg_.radius, center, cfg_.partition_cap);
}

Position Game::step(const Position& pos, const ConnectorMove& cmove, const FlipperMove& fmove) const {
  check_connector_move(pos, cmove);
  check_flipper_move(pos, fmove);
  Position next;
  next.round = pos.round + 1;
  if (is_flipper_like(cfg_.variant)) {
    next.arena = apply_flip_set(localize(pos, cmove), std::get<FlipSet>(fmove));
    return next;
  }
  next.region = localize_region(pos, cmove.center);
  if (cfg_.variant == Variant::pseudo_flipper) {
    next.partition = std::get<Partition>(fmove);
  } else {
    next.separators = pos.separators | std::get<VertexSet>(fmove);
  }
  return next;
}

namespace {

// Shared round loop. answer(pos, cmove, local-or-region) returns the flipper
// move and its step count.
template <typename Answer>
Transcript play(const Game& game, ConnectorStrategy& connector, const RoundObserver& observe, Answer answer) {
  const GameConfig& cfg = game.config();
  Transcript t;
  t.variant = cfg.variant;
  t.radius = cfg.radius;
  t.n = game.graph().order();
  t.max_rounds = cfg.max_rounds;
  connector.init(game);
  Position pos = game.initial();
  for (std::size_t round = 1;; ++round) {
    if (game.won(pos)) {
      t.outcome = {OutcomeKind::flipper_wins, pos.round, {}};
      return t;
    }
    if (round > cfg.max_rounds) {
      t.outcome = {OutcomeKind::round_limit, pos.round, {}};
      return t;
    }
    ConnectorMove cmove;
    try {
      cmove = connector.next(game, pos);
      game.check_connector_move(pos, cmove);
    } catch (const std::exception& e) {
      t.outcome = {OutcomeKind::connector_forfeit, round, e.what()};
      return t;
    }
    RoundRecord rec;
    rec.round = round;
    rec.connector = cmove;
    Position next;
    try {
      auto [move, steps] = answer(pos, cmove);
      game.check_flipper_move(pos, move);
      next = game.step(pos, cmove, move);
      rec.flipper = std::move(move);
      rec.steps = steps;
    } catch (const std::exception& e) {
      t.outcome = {OutcomeKind::flipper_forfeit, round, e.what()};
      return t;
    }
    pos = std::move(next);
    rec.arena_size = game.arena_size(pos);
    if (observe) observe(rec, pos);
    t.rounds.push_back(std::move(rec));
  }
}

void require_variant(const Game& game, bool ok, const char* what) {
  if (!ok) throw GameError(std::string(what) + " cannot play the " + std::string(variant_name(game.config().variant)) + " variant");
}

}  // namespace

Transcript run_game(const Game& game, FlipperStrategy& flipper, ConnectorStrategy& connector,
                    const RoundObserver& observe) {
  require_variant(game, is_flipper_like(game.config().variant), "a flipper strategy");
  flipper.init(game.graph());
  return play(game, connector, observe, [&](const Position& pos, const ConnectorMove& cmove) {
    Graph local = game.localize(pos, cmove);
    FlipSet f = flipper.next(local, cmove);
    return std::pair<FlipperMove, std::size_t>(std::move(f), flipper.last_steps());
  });
}

Transcript run_game(const Game& game, PseudoFlipperStrategy& flipper, ConnectorStrategy& connector,
                    const RoundObserver& observe) {
  require_variant(game, game.config().variant == Variant::pseudo_flipper, "a pseudo-flipper strategy");
  flipper.init(game.graph());
  return play(game, connector, observe, [&](const Position& pos, const ConnectorMove& cmove) {
    VertexSet region = game.localize_region(pos, cmove.center);
    return std::pair<FlipperMove, std::size_t>(flipper.next(cmove.center, region), 0);
  });
}

Transcript run_game(const Game& game, SeparatorStrategy& separator, ConnectorStrategy& connector,
                    const RoundObserver& observe) {
  require_variant(game, game.config().variant == Variant::separation, "a separator strategy");
  separator.init(game.graph());
  return play(game, connector, observe, [&](const Position& pos, const ConnectorMove& cmove) {
    VertexSet region = game.localize_region(pos, cmove.center);
    return std::pair<FlipperMove, std::size_t>(separator.next(cmove.center, region), 0);
  });
}

std::vector<Position> replay(const Game& game, const Transcript& t) {
  std::vector<Position> out{game.initial()};
  for (const RoundRecord& rec : t.rounds) out.push_back(game.step(out.back(), rec.connector, rec.flipper));
  return out;
}

}  // namespace flipper
