#include <stdexcept>
#include <string>

#include "flipper/generators.hpp"
#include "flipper/strategies.hpp"

namespace flipper {

namespace {

const VertexSet& candidates(const Game& game, const Position& pos) {
  return is_flipper_like(game.config().variant) ? pos.arena.vertices() : pos.region;
}

}  // namespace

ConnectorMove ball_move(const Game& game, const Position& pos, Vertex center) {
  ConnectorMove move{center, std::nullopt};
  if (game.config().variant == Variant::induced_subgraph) move.subset = ball(pos.arena, center, game.config().radius);
  return move;
}

ConnectorMove RandomConnector::next(const Game& game, const Position& pos) {
  std::vector<Vertex> pool = candidates(game, pos).to_vector();
  if (pool.empty()) throw std::logic_error("random connector: nothing to choose from");
  return ball_move(game, pos, pool[uniform_below(rng_, pool.size())]);
}

ConnectorMove GreedySurvivorConnector::next(const Game& game, const Position& pos) {
  std::optional<Vertex> best;
  std::size_t best_size = 0;
  for (Vertex c : candidates(game, pos)) {
    std::size_t size = is_flipper_like(game.config().variant) ? ball(pos.arena, c, game.config().radius).count()
                                                               : game.localize_region(pos, c).count();
    if (!best || size > best_size) {
      best = c;
      best_size = size;
    }
  }
  if (!best) throw std::logic_error("greedy connector: nothing to choose from");
  return ball_move(game, pos, *best);
}

ConnectorMove FarthestConnector::next(const Game& game, const Position& pos) {
  const Graph& metric = is_flipper_like(game.config().variant) ? pos.arena : game.graph();
  const VertexSet& pool = candidates(game, pos);
  std::vector<std::size_t> nearest(metric.universe(), kInfinity);
  for (Vertex p : played_) {
    if (!metric.is_live(p)) continue;
    std::vector<std::size_t> d = bfs_distances(metric, p);
    for (Vertex v : pool) nearest[v] = std::min(nearest[v], d[v]);
  }
  std::optional<Vertex> best;
  for (Vertex c : pool) {
    if (!best || nearest[c] > nearest[*best]) best = c;
  }
  if (!best) throw std::logic_error("farthest connector: nothing to choose from");
  played_.push_back(*best);
  return ball_move(game, pos, *best);
}

ConnectorMove ScriptedConnector::next(const Game&, const Position&) {
  if (at_ >= moves_.size()) throw std::out_of_range("connector script exhausted after " + std::to_string(at_) + " moves");
  return moves_[at_++];
}

std::unique_ptr<ConnectorStrategy> make_connector(std::string_view kind, std::uint64_t seed) {
  if (kind == "random") return std::make_unique<RandomConnector>(seed);
  if (kind == "greedy_survivor") return std::make_unique<GreedySurvivorConnector>();
  if (kind == "farthest_from_played") return std::make_unique<FarthestConnector>();
  throw std::invalid_argument("unknown connector '" + std::string(kind) + "'");
}

}  // namespace flipper
