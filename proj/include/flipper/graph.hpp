#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "flipper/budget.hpp"
#include "flipper/vertex_set.hpp"

namespace flipper {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u;
  Vertex v;
};

// Simple undirected graph on a subset of the ids [0, universe). Ids outside
// vertices() are dead: they have no edges and every operation ignores them.
class Graph {
 public:
  Graph() = default;

  // Throws GraphError on self-loops, duplicate edges or ids >= n.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph edgeless(std::size_t n);

  std::size_t universe() const noexcept { return universe_; }
  const VertexSet& vertices() const noexcept { return live_; }
  std::size_t order() const noexcept { return live_.count(); }
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  bool is_live(Vertex v) const noexcept { return live_.contains(v); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return u < universe_ && rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).count(); }

  // Throws GraphError if w contains a dead id.
  Graph induced(const VertexSet& w) const;

  // Toggles every pair {u, v} of distinct live vertices with u in a and v in b
  // (or the other way round). Each such pair is toggled once.
  void toggle_between(const VertexSet& a, const VertexSet& b);

  // Words per adjacency row, the unit used for step accounting.
  std::size_t row_words() const noexcept { return (universe_ + VertexSet::kWordBits - 1) / VertexSet::kWordBits; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t universe_ = 0;
  VertexSet live_;
  std::vector<VertexSet> rows_;
};

// Vertices at distance <= radius from the source(s). Optional budget is charged
// one row per expanded vertex.
VertexSet ball(const Graph& g, Vertex center, std::size_t radius, StepBudget* budget = nullptr);
VertexSet ball(const Graph& g, const VertexSet& sources, std::size_t radius, StepBudget* budget = nullptr);

// Distances from source, kInfinity for unreachable or dead ids.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);
std::size_t distance(const Graph& g, Vertex u, Vertex v);

// True when every two distinct members of z are at distance > radius.
bool is_distance_independent(const Graph& g, const VertexSet& z, std::size_t radius, StepBudget* budget = nullptr);

}  // namespace flipper
