#include "flipper/graph.hpp"

#include <string>

namespace flipper {

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  Graph g = edgeless(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " has an id >= " +
                       std::to_string(n));
    }
    if (e.u == e.v) throw GraphError("self-loop at " + std::to_string(e.u));
    if (g.rows_[e.u].contains(e.v)) {
      throw GraphError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    g.rows_[e.u].insert(e.v);
    g.rows_[e.v].insert(e.u);
  }
  return g;
}

Graph Graph::edgeless(std::size_t n) {
  Graph g;
  g.universe_ = n;
  g.live_ = VertexSet::full(n);
  g.rows_.assign(n, VertexSet(n));
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Vertex v : live_) twice += rows_[v].count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u : live_) {
    for (Vertex v : rows_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

const VertexSet& Graph::neighbors(Vertex v) const {
  if (v >= universe_) throw GraphError("vertex " + std::to_string(v) + " outside the universe");
  return rows_[v];
}

Graph Graph::induced(const VertexSet& w) const {
  if (!w.is_subset_of(live_)) throw GraphError("induced: set " + to_string(w - live_) + " is not live");
  Graph h;
  h.universe_ = universe_;
  h.live_ = w;
  h.live_.resize(universe_);
  h.rows_.assign(universe_, VertexSet(universe_));
  for (Vertex v : h.live_) h.rows_[v] = rows_[v] & h.live_;
  return h;
}

void Graph::toggle_between(const VertexSet& a, const VertexSet& b) {
  VertexSet la = a & live_;
  VertexSet lb = b & live_;
  VertexSet touched = la | lb;
  VertexSet mask(universe_);
  for (Vertex u : touched) {
    mask.clear();
    if (la.contains(u)) mask |= lb;
    if (lb.contains(u)) mask |= la;
    mask.erase(u);
    rows_[u] ^= mask;
  }
}

bool operator==(const Graph& a, const Graph& b) {
  if (!(a.live_ == b.live_)) return false;
  for (Vertex v : a.live_) {
    if (!(a.rows_[v] == b.rows_[v])) return false;
  }
  return true;
}

VertexSet ball(const Graph& g, Vertex center, std::size_t radius, StepBudget* budget) {
  VertexSet sources(g.universe());
  if (g.is_live(center)) sources.insert(center);
  return ball(g, sources, radius, budget);
}

VertexSet ball(const Graph& g, const VertexSet& sources, std::size_t radius, StepBudget* budget) {
  VertexSet seen = sources & g.vertices();
  VertexSet frontier = seen;
  VertexSet next(g.universe());
  for (std::size_t d = 0; d < radius && !frontier.empty(); ++d) {
    next.clear();
    for (Vertex v : frontier) {
      next |= g.neighbors(v);
      if (budget) budget->charge(g.row_words());
    }
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.universe(), kInfinity);
  if (!g.is_live(source)) return dist;
  VertexSet seen(g.universe());
  seen.insert(source);
  VertexSet frontier = seen;
  VertexSet next(g.universe());
  dist[source] = 0;
  for (std::size_t d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (Vertex v : frontier) next |= g.neighbors(v);
    next -= seen;
    for (Vertex v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::size_t distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.is_live(u) || !g.is_live(v)) return kInfinity;
  if (u == v) return 0;
  VertexSet seen(g.universe());
  seen.insert(u);
  VertexSet frontier = seen;
  VertexSet next(g.universe());
  for (std::size_t d = 1; !frontier.empty(); ++d) {
    next.clear();
    for (Vertex w : frontier) next |= g.neighbors(w);
    next -= seen;
    if (next.contains(v)) return d;
    seen |= next;
    frontier = next;
  }
  return kInfinity;
}

bool is_distance_independent(const Graph& g, const VertexSet& z, std::size_t radius, StepBudget* budget) {
  for (Vertex v : z) {
    VertexSet b = ball(g, v, radius, budget);
    b.erase(v);
    if (b.intersects(z)) return false;
  }
  return true;
}

}  // namespace flipper
