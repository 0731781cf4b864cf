#include "flipper/flip_metric.hpp"

#include <algorithm>

namespace flipper {

Separation is_r_separated(const Graph& g, const Partition& p, std::size_t radius, const VertexSet& a,
                          const VertexSet& b, std::size_t cap) {
  VertexSet la = a & g.vertices();
  VertexSet lb = b & g.vertices();
  if (la.intersects(lb)) return {};
  PartitionFlips flips(p, cap);
  for (std::uint64_t mask = 0; mask < flips.count(); ++mask) {
    Graph h = flips.apply(g, mask);
    if (!ball(h, la, radius).intersects(lb)) return {true, flips.flip_set(mask)};
  }
  return {};
}

std::size_t flip_distance(const Graph& g, const Partition& p, Vertex u, Vertex v, std::size_t cap) {
  if (!g.is_live(u) || !g.is_live(v)) return kInfinity;
  if (u == v) return 0;
  std::size_t worst = 0;
  PartitionFlips(p, cap).for_each(g, [&](const Graph& h) {
    worst = std::max(worst, distance(h, u, v));
    return worst != kInfinity;
  });
  return worst;
}

std::vector<std::vector<std::size_t>> flip_distance_matrix(const Graph& g, const Partition& p, std::size_t cap) {
  std::vector<std::vector<std::size_t>> worst(g.universe(), std::vector<std::size_t>(g.universe(), kInfinity));
  for (Vertex u : g.vertices())
    for (Vertex v : g.vertices()) worst[u][v] = 0;
  PartitionFlips(p, cap).for_each(g, [&](const Graph& h) {
    for (Vertex u : h.vertices()) {
      std::vector<std::size_t> d = bfs_distances(h, u);
      for (Vertex v : h.vertices()) worst[u][v] = std::max(worst[u][v], d[v]);
    }
    return true;
  });
  return worst;
}

VertexSet flip_ball(const Graph& g, const Partition& p, std::size_t radius, Vertex center, std::size_t cap) {
  if (!g.is_live(center)) return VertexSet(g.universe());
  VertexSet out = g.vertices();
  PartitionFlips(p, cap).for_each(g, [&](const Graph& h) {
    out &= ball(h, center, radius);
    return out.count() > 1;
  });
  return out;
}

}  // namespace flipper
