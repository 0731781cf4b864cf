#pragma once

#include <optional>
#include <vector>

#include "flipper/flips.hpp"

namespace flipper {

struct Separation {
  bool separated = false;
  // First flip set in PartitionFlips mask order that cuts every short path.
  std::optional<FlipSet> witness;
};

// a and b are r-separated over p when some p-flip of g has no path of length
// <= radius between them. Sets are clipped to live vertices; if they still
// share a vertex they are never separated.
Separation is_r_separated(const Graph& g, const Partition& p, std::size_t radius, const VertexSet& a,
                          const VertexSet& b, std::size_t cap = 5);

// Largest distance between u and v over all p-flips of g.
std::size_t flip_distance(const Graph& g, const Partition& p, Vertex u, Vertex v, std::size_t cap = 5);

// Flip distances between all pairs of live vertices, indexed by id.
std::vector<std::vector<std::size_t>> flip_distance_matrix(const Graph& g, const Partition& p, std::size_t cap = 5);

// Live vertices w with flip_distance(center, w) <= radius.
VertexSet flip_ball(const Graph& g, const Partition& p, std::size_t radius, Vertex center, std::size_t cap = 5);

}  // namespace flipper
