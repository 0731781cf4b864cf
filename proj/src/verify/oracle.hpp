#pragma once

// Slow reference implementations used to cross-check the library. Nothing
// here calls into the bitset code paths it is meant to check.

#include <cstdint>
#include <vector>

#include "flipper/graph.hpp"
#include "flipper/partition.hpp"

namespace flipper::oracle {

// Adjacency matrix copy of a graph.
struct MatrixGraph {
  std::size_t n = 0;
  std::vector<char> live;
  std::vector<std::vector<char>> adj;

  static MatrixGraph from(const Graph& g);
  bool same_as(const Graph& g) const;
};

void flip(MatrixGraph& m, const std::vector<Vertex>& a, const std::vector<Vertex>& b);
MatrixGraph induced(const MatrixGraph& m, const std::vector<char>& keep);

// All-pairs distances by Floyd-Warshall; kInfinity when unreachable.
std::vector<std::vector<std::size_t>> distances(const MatrixGraph& m);

// Parts as sorted id lists, sorted by first element.
std::vector<std::vector<Vertex>> s_classes(const MatrixGraph& m, const std::vector<Vertex>& s);
std::vector<std::vector<Vertex>> parts_of(const Partition& p);

// Max over every flip set built from pairs of parts, by explicit enumeration.
std::vector<std::vector<std::size_t>> flip_distances(const MatrixGraph& m, const std::vector<std::vector<Vertex>>& parts);

// Whether h is one of the explicitly enumerated partition flips of g.
bool is_partition_flip(const MatrixGraph& g, const MatrixGraph& h, const std::vector<std::vector<Vertex>>& parts);

// Tries every ordered 2k-tuple.
bool has_ladder(const MatrixGraph& m, std::size_t k);

// One graph per isomorphism class on n vertices (n <= 8), as edge lists.
std::vector<Graph> graphs_up_to_isomorphism(std::size_t n);

}  // namespace flipper::oracle
