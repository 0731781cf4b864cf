#pragma once

#include <optional>
#include <vector>

#include "flipper/vertex_set.hpp"

namespace flipper {

// Total order on vertex ids used for every tie-break. Default constructed means
// the natural id order.
class VertexOrder {
 public:
  VertexOrder() = default;

  // seq lists every id of [0, seq.size()) exactly once, smallest first.
  static VertexOrder from_sequence(std::vector<Vertex> seq);

  bool is_identity() const noexcept { return rank_.empty(); }
  std::size_t rank(Vertex v) const;
  bool less(Vertex a, Vertex b) const { return rank(a) < rank(b); }

  std::optional<Vertex> min_of(const VertexSet& s) const;
  std::vector<Vertex> sorted(const VertexSet& s) const;

  // Empty for the identity order.
  const std::vector<Vertex>& sequence() const noexcept { return sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> rank_;
};

}  // namespace flipper
