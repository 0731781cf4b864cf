#pragma once

#include <optional>
#include <vector>

#include "flipper/vertex_set.hpp"

namespace flipper {

// Partition of a vertex set into non-empty parts, kept sorted by least member
// so that equal partitions compare equal.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument on empty or overlapping parts.
  explicit Partition(std::vector<VertexSet> parts);
  static Partition single(const VertexSet& ground);

  std::size_t size() const noexcept { return parts_.size(); }
  const std::vector<VertexSet>& parts() const noexcept { return parts_; }
  const VertexSet& operator[](std::size_t i) const { return parts_[i]; }
  const VertexSet& ground() const noexcept { return ground_; }
  std::optional<std::size_t> part_of(Vertex v) const;

  // Every part of this lies inside a part of coarser, and the grounds match.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<VertexSet> parts_;
  VertexSet ground_;
  std::vector<std::size_t> index_;
};

}  // namespace flipper
