#include "flipper/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace flipper {

Partition::Partition(std::vector<VertexSet> parts) : parts_(std::move(parts)) {
  for (const VertexSet& p : parts_) {
    if (p.empty()) throw std::invalid_argument("partition: empty part");
    if (ground_.intersects(p)) throw std::invalid_argument("partition: parts overlap on " + to_string(ground_ & p));
    ground_ |= p;
  }
  std::sort(parts_.begin(), parts_.end(), [](const VertexSet& a, const VertexSet& b) { return *a.first() < *b.first(); });
  index_.assign(ground_.universe(), kInfinity);
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (Vertex v : parts_[i]) index_[v] = i;
}

Partition Partition::single(const VertexSet& ground) {
  if (ground.empty()) return Partition();
  return Partition(std::vector<VertexSet>{ground});
}

std::optional<std::size_t> Partition::part_of(Vertex v) const {
  if (v >= index_.size() || index_[v] == kInfinity) return std::nullopt;
  return index_[v];
}

bool Partition::refines(const Partition& coarser) const {
  if (!(ground_ == coarser.ground_)) return false;
  for (const VertexSet& p : parts_) {
    auto host = coarser.part_of(*p.first());
    if (!host || !p.is_subset_of(coarser.parts_[*host])) return false;
  }
  return true;
}

}  // namespace flipper
