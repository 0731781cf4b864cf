#include "flipper/order.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace flipper {

VertexOrder VertexOrder::from_sequence(std::vector<Vertex> seq) {
  VertexOrder order;
  order.rank_.assign(seq.size(), kInfinity);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    Vertex v = seq[i];
    if (v >= seq.size()) throw std::invalid_argument("order: id " + std::to_string(v) + " out of range");
    if (order.rank_[v] != kInfinity) throw std::invalid_argument("order: id " + std::to_string(v) + " repeated");
    order.rank_[v] = i;
  }
  order.sequence_ = std::move(seq);
  return order;
}

std::size_t VertexOrder::rank(Vertex v) const {
  if (rank_.empty()) return v;
  if (v >= rank_.size()) throw std::out_of_range("order: id " + std::to_string(v) + " not ranked");
  return rank_[v];
}

std::optional<Vertex> VertexOrder::min_of(const VertexSet& s) const {
  if (rank_.empty()) return s.first();
  std::optional<Vertex> best;
  for (Vertex v : s) {
    if (!best || rank(v) < rank(*best)) best = v;
  }
  return best;
}

std::vector<Vertex> VertexOrder::sorted(const VertexSet& s) const {
  std::vector<Vertex> out = s.to_vector();
  if (!rank_.empty()) std::sort(out.begin(), out.end(), [this](Vertex a, Vertex b) { return less(a, b); });
  return out;
}

}  // namespace flipper
