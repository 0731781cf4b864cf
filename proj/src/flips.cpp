#include "flipper/flips.hpp"

#include <algorithm>
#include <map>

namespace flipper {

AtomicFlip::AtomicFlip(VertexSet a, VertexSet b) : a_(std::move(a)), b_(std::move(b)) {
  if (canonical_less(b_, a_)) std::swap(a_, b_);
}

bool operator<(const AtomicFlip& x, const AtomicFlip& y) {
  if (canonical_less(x.a_, y.a_)) return true;
  if (canonical_less(y.a_, x.a_)) return false;
  return canonical_less(x.b_, y.b_);
}

FlipSet::FlipSet(std::initializer_list<AtomicFlip> flips) {
  for (const AtomicFlip& f : flips) toggle(f);
}

void FlipSet::toggle(const AtomicFlip& f) {
  auto it = std::lower_bound(flips_.begin(), flips_.end(), f);
  if (it != flips_.end() && *it == f) {
    flips_.erase(it);
  } else {
    flips_.insert(it, f);
  }
}

bool FlipSet::contains(const AtomicFlip& f) const { return std::binary_search(flips_.begin(), flips_.end(), f); }

Graph apply_atomic_flip(const Graph& g, const AtomicFlip& f) {
  Graph h = g;
  h.toggle_between(f.first(), f.second());
  return h;
}

Graph apply_flip_set(const Graph& g, const FlipSet& flips) {
  Graph h = g;
  for (const AtomicFlip& f : flips) h.toggle_between(f.first(), f.second());
  return h;
}

FlipSet compose_flip_sets(const FlipSet& a, const FlipSet& b) {
  FlipSet out = a;
  for (const AtomicFlip& f : b) out.toggle(f);
  return out;
}

Partition s_classes(const Graph& g, const VertexSet& s) {
  VertexSet live_s = s & g.vertices();
  std::vector<VertexSet> parts;
  for (Vertex v : live_s) parts.emplace_back(g.universe(), std::initializer_list<Vertex>{v});
  std::map<std::vector<Vertex>, VertexSet> by_trace;
  for (Vertex v : g.vertices() - live_s) {
    auto [it, fresh] = by_trace.try_emplace((g.neighbors(v) & live_s).to_vector(), g.universe());
    it->second.insert(v);
  }
  for (auto& [trace, members] : by_trace) parts.push_back(std::move(members));
  return Partition(std::move(parts));
}

PartitionFlips::PartitionFlips(const Partition& p, std::size_t cap) : partition_(&p) {
  if (p.size() > cap) {
    throw BudgetExceeded("partition has " + std::to_string(p.size()) + " parts, cap is " + std::to_string(cap));
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j) pairs_.emplace_back(i, j);
}

FlipSet PartitionFlips::flip_set(std::uint64_t mask) const {
  FlipSet out;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((mask >> k) & 1U) out.toggle(AtomicFlip((*partition_)[pairs_[k].first], (*partition_)[pairs_[k].second]));
  }
  return out;
}

Graph PartitionFlips::apply(const Graph& g, std::uint64_t mask) const {
  Graph h = g;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((mask >> k) & 1U) h.toggle_between((*partition_)[pairs_[k].first], (*partition_)[pairs_[k].second]);
  }
  return h;
}

FlipSet isolating_flips(const Graph& g, const VertexSet& x, const VertexOrder& order) {
  Graph h = g;
  FlipSet out;
  for (Vertex v : order.sorted(x & g.vertices())) {
    VertexSet single(g.universe());
    single.insert(v);
    AtomicFlip f(single, h.neighbors(v));
    h.toggle_between(f.first(), f.second());
    out.toggle(f);
  }
  return out;
}

bool is_partition_flip_of(const Graph& g, const Graph& h, const Partition& p) {
  if (!(g.vertices() == h.vertices())) return false;
  if (!(p.ground() == g.vertices())) return false;
  std::vector<VertexSet> diff(g.universe());
  for (Vertex v : g.vertices()) diff[v] = g.neighbors(v) ^ h.neighbors(v);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i; j < p.size(); ++j) {
      const VertexSet& pj = p[j];
      int bit = -1;
      for (Vertex u : p[i]) {
        VertexSet others = pj;
        others.erase(u);
        if (others.empty()) continue;
        VertexSet d = diff[u] & others;
        if (d.empty()) {
          if (bit == 1) return false;
          bit = 0;
        } else if (d == others) {
          if (bit == 0) return false;
          bit = 1;
        } else {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace flipper
