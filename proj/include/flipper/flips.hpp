#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "flipper/graph.hpp"
#include "flipper/order.hpp"
#include "flipper/partition.hpp"

namespace flipper {

// Unordered pair of vertex sets, stored with first() <= second() in
// canonical_less order. (empty, empty) is the no-op flip.
class AtomicFlip {
 public:
  AtomicFlip() = default;
  AtomicFlip(VertexSet a, VertexSet b);

  const VertexSet& first() const noexcept { return a_; }
  const VertexSet& second() const noexcept { return b_; }
  bool is_noop() const { return a_.empty() && b_.empty(); }

  friend bool operator==(const AtomicFlip& x, const AtomicFlip& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const AtomicFlip& x, const AtomicFlip& y);

 private:
  VertexSet a_;
  VertexSet b_;
};

// Set of atomic flips, kept sorted. Adding a flip that is already present
// removes it, so composition is symmetric difference.
class FlipSet {
 public:
  FlipSet() = default;
  FlipSet(std::initializer_list<AtomicFlip> flips);

  void toggle(const AtomicFlip& f);
  bool contains(const AtomicFlip& f) const;
  std::size_t size() const noexcept { return flips_.size(); }
  bool empty() const noexcept { return flips_.empty(); }
  auto begin() const { return flips_.begin(); }
  auto end() const { return flips_.end(); }
  const std::vector<AtomicFlip>& flips() const noexcept { return flips_; }

  friend bool operator==(const FlipSet& a, const FlipSet& b) { return a.flips_ == b.flips_; }

 private:
  std::vector<AtomicFlip> flips_;
};

Graph apply_atomic_flip(const Graph& g, const AtomicFlip& f);
Graph apply_flip_set(const Graph& g, const FlipSet& flips);
FlipSet compose_flip_sets(const FlipSet& a, const FlipSet& b);

// One singleton part per member of s, the rest grouped by their neighbourhood in s.
Partition s_classes(const Graph& g, const VertexSet& s);

// All flip sets made of pairs of parts (self-pairs included). Mask bit k stands
// for the k-th pair in the order (0,0), (0,1), ..., (0,p-1), (1,1), ...
// Construction throws BudgetExceeded when the partition has more than cap parts.
class PartitionFlips {
 public:
  PartitionFlips(const Partition& p, std::size_t cap = 5);

  std::size_t pair_count() const noexcept { return pairs_.size(); }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_.size(); }
  FlipSet flip_set(std::uint64_t mask) const;
  // Same graph as apply_flip_set(g, flip_set(mask)) without building the set.
  Graph apply(const Graph& g, std::uint64_t mask) const;
  // Calls visit on every flip of g, in Gray-code order rather than mask order,
  // toggling one pair between calls. Stops early when visit returns false.
  template <typename Visit>
  void for_each(const Graph& g, Visit visit) const {
    Graph h = g;
    if (!visit(static_cast<const Graph&>(h))) return;
    for (std::uint64_t i = 1; i < count(); ++i) {
      std::size_t k = static_cast<std::size_t>(std::countr_zero(i));
      h.toggle_between((*partition_)[pairs_[k].first], (*partition_)[pairs_[k].second]);
      if (!visit(static_cast<const Graph&>(h))) return;
    }
  }

 private:
  const Partition* partition_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

// Flip set of size |x| that isolates every member of x. The flip for a member
// uses its neighbourhood in the graph already flipped for earlier members,
// taken in the given order.
FlipSet isolating_flips(const Graph& g, const VertexSet& x, const VertexOrder& order = {});

// Whether h equals g flipped along some pairs of parts of p.
bool is_partition_flip_of(const Graph& g, const Graph& h, const Partition& p);

}  // namespace flipper
