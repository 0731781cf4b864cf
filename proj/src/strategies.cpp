#include "flipper/strategies.hpp"

#include <stdexcept>
#include <string>

#include "flipper/flip_metric.hpp"

namespace flipper {

void FlipStar::init(const Graph& g) {
  if (cfg_.radius < 2) throw std::invalid_argument("flip star needs a game radius of at least 1");
  g_ = g;
  tracked_.clear();
  tracked_set_ = VertexSet(g.universe());
  second_half_ = false;
  pending_isolation_ = false;
  pending_ = {};
  era_ = 1;
  pairs_in_era_ = 0;
  pairs_per_era_.clear();
  cache_.clear();
  last_ = {};
  last_steps_ = 0;
  start_era();
}

void FlipStar::start_era() {
  era_members_ = cfg_.order.sorted(tracked_set_);
  subset_.assign(5, 0);
  for (std::size_t i = 0; i < 5; ++i) subset_[i] = i;
  subset_ready_ = era_members_.size() >= 5;
}

bool FlipStar::advance_subset() {
  const std::size_t n = era_members_.size();
  std::size_t i = 5;
  while (i > 0 && subset_[i - 1] == n - 5 + i - 1) --i;
  if (i == 0) return false;
  ++subset_[i - 1];
  for (std::size_t j = i; j < 5; ++j) subset_[j] = subset_[j - 1] + 1;
  return true;
}

FlipSet FlipStar::next(const Graph& local, const ConnectorMove&) {
  last_steps_ = 0;
  if (second_half_) {
    second_half_ = false;
    last_ = {era_, pending_isolation_, true};
    FlipSet out = pending_;
    if (pending_isolation_) {
      if (auto x = cfg_.order.min_of(local.vertices() - tracked_set_)) {
        tracked_.push_back(*x);
        tracked_set_.insert(*x);
      }
      pairs_per_era_.push_back(pairs_in_era_);
      pairs_in_era_ = 0;
      ++era_;
      start_era();
    }
    return out;
  }
  ++pairs_in_era_;
  second_half_ = true;
  if (subset_ready_) {
    VertexSet z(g_.universe());
    for (std::size_t i : subset_) z.insert(era_members_[i]);
    subset_ready_ = advance_subset();
    auto it = cache_.find(z);
    if (it == cache_.end()) it = cache_.emplace(z, predict_traced(g_, cfg_, z)).first;
    pending_ = it->second.flips;
    last_steps_ = it->second.steps;
    pending_isolation_ = false;
  } else {
    pending_ = isolating_flips(g_, tracked_set_, cfg_.order);
    pending_isolation_ = true;
  }
  last_ = {era_, pending_isolation_, false};
  return pending_;
}

void SingleFlipAdapter::init(const Graph& g) {
  inner_->init(g);
  queue_.clear();
  inner_calls_ = 0;
  widest_ = 0;
  last_steps_ = 0;
}

FlipSet SingleFlipAdapter::next(const Graph& local, const ConnectorMove& move) {
  last_steps_ = 0;
  if (queue_.empty()) {
    FlipSet answer = inner_->next(local, move);
    ++inner_calls_;
    last_steps_ = inner_->last_steps();
    widest_ = std::max(widest_, answer.size());
    for (const AtomicFlip& f : answer) queue_.push_back(f);
    while (queue_.size() < std::max<std::size_t>(pad_to_, 1)) queue_.emplace_back();
  }
  FlipSet out;
  out.toggle(queue_.front());
  queue_.pop_front();
  return out;
}

void SeparatorAsPseudoFlipper::init(const Graph& g) {
  separator_->init(g);
  g_ = g;
  picks_ = VertexSet(g.universe());
  partition_ = Partition::single(g.vertices());
}

Partition SeparatorAsPseudoFlipper::next(Vertex center, const VertexSet& region) {
  picks_ |= separator_->next(center, region) & g_.vertices();
  partition_ = s_classes(g_, picks_);
  return partition_;
}

void PseudoFlipperAsFlipper::init(const Graph& g) {
  inner_->init(g);
  g_ = g;
  region_ = g.vertices();
  partition_ = Partition::single(g.vertices());
  flips_.emplace(partition_, cap_);
  mask_ = 0;
  moves_in_round_ = 0;
  finished_ = false;
  simulated_ = 0;
}

FlipSet PseudoFlipperAsFlipper::next(const Graph& local, const ConnectorMove& move) {
  finished_ = false;
  ++moves_in_round_;
  std::uint64_t target = moves_in_round_ < flips_->count() ? moves_in_round_ : 0;
  FlipSet out = flips_->flip_set(mask_ ^ target);
  mask_ = target;
  if (target == 0) {
    Vertex c = local.is_live(move.center) ? move.center : *local.vertices().first();
    region_ &= flip_ball(g_, partition_, 2 * radius_, c, cap_);
    Partition next = inner_->next(c, region_);
    if (!next.refines(partition_)) throw std::logic_error("simulated pseudo-flipper did not refine its partition");
    partition_ = std::move(next);
    flips_.emplace(partition_, cap_);
    moves_in_round_ = 0;
    finished_ = true;
    ++simulated_;
  }
  return out;
}

FlipSet ScriptedFlipper::next(const Graph&, const ConnectorMove&) {
  if (at_ >= moves_.size()) throw std::out_of_range("flipper script exhausted after " + std::to_string(at_) + " moves");
  last_steps_ = at_ < steps_.size() ? steps_[at_] : 0;
  return moves_[at_++];
}

VertexSet ScriptedSeparator::next(Vertex, const VertexSet&) {
  if (at_ >= picks_.size()) return {};
  return picks_[at_++];
}

}  // namespace flipper
