#include "flipper/predictor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace flipper {

std::size_t step_budget_factor_from_env(std::size_t fallback) {
  const char* raw = std::getenv("FLIPPER_STEP_BUDGET");
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0) return fallback;
  return static_cast<std::size_t>(value);
}

TraceCells trace_cells(const Graph& h, const RaisedPartition& p, const VertexSet& central, const VertexOrder& order,
                       StepBudget* budget) {
  TraceCells out;
  out.anchors = VertexSet(h.universe());
  for (Vertex a : p.anchors) out.anchors.insert(a);
  if (!central.is_subset_of(out.anchors)) throw std::invalid_argument("trace_cells: central vertex is not an anchor");
  out.central = central;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    std::map<std::vector<Vertex>, std::size_t> slot;
    for (Vertex v : p.parts[i]) {
      VertexSet trace = h.neighbors(v) & out.anchors;
      if (budget) budget->charge(h.row_words());
      auto [it, fresh] = slot.try_emplace(trace.to_vector(), out.cells.size());
      if (fresh) out.cells.push_back({p.anchors[i], trace, VertexSet(h.universe())});
      out.cells[it->second].members.insert(v);
    }
  }
  std::sort(out.cells.begin(), out.cells.end(), [&](const TraceCells::Cell& a, const TraceCells::Cell& b) {
    return order.rank(*order.min_of(a.members)) < order.rank(*order.min_of(b.members));
  });
  return out;
}

namespace {

template <typename Keep>
FlipSet pair_up(const TraceCells& t, Keep keep) {
  FlipSet out;
  for (std::size_t i = 0; i < t.cells.size(); ++i) {
    for (std::size_t j = i; j < t.cells.size(); ++j) {
      if (keep(t.cells[i], t.cells[j])) out.toggle(AtomicFlip(t.cells[i].members, t.cells[j].members));
    }
  }
  return out;
}

}  // namespace

FlipSet flips_odd_case(const TraceCells& t) {
  return pair_up(t, [&](const TraceCells::Cell& x, const TraceCells::Cell& y) {
    if (!t.central.contains(x.anchor) || !t.central.contains(y.anchor)) return false;
    return y.trace.contains(x.anchor) || x.trace.contains(y.anchor);
  });
}

FlipSet flips_even_case(const TraceCells& t) {
  return pair_up(t, [&](const TraceCells::Cell& x, const TraceCells::Cell& y) {
    return (t.central.contains(x.anchor) && y.trace.contains(x.anchor)) ||
           (t.central.contains(y.anchor) && x.trace.contains(y.anchor));
  });
}

FlipSet flips_for_radius(const TraceCells& t, std::size_t radius) {
  return radius % 2 == 1 ? flips_odd_case(t) : flips_even_case(t);
}

namespace {

std::size_t inner_radius(std::size_t r) { return (r + 1) / 2 - 1; }

void charge_flips(StepBudget& budget, const Graph& g, const FlipSet& flips) {
  for (const AtomicFlip& f : flips) budget.charge((f.first().count() + f.second().count()) * g.row_words());
}

struct Predictor {
  const Graph& g;
  const PredictConfig& cfg;
  std::vector<Vertex> z;  // in vertex order
  VertexSet zset;
  StepBudget& budget;
  std::vector<std::size_t>& cells_per_level;

  FlipSet level(std::size_t r) {
    if (r == 0) return {};
    FlipSet prev = level(r - 1);
    charge_flips(budget, g, prev);
    Graph h = apply_flip_set(g, prev);
    if (!is_distance_independent(h, zset, r - 1, &budget)) return {};
    if (is_distance_independent(h, zset, r, &budget)) return prev;
    std::size_t rr = inner_radius(r);
    std::vector<VertexSet> balls;
    VertexSet covered(g.universe());
    for (Vertex v : z) {
      balls.push_back(ball(h, v, rr, &budget));
      if (covered.intersects(balls.back())) return {};
      covered |= balls.back();
    }
    RaisedPartition parts = partition_from_five(h, balls, cfg.order, &budget);
    VertexSet central(g.universe());
    for (Vertex s : parts.anchors) {
      bool all = std::all_of(balls.begin(), balls.end(), [&](const VertexSet& b) { return h.neighbors(s).intersects(b); });
      if (all) central.insert(s);
    }
    TraceCells cells = trace_cells(h, parts, central, cfg.order, &budget);
    cells_per_level[r - 1] = cells.cells.size();
    FlipSet extra = flips_for_radius(cells, r);
    if (extra.size() > cfg.max_flips) throw BudgetExceeded("flip cap exceeded");
    return compose_flip_sets(prev, extra);
  }
};

}  // namespace

PredictTrace predict_traced(const Graph& g, const PredictConfig& cfg, const VertexSet& z) {
  PredictTrace out;
  out.cells_per_level.assign(cfg.radius, 0);
  if (!z.is_subset_of(g.vertices())) throw std::invalid_argument("predict: " + to_string(z - g.vertices()) + " not live");
  if (cfg.radius == 0 || z.count() < 5) return out;
  std::vector<Vertex> sorted = cfg.order.sorted(z);
  sorted.resize(5);
  VertexSet zset(g.universe());
  for (Vertex v : sorted) zset.insert(v);
  std::size_t n = std::max<std::size_t>(g.order(), 1);
  StepBudget budget(cfg.step_budget_factor * n * n);
  Predictor p{g, cfg, sorted, zset, budget, out.cells_per_level};
  try {
    out.flips = p.level(cfg.radius);
    if (out.flips.size() > cfg.max_flips) {
      out.flips = {};
      out.guard_tripped = true;
    }
  } catch (const BudgetExceeded&) {
    out.flips = {};
    out.guard_tripped = true;
  }
  out.steps = budget.used();
  return out;
}

FlipSet predict(const Graph& g, const PredictConfig& cfg, const VertexSet& z) { return predict_traced(g, cfg, z).flips; }

namespace {

// First subfamily (largest first) of at least five blobs whose centres are
// pairwise farther than r apart, or pairwise exactly r apart.
std::optional<std::pair<std::vector<std::size_t>, ReferenceLevel::Kind>> pick_spaced(
    const std::vector<std::vector<std::size_t>>& dist, std::size_t r) {
  std::size_t m = dist.size();
  std::optional<std::pair<std::vector<std::size_t>, ReferenceLevel::Kind>> best;
  for (std::size_t k = m; k >= 5 && !best; --k) {
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> pick;
      for (std::size_t i = 0; i < m; ++i)
        if (mask[i]) pick.push_back(i);
      bool far = true;
      bool exact = true;
      for (std::size_t a = 0; a < pick.size(); ++a) {
        for (std::size_t b = a + 1; b < pick.size(); ++b) {
          std::size_t d = dist[pick[a]][pick[b]];
          far = far && d > r;
          exact = exact && d == r;
        }
      }
      if (far || exact) {
        best.emplace(pick, far ? ReferenceLevel::Kind::far : ReferenceLevel::Kind::exact);
        break;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
  return best;
}

}  // namespace

std::optional<ReferenceResult> reference_flips(const Graph& g, const PredictConfig& cfg, const VertexSet& x,
                                               const ClassifierSearchLimits& limits) {
  if (!x.is_subset_of(g.vertices())) throw std::invalid_argument("reference_flips: set is not live");
  ReferenceResult res;
  res.y = x;
  res.levels.push_back({0, ReferenceLevel::Kind::base, x, std::nullopt});
  ClassifierSearchLimits lim = limits;
  lim.min_size = std::max<std::size_t>(lim.min_size, 5);
  for (std::size_t r = 1; r <= cfg.radius; ++r) {
    Graph h = apply_flip_set(g, res.flips);
    std::vector<Vertex> centers = cfg.order.sorted(res.y);
    if (centers.size() > lim.max_balls) centers.resize(lim.max_balls);
    std::size_t rr = inner_radius(r);
    std::vector<VertexSet> balls;
    for (Vertex c : centers) balls.push_back(ball(h, c, rr));
    auto found = search_classifier(h, balls, cfg.order, lim);
    if (!found) return std::nullopt;
    std::vector<Vertex> blob_center;
    for (const VertexSet& b : found->blobs) {
      auto it = std::find(balls.begin(), balls.end(), b);
      blob_center.push_back(centers[static_cast<std::size_t>(it - balls.begin())]);
    }
    std::vector<std::vector<std::size_t>> dist(blob_center.size(), std::vector<std::size_t>(blob_center.size(), 0));
    for (std::size_t i = 0; i < blob_center.size(); ++i)
      for (std::size_t j = 0; j < blob_center.size(); ++j)
        if (i != j) dist[i][j] = distance(h, blob_center[i], blob_center[j]);
    auto pick = pick_spaced(dist, r);
    if (!pick) return std::nullopt;
    VertexSet y(g.universe());
    for (std::size_t i : pick->first) y.insert(blob_center[i]);
    if (pick->second == ReferenceLevel::Kind::exact) {
      VertexSet central(g.universe());
      for (Vertex s : found->reps) {
        bool all = std::all_of(pick->first.begin(), pick->first.end(),
                               [&](std::size_t i) { return h.neighbors(s).intersects(found->blobs[i]); });
        if (all) central.insert(s);
      }
      TraceCells cells = trace_cells(h, raised_partition(h, *found), central, cfg.order);
      res.flips = compose_flip_sets(res.flips, flips_for_radius(cells, r));
    }
    res.y = y;
    res.levels.push_back({r, pick->second, y, found});
    if (!is_distance_independent(apply_flip_set(g, res.flips), y, r)) {
      throw std::logic_error("reference_flips: centres not independent at radius " + std::to_string(r));
    }
  }
  return res;
}

}  // namespace flipper
