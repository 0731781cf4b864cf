#include "flipper/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace flipper {

namespace {

std::string vtx(Vertex v) { return std::to_string(v); }

bool touches(const Graph& g, Vertex v, const VertexSet& blob) { return g.neighbors(v).intersects(blob); }

}  // namespace

std::optional<ClassifierViolation> validate_classifier(const Graph& g, const Classifier& c) {
  const VertexSet& live = g.vertices();
  VertexSet covered(g.universe());
  for (std::size_t i = 0; i < c.blobs.size(); ++i) {
    const VertexSet& b = c.blobs[i];
    if (b.empty()) return ClassifierViolation{'s', 0, i, "blob " + std::to_string(i) + " is empty"};
    if (!b.is_subset_of(live)) return ClassifierViolation{'s', *(b - live).first(), i, "blob holds a dead vertex"};
    if (covered.intersects(b)) {
      return ClassifierViolation{'s', *(covered & b).first(), i, "blobs overlap"};
    }
    covered |= b;
  }
  if (c.reps.empty()) return ClassifierViolation{'s', 0, std::nullopt, "no representatives"};
  if (!c.reps.is_subset_of(live)) return ClassifierViolation{'s', *(c.reps - live).first(), std::nullopt, "dead representative"};
  for (Vertex v : live) {
    if (v >= c.rep.size() || v >= c.exc.size()) {
      return ClassifierViolation{'s', v, std::nullopt, "vertex " + vtx(v) + " has no rep or exc entry"};
    }
    if (!c.reps.contains(c.rep[v])) {
      return ClassifierViolation{'s', v, std::nullopt, "rep of " + vtx(v) + " is not a representative"};
    }
    if (c.exc[v] && *c.exc[v] >= c.blobs.size()) {
      return ClassifierViolation{'s', v, c.exc[v], "exceptional blob index out of range"};
    }
  }
  for (Vertex s : c.reps) {
    if (c.rep[s] != s) return ClassifierViolation{'s', s, std::nullopt, "representative " + vtx(s) + " is not its own rep"};
  }

  if (c.reps.intersects(covered)) {
    Vertex s = *(c.reps & covered).first();
    return ClassifierViolation{'a', s, std::nullopt, "representative " + vtx(s) + " lies in a blob"};
  }
  for (Vertex s : c.reps) {
    std::size_t hit = 0;
    for (const VertexSet& b : c.blobs) hit += touches(g, s, b) ? 1 : 0;
    if (hit != 0 && hit != c.blobs.size()) {
      return ClassifierViolation{'b', s, std::nullopt, "representative " + vtx(s) + " meets some blobs but not all"};
    }
  }
  for (Vertex s : c.reps) {
    for (Vertex t : c.reps) {
      if (t <= s) continue;
      for (std::size_t i = 0; i < c.blobs.size(); ++i) {
        if (VertexSet::agree_on(g.neighbors(s), g.neighbors(t), c.blobs[i])) {
          return ClassifierViolation{'c', s, i, "representatives " + vtx(s) + " and " + vtx(t) + " agree on a blob"};
        }
      }
    }
  }
  for (std::size_t i = 0; i < c.blobs.size(); ++i) {
    for (Vertex v : c.blobs[i]) {
      if (c.exc[v] != i) return ClassifierViolation{'d', v, i, "vertex " + vtx(v) + " lies in a blob that is not its exception"};
    }
  }
  for (Vertex v : live) {
    for (std::size_t i = 0; i < c.blobs.size(); ++i) {
      if (c.exc[v] == i) continue;
      if (!VertexSet::agree_on(g.neighbors(v), g.neighbors(c.rep[v]), c.blobs[i])) {
        return ClassifierViolation{'e', v, i, "vertex " + vtx(v) + " differs from its rep outside its exception"};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> RaisedPartition::part_of(Vertex v) const {
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].contains(v)) return i;
  return std::nullopt;
}

RaisedPartition raised_partition(const Graph& g, const Classifier& c) {
  RaisedPartition out;
  std::vector<std::size_t> slot(g.universe(), kInfinity);
  for (Vertex s : c.reps) {
    slot[s] = out.parts.size();
    out.parts.emplace_back(g.universe());
    out.anchors.push_back(s);
  }
  for (Vertex v : g.vertices()) out.parts[slot[c.rep[v]]].insert(v);
  return out;
}

RaisedPartition partition_from_five(const Graph& g, std::span<const VertexSet> blobs, const VertexOrder& order,
                                    StepBudget* budget) {
  if (blobs.size() != 5) throw std::invalid_argument("partition_from_five needs exactly five blobs");
  for (std::size_t i = 0; i < blobs.size(); ++i)
    for (std::size_t j = i + 1; j < blobs.size(); ++j)
      if (blobs[i].intersects(blobs[j])) throw std::invalid_argument("partition_from_five: blobs overlap");
  RaisedPartition out;
  auto place = [&](Vertex v) {
    const VertexSet& nv = g.neighbors(v);
    for (std::size_t i = 0; i < out.anchors.size(); ++i) {
      const VertexSet& na = g.neighbors(out.anchors[i]);
      std::size_t agree = 0;
      for (const VertexSet& b : blobs) agree += VertexSet::agree_on(nv, na, b) ? 1 : 0;
      if (budget) budget->charge(blobs.size() * g.row_words());
      if (agree >= 3) {
        out.parts[i].insert(v);
        return;
      }
    }
    out.parts.emplace_back(g.universe());
    out.parts.back().insert(v);
    out.anchors.push_back(v);
  };
  if (order.is_identity()) {
    for (Vertex v : g.vertices()) place(v);
  } else {
    for (Vertex v : order.sequence())
      if (g.is_live(v)) place(v);
  }
  return out;
}

Classifier reselect_representatives(const Graph& g, const Classifier& c, const VertexSet& new_reps) {
  RaisedPartition parts = raised_partition(g, c);
  std::vector<Vertex> chosen(parts.parts.size(), 0);
  std::vector<bool> filled(parts.parts.size(), false);
  for (Vertex s : new_reps) {
    auto idx = parts.part_of(s);
    if (!idx) throw std::invalid_argument("reselect: " + vtx(s) + " is not live");
    if (filled[*idx]) throw std::invalid_argument("reselect: two new representatives in one part");
    filled[*idx] = true;
    chosen[*idx] = s;
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end()) {
    throw std::invalid_argument("reselect: some part has no new representative");
  }
  std::vector<bool> dropped(c.blobs.size(), false);
  for (Vertex s : new_reps)
    if (c.exc[s]) dropped[*c.exc[s]] = true;
  std::vector<std::optional<std::size_t>> remap(c.blobs.size());
  Classifier out;
  for (std::size_t i = 0; i < c.blobs.size(); ++i) {
    if (dropped[i]) continue;
    remap[i] = out.blobs.size();
    out.blobs.push_back(c.blobs[i]);
  }
  out.reps = new_reps;
  out.exc.assign(c.exc.size(), std::nullopt);
  out.rep.assign(c.rep.size(), 0);
  std::vector<std::size_t> part_of_rep(g.universe(), 0);
  for (std::size_t i = 0; i < parts.anchors.size(); ++i) part_of_rep[parts.anchors[i]] = i;
  for (Vertex v : g.vertices()) {
    if (c.exc[v]) out.exc[v] = remap[*c.exc[v]];
    out.rep[v] = chosen[part_of_rep[c.rep[v]]];
  }
  return out;
}

Classifier canonize(const Graph& g, const Classifier& c, const VertexOrder& order) {
  RaisedPartition parts = raised_partition(g, c);
  VertexSet mins(g.universe());
  for (const VertexSet& p : parts.parts) mins.insert(*order.min_of(p));
  return reselect_representatives(g, c, mins);
}

namespace {

// Visits k-subsets of [0, n) in lexicographic order until visit returns true.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Assigns rep and exc for a fixed blob family and representative list, or
// returns nothing when some vertex fits no representative.
std::optional<Classifier> assign(const Graph& g, const std::vector<VertexSet>& blobs, const std::vector<Vertex>& reps) {
  Classifier c;
  c.blobs = blobs;
  c.reps = VertexSet(g.universe());
  for (Vertex s : reps) c.reps.insert(s);
  c.exc.assign(g.universe(), std::nullopt);
  c.rep.assign(g.universe(), 0);
  std::vector<std::optional<std::size_t>> home(g.universe());
  for (std::size_t i = 0; i < blobs.size(); ++i)
    for (Vertex v : blobs[i]) home[v] = i;
  for (Vertex v : g.vertices()) {
    if (c.reps.contains(v)) {
      c.rep[v] = v;
      continue;
    }
    bool placed = false;
    for (Vertex s : reps) {
      std::optional<std::size_t> differs;
      bool ok = true;
      for (std::size_t i = 0; i < blobs.size() && ok; ++i) {
        if (VertexSet::agree_on(g.neighbors(v), g.neighbors(s), blobs[i])) continue;
        if (differs || (home[v] && *home[v] != i)) ok = false;
        differs = i;
      }
      if (!ok) continue;
      c.rep[v] = s;
      c.exc[v] = home[v] ? home[v] : differs;
      placed = true;
      break;
    }
    if (!placed) return std::nullopt;
  }
  return c;
}

}  // namespace

std::optional<Classifier> search_classifier(const Graph& g, std::span<const VertexSet> balls, const VertexOrder& order,
                                            const ClassifierSearchLimits& limits) {
  if (g.order() > limits.max_vertices) {
    throw std::invalid_argument("classifier search: " + std::to_string(g.order()) + " vertices exceeds the limit of " +
                                std::to_string(limits.max_vertices));
  }
  if (balls.size() > limits.max_balls) {
    throw std::invalid_argument("classifier search: " + std::to_string(balls.size()) + " balls exceeds the limit of " +
                                std::to_string(limits.max_balls));
  }
  StepBudget nodes(limits.node_cap);
  std::optional<Classifier> found;
  for (std::size_t k = balls.size() + 1; k-- > limits.min_size;) {
    bool done = for_each_combination(balls.size(), k, [&](const std::vector<std::size_t>& pick) {
      std::vector<VertexSet> blobs;
      VertexSet covered(g.universe());
      for (std::size_t i : pick) {
        if (covered.intersects(balls[i])) return false;
        covered |= balls[i];
        blobs.push_back(balls[i] & g.vertices());
        if (blobs.back().empty()) return false;
      }
      std::vector<Vertex> candidates = order.sorted(g.vertices() - covered);
      for (std::size_t size = 1; size <= limits.max_order; ++size) {
        bool hit = for_each_combination(candidates.size(), size, [&](const std::vector<std::size_t>& which) {
          nodes.charge(1);
          std::vector<Vertex> reps;
          for (std::size_t i : which) reps.push_back(candidates[i]);
          for (Vertex s : reps) {
            std::size_t meets = 0;
            for (const VertexSet& b : blobs) meets += touches(g, s, b) ? 1 : 0;
            if (meets != 0 && meets != blobs.size()) return false;
          }
          for (std::size_t x = 0; x < reps.size(); ++x)
            for (std::size_t y = x + 1; y < reps.size(); ++y)
              for (const VertexSet& b : blobs)
                if (VertexSet::agree_on(g.neighbors(reps[x]), g.neighbors(reps[y]), b)) return false;
          auto c = assign(g, blobs, reps);
          if (!c) return false;
          Classifier canon = canonize(g, *c, order);
          if (canon.size() < limits.min_size) return false;
          found = std::move(canon);
          return true;
        });
        if (hit) return true;
      }
      return false;
    });
    if (done) break;
  }
  return found;
}

}  // namespace flipper
