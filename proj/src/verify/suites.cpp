#include "verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "flipper/classifier.hpp"
#include "flipper/flip_metric.hpp"
#include "flipper/flips.hpp"
#include "flipper/game.hpp"
#include "flipper/generators.hpp"
#include "flipper/predictor.hpp"
#include "flipper/strategies.hpp"
#include "verify/instances.hpp"
#include "verify/oracle.hpp"

namespace flipper::verify {

void SuiteReport::fail(const std::string& message) {
  ++failures;
  if (messages.size() < 8) messages.push_back(message);
}

namespace {

using Clock = std::chrono::steady_clock;

bool coin(std::mt19937_64& rng) { return uniform_below(rng, 2) == 1; }

std::vector<Vertex> random_members(const VertexSet& from, std::size_t k, std::mt19937_64& rng) {
  std::vector<Vertex> pool = from.to_vector();
  for (std::size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[uniform_below(rng, i)]);
  pool.resize(std::min(k, pool.size()));
  return pool;
}

VertexSet set_of(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

// Random flip set made of pairs of parts of p.
FlipSet random_partition_flip(const Partition& p, unsigned percent, std::mt19937_64& rng) {
  FlipSet out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i; j < p.size(); ++j)
      if (uniform_below(rng, 100) < percent) out.toggle(AtomicFlip(p[i], p[j]));
  return out;
}

template <typename Visit>
void for_each_subset_of_size(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) pick.push_back(i);
    visit(pick);
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

struct Timer {
  SuiteReport& report;
  Clock::time_point start = Clock::now();
  ~Timer() { report.seconds = std::chrono::duration<double>(Clock::now() - start).count(); }
};

}  // namespace

SuiteReport flips_suite(const SuiteOptions& opt) {
  SuiteReport rep{"flips"};
  Timer timer{rep};
  std::mt19937_64 rng(opt.seed);
  std::size_t count = opt.count ? opt.count : 500;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = 1 + uniform_below(rng, 50);
    Graph g = random_graph(n, 5 + unsigned(uniform_below(rng, 60)), rng());
    if (coin(rng)) {
      VertexSet keep = random_subset(g.vertices(), 80, rng);
      if (!keep.empty()) g = g.induced(keep);
    }
    VertexSet all = VertexSet::full(n);
    auto random_flip = [&] {
      VertexSet a = random_subset(all, unsigned(uniform_below(rng, 60)), rng);
      if (uniform_below(rng, 5) == 0) return AtomicFlip(a, a);
      return AtomicFlip(a, random_subset(all, unsigned(uniform_below(rng, 60)), rng));
    };
    AtomicFlip f[3] = {random_flip(), random_flip(), random_flip()};
    std::vector<std::string> broken;

    for (const AtomicFlip& x : f)
      if (!(apply_atomic_flip(apply_atomic_flip(g, x), x) == g)) broken.push_back("involution");
    if (!(AtomicFlip(f[0].second(), f[0].first()) == f[0])) broken.push_back("canonical form");

    int order[3] = {0, 1, 2};
    Graph reference = apply_atomic_flip(apply_atomic_flip(apply_atomic_flip(g, f[0]), f[1]), f[2]);
    do {
      Graph h = apply_atomic_flip(apply_atomic_flip(apply_atomic_flip(g, f[order[0]]), f[order[1]]), f[order[2]]);
      if (!(h == reference)) broken.push_back("order dependence");
    } while (std::next_permutation(order, order + 3));

    FlipSet all3{f[0], f[1], f[2]};
    oracle::MatrixGraph m = oracle::MatrixGraph::from(g);
    for (const AtomicFlip& x : all3) oracle::flip(m, x.first().to_vector(), x.second().to_vector());
    if (!m.same_as(apply_flip_set(g, all3))) broken.push_back("oracle mismatch");

    FlipSet f1{f[0], f[1]};
    FlipSet f2{f[1], f[2]};
    if (!(apply_flip_set(apply_flip_set(g, f1), f2) == apply_flip_set(g, compose_flip_sets(f1, f2)))) {
      broken.push_back("composition");
    }

    VertexSet w = random_subset(g.vertices(), 60, rng);
    if (!(apply_flip_set(g, all3).induced(w) == apply_flip_set(g.induced(w), all3))) broken.push_back("restriction");

    ++rep.cases;
    if (!broken.empty()) rep.fail("instance " + std::to_string(i) + ": " + broken.front());
  }
  return rep;
}

SuiteReport s_classes_suite(const SuiteOptions& opt) {
  SuiteReport rep{"s_classes"};
  Timer timer{rep};
  std::mt19937_64 rng(opt.seed);
  std::size_t count = opt.count ? opt.count : 200;
  std::size_t oracle_checks = 0;
  std::size_t merged = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = 1 + uniform_below(rng, 30);
    Graph g = random_graph(n, 10 + unsigned(uniform_below(rng, 70)), rng());
    std::size_t k = uniform_below(rng, 5);
    VertexSet s = set_of(n, random_members(g.vertices(), k, rng));
    k = s.count();
    std::vector<std::string> broken;

    Partition p = s_classes(g, s);
    if (p.size() > k + (std::size_t{1} << k)) broken.push_back("too many classes");
    oracle::MatrixGraph m = oracle::MatrixGraph::from(g);
    if (oracle::parts_of(p) != oracle::s_classes(m, s.to_vector())) broken.push_back("oracle mismatch");

    Graph g1 = apply_flip_set(g, random_partition_flip(p, 30, rng));
    // Twins stay twins; two classes may still merge.
    if (!p.refines(s_classes(g1, s))) broken.push_back("classes not preserved");
    if (s_classes(g1, s).size() != p.size()) ++merged;
    if (!is_partition_flip_of(g, g1, p)) broken.push_back("not recognised as a flip");

    VertexSet t = set_of(n, random_members(g.vertices(), 1 + uniform_below(rng, 2), rng));
    Graph g2 = apply_flip_set(g1, random_partition_flip(s_classes(g1, t), 30, rng));
    if (!is_partition_flip_of(g, g2, s_classes(g, s | t))) broken.push_back("transitivity");

    VertexSet x = s | random_subset(g.vertices(), 60, rng);
    if (!x.empty() && !is_partition_flip_of(g.induced(x), g1.induced(x), s_classes(g.induced(x), s))) {
      broken.push_back("heredity");
    }

    if (p.size() <= 4 && n <= 16) {
      ++oracle_checks;
      auto parts = oracle::parts_of(p);
      if (!oracle::is_partition_flip(m, oracle::MatrixGraph::from(g1), parts)) broken.push_back("oracle rejects flip");
      if (n >= 2) {
        Graph g3 = g1;
        VertexSet a(n, {0});
        VertexSet b(n, {1});
        g3.toggle_between(a, b);
        bool mine = is_partition_flip_of(g, g3, p);
        bool theirs = oracle::is_partition_flip(m, oracle::MatrixGraph::from(g3), parts);
        if (mine != theirs) broken.push_back("flip recognition disagrees with oracle");
      }
    }
    ++rep.cases;
    if (!broken.empty()) rep.fail("instance " + std::to_string(i) + ": " + broken.front());
  }
  rep.metrics["oracle_checks"] = double(oracle_checks);
  rep.metrics["merged_classes"] = double(merged);
  return rep;
}

SuiteReport metric_suite(const SuiteOptions& opt) {
  SuiteReport rep{"metric"};
  Timer timer{rep};
  std::mt19937_64 rng(opt.seed);
  std::size_t max_n = opt.count ? opt.count : 8;
  std::size_t graphs = 0;
  std::size_t sampled = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (const Graph& g : oracle::graphs_up_to_isomorphism(n)) {
      ++graphs;
      for (int rep_i = 0; rep_i < 3; ++rep_i) {
        std::size_t parts = 1 + uniform_below(rng, std::min<std::size_t>(3, n));
        std::vector<VertexSet> blocks(parts, VertexSet(n));
        std::vector<Vertex> perm = random_members(g.vertices(), n, rng);
        for (std::size_t i = 0; i < n; ++i) blocks[i < parts ? i : uniform_below(rng, parts)].insert(perm[i]);
        Partition p(blocks);
        auto d = flip_distance_matrix(g, p);
        std::vector<std::string> broken;
        for (Vertex u : g.vertices()) {
          if (d[u][u] != 0) broken.push_back("nonzero self distance");
          for (Vertex v : g.vertices()) {
            if (d[u][v] != d[v][u]) broken.push_back("asymmetric");
            if (u != v && d[u][v] < 2) broken.push_back("distinct vertices closer than 2");
            for (Vertex w : g.vertices()) {
              if (d[u][v] == kInfinity || d[v][w] == kInfinity) continue;
              if (d[u][w] > d[u][v] + d[v][w]) broken.push_back("triangle inequality");
            }
          }
        }
        if (uniform_below(rng, 40) == 0) {
          ++sampled;
          auto ref = oracle::flip_distances(oracle::MatrixGraph::from(g), oracle::parts_of(p));
          if (ref != d) broken.push_back("oracle mismatch");
          Vertex c = Vertex(uniform_below(rng, n));
          for (std::size_t r = 1; r <= 3; ++r) {
            VertexSet expect(n);
            for (Vertex w : g.vertices())
              if (d[c][w] <= r) expect.insert(w);
            if (!(flip_ball(g, p, r, c) == expect)) broken.push_back("flip ball");
          }
          Vertex other = Vertex(uniform_below(rng, n));
          if (flip_distance(g, p, c, other) != d[c][other]) broken.push_back("pairwise distance");
        }
        ++rep.cases;
        if (!broken.empty()) rep.fail("graph on " + std::to_string(n) + " vertices: " + broken.front());
      }
    }
  }
  rep.metrics["graphs"] = double(graphs);
  rep.metrics["oracle_samples"] = double(sampled);

  std::size_t pairs = 0;
  std::size_t positive = 0;
  while (pairs < 100) {
    std::size_t n = 3 + uniform_below(rng, 7);
    Graph g = random_graph(n, 20 + unsigned(uniform_below(rng, 50)), rng());
    VertexSet s = set_of(n, random_members(g.vertices(), 1 + uniform_below(rng, 2), rng));
    VertexSet t = random_subset(s, 50, rng);
    Partition ps = s_classes(g, s);
    if (ps.size() > 5) continue;
    Partition pt = s_classes(g, t);
    std::vector<Vertex> ab = random_members(g.vertices(), 1 + uniform_below(rng, 3), rng);
    if (ab.size() < 2) continue;
    VertexSet a(n, {ab[0]});
    VertexSet b = set_of(n, std::vector<Vertex>(ab.begin() + 1, ab.end()));
    std::size_t r = 1 + uniform_below(rng, 3);
    ++pairs;
    ++rep.cases;
    Separation by_t = is_r_separated(g, pt, r, a, b);
    Separation by_s = is_r_separated(g, ps, r, a, b);
    std::vector<std::string> broken;
    if (by_t.separated) {
      ++positive;
      if (!by_s.separated) broken.push_back("refinement lost separation");
    }
    if (by_s.separated) {
      Graph h = apply_flip_set(g, *by_s.witness);
      if (ball(h, a, r).intersects(b)) broken.push_back("witness leaves a short path");
      if (!is_partition_flip_of(g, h, ps)) broken.push_back("witness is not a partition flip");
      for (Vertex x : a)
        for (Vertex y : b)
          if (flip_distance(g, ps, x, y) <= r) broken.push_back("set separation without pointwise separation");
    }
    if (!broken.empty()) rep.fail("refinement pair " + std::to_string(pairs) + ": " + broken.front());
  }
  rep.metrics["refinement_pairs"] = double(pairs);
  rep.metrics["refinement_positive"] = double(positive);
  return rep;
}

SuiteReport classifier_suite(const SuiteOptions& opt) {
  SuiteReport rep{"classifier"};
  Timer timer{rep};
  std::mt19937_64 rng(opt.seed);
  std::size_t target = opt.count ? opt.count : 30;
  std::size_t attempts = 0;
  std::size_t five_blob_checks = 0;
  while (rep.cases < target && attempts < 50 * target) {
    ++attempts;
    PlantedClassifier planted = planted_classifier(rng(), 14);
    const Graph& g = planted.graph;
    if (auto bad = validate_classifier(g, planted.classifier)) {
      rep.fail("planted classifier invalid (" + std::string(1, bad->condition) + "): " + bad->message);
      continue;
    }
    VertexOrder order = coin(rng) ? VertexOrder() : random_order(g.universe(), rng);
    std::vector<VertexSet> first_five(planted.classifier.blobs.begin(), planted.classifier.blobs.begin() + 5);
    if (!(partition_from_five(g, first_five, order).as_partition() ==
          raised_partition(g, planted.classifier).as_partition())) {
      rep.fail("five planted blobs do not recover the planted partition");
    }
    ClassifierSearchLimits limits;
    limits.min_size = 5;
    auto found = search_classifier(g, planted.classifier.blobs, order, limits);
    if (!found) continue;
    ++rep.cases;
    std::vector<std::string> broken;
    if (auto bad = validate_classifier(g, *found)) broken.push_back(std::string("search result invalid: ") + bad->message);
    RaisedPartition raised = raised_partition(g, *found);
    for (std::size_t i = 0; i < raised.parts.size(); ++i)
      if (order.min_of(raised.parts[i]) != raised.anchors[i]) broken.push_back("not canonical");
    Partition target_parts = raised.as_partition();
    for_each_subset_of_size(found->size(), 5, [&](const std::vector<std::size_t>& pick) {
      std::vector<VertexSet> five;
      for (std::size_t i : pick) five.push_back(found->blobs[i]);
      RaisedPartition rebuilt = partition_from_five(g, five, order);
      ++five_blob_checks;
      if (!(rebuilt.as_partition() == target_parts)) broken.push_back("five blobs give a different partition");
      if (!(set_of(g.universe(), rebuilt.anchors) == found->reps)) broken.push_back("anchors differ from representatives");
    });
    for (Vertex u : g.vertices()) {
      for (Vertex v : g.vertices()) {
        std::size_t agree = 0;
        for (const VertexSet& b : found->blobs) agree += VertexSet::agree_on(g.neighbors(u), g.neighbors(v), b) ? 1 : 0;
        bool same = raised.part_of(u) == raised.part_of(v);
        if (same != (agree >= 3) || same != (found->size() - agree <= 2)) broken.push_back("three-way equivalence");
      }
    }
    VertexSet fresh(g.universe());
    for (const VertexSet& part : raised.parts) fresh.insert(random_members(part, 1, rng).front());
    Classifier moved = reselect_representatives(g, *found, fresh);
    if (auto bad = validate_classifier(g, moved)) broken.push_back("reselected classifier invalid: " + bad->message);
    if (moved.size() + found->order() < found->size()) broken.push_back("reselection dropped too many blobs");
    if (!(raised_partition(g, moved).as_partition() == target_parts)) broken.push_back("reselection changed the partition");
    if (!broken.empty()) rep.fail("classifier " + std::to_string(rep.cases) + ": " + broken.front());
  }
  rep.metrics["attempts"] = double(attempts);
  rep.metrics["five_blob_checks"] = double(five_blob_checks);
  if (rep.cases < target) rep.fail("only " + std::to_string(rep.cases) + " classifiers found");
  return rep;
}

SuiteReport construction_suite(const SuiteOptions& opt) {
  SuiteReport rep{"construction"};
  Timer timer{rep};
  std::mt19937_64 rng(opt.seed);
  std::size_t target = opt.count ? opt.count : 20;
  const std::vector<std::size_t> radii = {2, 3, 4, 5};
  std::size_t per_radius = (target + radii.size() - 1) / radii.size();
  for (std::size_t r : radii) {
    std::size_t found_here = 0;
    std::size_t nontrivial = 0;
    for (std::size_t attempt = 0; attempt < 100 * per_radius && found_here < per_radius; ++attempt) {
      // Canonizing can drop a blob, so extra legs leave room above five.
      auto inst = spaced_instance(r, rng(), 26, 5 + uniform_below(rng, 3));
      if (!inst) continue;
      const Graph& g = inst->graph;
      VertexOrder order = coin(rng) ? VertexOrder() : random_order(g.universe(), rng);
      ClassifierSearchLimits limits;
      limits.min_size = 5;
      limits.max_vertices = 26;
      auto c = search_classifier(g, inst->balls, order, limits);
      if (!c) continue;
      ++found_here;
      ++rep.cases;
      std::vector<std::string> broken;
      VertexSet y(g.universe());
      for (const VertexSet& b : c->blobs) {
        auto it = std::find(inst->balls.begin(), inst->balls.end(), b);
        y.insert(inst->centers[std::size_t(it - inst->balls.begin())]);
      }
      VertexSet central(g.universe());
      for (Vertex s : c->reps) {
        bool all = std::all_of(c->blobs.begin(), c->blobs.end(), [&](const VertexSet& b) { return g.neighbors(s).intersects(b); });
        if (all) central.insert(s);
      }
      RaisedPartition raised = raised_partition(g, *c);
      FlipSet f = flips_for_radius(trace_cells(g, raised, central, order), r);
      if (!f.empty()) ++nontrivial;
      Graph h = apply_flip_set(g, f);
      if (!is_distance_independent(h, y, r)) broken.push_back("centres still within distance r");
      for (Vertex u : g.vertices()) {
        for (Vertex v : g.vertices()) {
          if (u >= v) continue;
          bool flipped = g.adjacent(u, v) != h.adjacent(u, v);
          Vertex au = raised.anchors[*raised.part_of(u)];
          Vertex av = raised.anchors[*raised.part_of(v)];
          bool v_sees = g.adjacent(au, v);
          bool u_sees = g.adjacent(av, u);
          bool expect = r % 2 == 1 ? central.contains(au) && central.contains(av) && (v_sees || u_sees)
                                   : (central.contains(au) && v_sees) || (central.contains(av) && u_sees);
          if (flipped != expect) broken.push_back("flip semantics");
        }
      }
      PredictConfig cfg;
      cfg.radius = r;
      cfg.order = order;
      if (y.count() == 5 && !(predict(g, cfg, y) == f)) broken.push_back("predict disagrees with the construction");
      if (!broken.empty()) rep.fail("radius " + std::to_string(r) + ": " + broken.front());
    }
    rep.metrics["instances/r" + std::to_string(r)] = double(found_here);
    rep.metrics["nontrivial/r" + std::to_string(r)] = double(nontrivial);
    if (found_here < per_radius) rep.fail("radius " + std::to_string(r) + ": only " + std::to_string(found_here) + " instances");
  }
  return rep;
}

SuiteReport predictability_suite(const SuiteOptions& opt) {
  SuiteReport rep{"predictability"};
  Timer timer{rep};
  std::mt19937_64 rng(opt.seed);
  std::size_t target = opt.count ? opt.count : 25;
  std::size_t nontrivial = 0;
  std::size_t subsets = 0;
  std::size_t attempts = 0;
  ClassifierSearchLimits limits;
  limits.min_size = 5;
  limits.max_vertices = 20;
  while (rep.cases < target && attempts < 200 * target) {
    ++attempts;
    Graph g;
    VertexSet x;
    std::size_t r = 0;
    if (attempts % 2 == 0) {
      r = 1 + uniform_below(rng, 5);
      std::size_t legs = r <= 3 ? 5 + uniform_below(rng, 3) : 5;
      auto inst = spaced_instance(r, rng(), 20, legs);
      if (!inst) continue;
      g = inst->graph;
      x = set_of(g.universe(), inst->centers);
      if (coin(rng)) x.insert(Vertex(uniform_below(rng, g.universe())));
    } else {
      r = 1 + uniform_below(rng, 3);
      std::size_t n = 8 + uniform_below(rng, 5);
      g = random_graph(n, 15 + unsigned(uniform_below(rng, 70)), rng());
      x = set_of(n, random_members(g.vertices(), 6 + uniform_below(rng, 3), rng));
    }
    PredictConfig cfg;
    cfg.radius = r;
    cfg.order = coin(rng) ? VertexOrder() : random_order(g.universe(), rng);
    std::optional<ReferenceResult> res;
    try {
      res = reference_flips(g, cfg, x, limits);
    } catch (const std::logic_error& e) {
      rep.fail(e.what());
      continue;
    }
    if (!res || res->y.count() < 5) continue;
    ++rep.cases;
    if (!res->flips.empty()) ++nontrivial;
    std::vector<std::string> broken;
    if (!is_distance_independent(apply_flip_set(g, res->flips), res->y, r)) broken.push_back("result not independent");
    std::vector<Vertex> y = res->y.to_vector();
    for_each_subset_of_size(y.size(), 5, [&](const std::vector<std::size_t>& pick) {
      VertexSet z(g.universe());
      for (std::size_t i : pick) z.insert(y[i]);
      ++subsets;
      PredictTrace p = predict_traced(g, cfg, z);
      if (p.guard_tripped) broken.push_back("guard tripped");
      if (!(p.flips == res->flips)) broken.push_back("prediction differs on " + to_string(z));
    });
    if (!broken.empty()) rep.fail("radius " + std::to_string(r) + ": " + broken.front());
  }
  rep.metrics["attempts"] = double(attempts);
  rep.metrics["nontrivial"] = double(nontrivial);
  rep.metrics["subsets"] = double(subsets);
  if (rep.cases < target) rep.fail("only " + std::to_string(rep.cases) + " instances found");
  return rep;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

SuiteReport strategy_suite(const StrategyOptions& opt) {
  SuiteReport rep{"strategy"};
  Timer timer{rep};
  std::vector<std::string> families = opt.families.empty() ? sized_families() : opt.families;
  const std::vector<std::string> connectors = {"random", "greedy_survivor", "farthest_from_played", "scripted"};
  for (const std::string& family : families) {
    for (std::size_t r : opt.radii) {
      for (std::size_t n : opt.sizes) {
        Graph g = generate_family(family, n, opt.seed);
        GameConfig gc;
        gc.variant = Variant::flipper;
        gc.radius = r;
        gc.max_rounds = opt.max_rounds;
        PredictConfig pc;
        pc.radius = 2 * r;
        pc.step_budget_factor = step_budget_factor_from_env();
        gc.schedule = MoveSchedule::growing(pc.max_flips);
        Game game(g, gc);
        std::size_t worst = 0;
        std::vector<ConnectorMove> script;
        for (const std::string& kind : connectors) {
          std::unique_ptr<ConnectorStrategy> con;
          std::uint64_t cseed = opt.seed * 7919 + n;
          if (kind == "scripted") {
            con = std::make_unique<ScriptedConnector>(script);
          } else {
            con = make_connector(kind, cseed);
          }
          FlipStar star(pc);
          std::vector<std::string> broken;
          auto observe = [&](const RoundRecord&, const Position& pos) {
            const FlipStar::MoveInfo& info = star.last_move();
            if (info.second_half && !(pos.arena == g.induced(pos.arena.vertices()))) {
              broken.push_back("arena not induced after a move pair");
            }
            if (info.isolation && !info.second_half) {
              for (Vertex x : star.tracked())
                if (pos.arena.is_live(x) && pos.arena.degree(x) != 0) broken.push_back("tracked vertex not isolated");
            }
          };
          Transcript t = run_game(game, star, *con, observe);
          if (kind == "random") {
            // The scripted run replays a second random connector's moves.
            RandomConnector other(cseed + 1);
            FlipStar again(pc);
            Transcript source = run_game(game, again, other);
            script.clear();
            for (const RoundRecord& rec : source.rounds) script.push_back(rec.connector);
          }
          if (t.outcome.kind != OutcomeKind::flipper_wins) {
            broken.push_back(std::string("did not win: ") + std::string(outcome_name(t.outcome.kind)) + " " + t.outcome.reason);
          }
          const auto& eras = star.pairs_per_era();
          for (std::size_t i = 0; i < eras.size(); ++i) {
            if (eras[i] != binomial(i, 5) + 1) broken.push_back("era " + std::to_string(i + 1) + " pair count");
          }
          worst = std::max(worst, t.outcome.round);
          ++rep.cases;
          if (!broken.empty()) {
            rep.fail(family + " n=" + std::to_string(n) + " r=" + std::to_string(r) + " vs " + kind + ": " + broken.front());
          }
        }
        rep.metrics["rounds/" + family + "/r" + std::to_string(r) + "/n" + std::to_string(n)] = double(worst);
      }
      // Rounds to win must not grow from the second size to the largest.
      if (opt.sizes.size() >= 2) {
        std::string key = "rounds/" + family + "/r" + std::to_string(r) + "/n";
        double early = rep.metrics[key + std::to_string(opt.sizes[1])];
        double late = rep.metrics[key + std::to_string(opt.sizes.back())];
        if (late > early) {
          rep.fail(family + " r=" + std::to_string(r) + ": rounds grew from " + std::to_string(std::size_t(early)) +
                   " to " + std::to_string(std::size_t(late)));
        }
      }
    }
  }
  return rep;
}

namespace {

// Passes moves through and keeps a copy of every answer.
class RecordingFlipper : public FlipperStrategy {
 public:
  RecordingFlipper(std::unique_ptr<FlipperStrategy> inner, std::vector<FlipSet>* log)
      : inner_(std::move(inner)), log_(log) {}
  void init(const Graph& g) override { inner_->init(g); }
  FlipSet next(const Graph& local, const ConnectorMove& move) override {
    FlipSet f = inner_->next(local, move);
    log_->push_back(f);
    return f;
  }

 private:
  std::unique_ptr<FlipperStrategy> inner_;
  std::vector<FlipSet>* log_;
};

}  // namespace

SuiteReport wrapper_suite(const SuiteOptions& opt) {
  SuiteReport rep{"wrapper"};
  Timer timer{rep};
  std::size_t runs = opt.count ? opt.count : 10;
  const std::size_t k = 32;
  const std::size_t r = 1;
  const std::vector<std::string> families = {"random_tree", "bounded_degree_random", "grid"};
  std::size_t compared = 0;
  for (std::size_t s = 0; s < runs; ++s) {
    std::uint64_t seed = opt.seed + s;
    Graph g = generate_family(families[s % families.size()], 24, seed);
    PredictConfig pc;
    pc.radius = 2 * r;
    pc.max_flips = k;

    std::vector<FlipSet> wrapped_log;
    SingleFlipAdapter adapter(std::make_unique<RecordingFlipper>(std::make_unique<FlipStar>(pc), &wrapped_log), k);
    GameConfig wc;
    wc.variant = Variant::flipper;
    wc.radius = r;
    wc.max_rounds = 400 * k;
    wc.schedule = MoveSchedule::constant(1);
    Game wgame(g, wc);
    RandomConnector con(seed);
    Transcript tw = run_game(wgame, adapter, con);
    std::vector<Position> wpos = replay(wgame, tw);
    std::vector<std::string> broken;
    if (tw.outcome.kind != OutcomeKind::flipper_wins) broken.push_back("wrapped run did not win");
    if (adapter.widest_answer() > k) broken.push_back("inner answer wider than the padding");

    std::vector<ConnectorMove> script;
    for (std::size_t j = 0; j < tw.rounds.size(); j += k) {
      Vertex c = tw.rounds[j].connector.center;
      script.push_back({c, ball(wpos[j].arena, c, r)});
    }
    std::vector<FlipSet> inner_log;
    RecordingFlipper inner(std::make_unique<FlipStar>(pc), &inner_log);
    GameConfig ic;
    ic.variant = Variant::induced_subgraph;
    ic.radius = r;
    ic.max_rounds = script.size();
    ic.schedule = MoveSchedule::growing(k);
    Game igame(g, ic);
    ScriptedConnector scripted(script);
    Transcript ti = run_game(igame, inner, scripted);
    if (ti.outcome.kind == OutcomeKind::flipper_forfeit) broken.push_back("inner run forfeited: " + ti.outcome.reason);
    std::vector<Position> ipos = replay(igame, ti);
    for (std::size_t i = 0; i < ipos.size() && i * k < wpos.size(); ++i) {
      ++compared;
      const Graph& small = wpos[i * k].arena;
      const Graph& big = ipos[i].arena;
      if (!small.vertices().is_subset_of(big.vertices()) || !(small == big.induced(small.vertices()))) {
        broken.push_back("wrapped arena after " + std::to_string(i * k) + " rounds is not induced in inner arena " +
                         std::to_string(i));
      }
    }
    std::size_t common = std::min(wrapped_log.size(), inner_log.size());
    for (std::size_t i = 0; i < common; ++i)
      if (!(wrapped_log[i] == inner_log[i])) broken.push_back("inner strategies diverged at call " + std::to_string(i));
    ++rep.cases;
    if (!broken.empty()) rep.fail("seed " + std::to_string(seed) + ": " + broken.front());
  }
  rep.metrics["compared_positions"] = double(compared);
  return rep;
}

SuiteReport translation_suite(const SuiteOptions& opt) {
  SuiteReport rep{"translation"};
  Timer timer{rep};
  std::mt19937_64 rng(opt.seed);
  std::size_t sep_games = opt.count ? opt.count : 20;
  std::size_t flip_games = opt.count ? (opt.count + 1) / 2 : 10;

  for (std::size_t game_i = 0; game_i < sep_games; ++game_i) {
    std::size_t n = 5 + uniform_below(rng, 6);
    Graph g = random_graph(n, 25 + unsigned(uniform_below(rng, 40)), rng());
    std::size_t r = 1 + uniform_below(rng, 2);
    std::vector<VertexSet> picks;
    VertexSet chosen(n);
    for (std::size_t i = 0; i < 6; ++i) {
      Vertex v = Vertex(uniform_below(rng, n));
      if (s_classes(g, chosen | VertexSet(n, {v})).size() <= 5) {
        chosen.insert(v);
        picks.push_back(VertexSet(n, {v}));
      } else {
        picks.push_back(VertexSet(n));
      }
    }
    GameConfig sc;
    sc.variant = Variant::separation;
    sc.radius = r;
    sc.max_rounds = 6;
    Game sgame(g, sc);
    ScriptedSeparator sep(picks);
    RandomConnector con(rng());
    Transcript ts = run_game(sgame, sep, con);
    std::vector<ConnectorMove> centers;
    for (const RoundRecord& rec : ts.rounds) centers.push_back(rec.connector);

    GameConfig pc;
    pc.variant = Variant::pseudo_flipper;
    pc.radius = r;
    pc.max_rounds = ts.rounds.size();
    pc.schedule = MoveSchedule::unbounded();
    Game pgame(g, pc);
    SeparatorAsPseudoFlipper pf(std::make_unique<ScriptedSeparator>(picks));
    ScriptedConnector replay_con(centers);
    std::vector<std::string> broken;
    std::size_t previous = 1;
    auto observe = [&](const RoundRecord& rec, const Position& pos) {
      if (!(pos.partition == s_classes(g, pf.picks()))) broken.push_back("partition is not the classes of the picks");
      if (pos.partition.size() - previous > previous + 1) broken.push_back("too many splits in one round");
      if (rec.round == 1 && !picks.front().empty()) {
        Vertex v = *picks.front().first();
        std::vector<VertexSet> expect = {VertexSet(n, {v}), g.neighbors(v), g.vertices() - g.neighbors(v)};
        expect[2].erase(v);
        std::erase_if(expect, [](const VertexSet& s) { return s.empty(); });
        if (!(pos.partition == Partition(expect))) broken.push_back("first round classes");
      }
      previous = pos.partition.size();
    };
    Transcript tp = run_game(pgame, pf, replay_con, observe);
    if (tp.rounds.size() != ts.rounds.size()) broken.push_back("games have different lengths");
    auto spos = replay(sgame, ts);
    auto ppos = replay(pgame, tp);
    for (std::size_t i = 0; i < std::min(spos.size(), ppos.size()); ++i)
      if (!(spos[i].region == ppos[i].region)) broken.push_back("regions differ in round " + std::to_string(i));
    ++rep.cases;
    if (!broken.empty()) rep.fail("separation game " + std::to_string(game_i) + ": " + broken.front());
  }

  std::size_t finished_rounds = 0;
  std::size_t wins = 0;
  std::size_t longest = 0;
  for (std::size_t game_i = 0; game_i < flip_games; ++game_i) {
    std::size_t n = 4 + uniform_below(rng, 5);
    Graph g = random_graph(n, 30 + unsigned(uniform_below(rng, 40)), rng());
    const std::size_t r = 1;
    std::vector<VertexSet> picks = {VertexSet(n, {Vertex(uniform_below(rng, n))})};
    Vertex second = Vertex(uniform_below(rng, n));
    if (s_classes(g, picks.front() | VertexSet(n, {second})).size() <= 4) picks.push_back(VertexSet(n, {second}));
    auto strategy = std::make_unique<PseudoFlipperAsFlipper>(
        std::make_unique<SeparatorAsPseudoFlipper>(std::make_unique<ScriptedSeparator>(picks)), r);
    PseudoFlipperAsFlipper& sim = *strategy;
    GameConfig fc;
    fc.variant = Variant::flipper;
    fc.radius = r;
    fc.max_rounds = 3000;
    fc.schedule = MoveSchedule::unbounded();
    Game fgame(g, fc);
    RandomConnector con(rng());
    std::vector<std::string> broken;
    std::size_t moves = 0;
    bool first_round_checked = false;
    auto observe = [&](const RoundRecord&, const Position& pos) {
      ++moves;
      if (!sim.round_finished()) return;
      ++finished_rounds;
      if (!first_round_checked) {
        first_round_checked = true;
        if (moves != 2) broken.push_back("first simulated round took " + std::to_string(moves) + " moves");
      }
      if (!pos.arena.vertices().is_subset_of(sim.region())) broken.push_back("arena escapes the simulated region");
      if (!(pos.arena == g.induced(pos.arena.vertices()))) broken.push_back("arena not induced at round end");
    };
    Transcript t = run_game(fgame, sim, con, observe);
    if (t.outcome.kind == OutcomeKind::flipper_forfeit) broken.push_back("forfeit: " + t.outcome.reason);
    if (t.outcome.kind == OutcomeKind::flipper_wins) ++wins;
    longest = std::max(longest, t.rounds.size());
    ++rep.cases;
    if (!broken.empty()) rep.fail("flipper game " + std::to_string(game_i) + ": " + broken.front());
  }
  rep.metrics["simulated_rounds"] = double(finished_rounds);
  rep.metrics["flipper_wins"] = double(wins);
  rep.metrics["longest_game"] = double(longest);
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"flips",    "s_classes", "metric",       "classifier",
                                                 "predict",  "strategy",  "wrapper",      "translations"};
  return names;
}

std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "flips") return {flips_suite(opt)};
  if (name == "s_classes") return {s_classes_suite(opt)};
  if (name == "metric") return {metric_suite(opt)};
  if (name == "classifier") return {classifier_suite(opt)};
  if (name == "predict") return {construction_suite(opt), predictability_suite(opt)};
  if (name == "strategy") {
    StrategyOptions so;
    so.seed = opt.seed;
    if (opt.count) {
      so.sizes.clear();
      for (std::size_t n : {20, 50, 100, 200})
        if (n <= opt.count) so.sizes.push_back(n);
      if (so.sizes.empty()) so.sizes.push_back(opt.count);
    }
    return {strategy_suite(so)};
  }
  if (name == "wrapper") return {wrapper_suite(opt)};
  if (name == "translations") return {translation_suite(opt)};
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const std::string& each : suite_names()) {
      auto part = run_suite(each, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace flipper::verify
