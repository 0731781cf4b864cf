#include "verify/instances.hpp"

#include <algorithm>
#include <numeric>

#include "flipper/generators.hpp"

namespace flipper::verify {

VertexOrder random_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(seq[i - 1], seq[uniform_below(rng, i)]);
  return VertexOrder::from_sequence(std::move(seq));
}

VertexSet random_subset(const VertexSet& from, unsigned percent, std::mt19937_64& rng) {
  VertexSet out(from.universe());
  for (Vertex v : from)
    if (uniform_below(rng, 100) < percent) out.insert(v);
  return out;
}

namespace {

bool coin(std::mt19937_64& rng) { return uniform_below(rng, 2) == 1; }

std::vector<Vertex> shuffled_ids(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  return perm;
}

}  // namespace

PlantedClassifier planted_classifier(std::uint64_t seed, std::size_t max_vertices) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::size_t k = 1 + uniform_below(rng, 3);
    std::vector<std::size_t> types;
    if (k == 1 || coin(rng)) {
      types.push_back(uniform_below(rng, k));
    } else {
      std::size_t a = uniform_below(rng, k);
      std::size_t b = (a + 1 + uniform_below(rng, k - 1)) % k;
      types = {std::min(a, b), std::max(a, b)};
    }
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) m[i][j] = m[j][i] = coin(rng) ? 1 : 0;
    bool distinct = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        bool same = true;
        for (std::size_t t : types) same = same && m[i][t] == m[j][t];
        distinct = distinct && !same;
      }
    if (!distinct) continue;

    std::size_t blob_count = 5;
    bool padded = false;
    if (blob_count * types.size() + k + types.size() <= max_vertices && coin(rng)) ++blob_count;
    if (blob_count * (types.size() + 1) + k <= max_vertices && coin(rng)) padded = true;
    std::size_t used = blob_count * (types.size() + (padded ? 1 : 0)) + k;
    if (used > max_vertices) continue;
    std::size_t extras = uniform_below(rng, max_vertices - used + 1);

    struct Spec {
      std::size_t type;
      std::optional<std::size_t> blob;
      std::optional<std::size_t> exc;
    };
    std::vector<Spec> spec;
    for (std::size_t b = 0; b < blob_count; ++b) {
      for (std::size_t t : types) spec.push_back({t, b, b});
      if (padded) spec.push_back({types[uniform_below(rng, types.size())], b, b});
    }
    std::size_t first_rep = spec.size();
    for (std::size_t t = 0; t < k; ++t) spec.push_back({t, std::nullopt, std::nullopt});
    for (std::size_t e = 0; e < extras; ++e) {
      std::optional<std::size_t> exc;
      if (coin(rng)) exc = uniform_below(rng, blob_count);
      spec.push_back({uniform_below(rng, k), std::nullopt, exc});
    }

    std::size_t n = spec.size();
    std::vector<Vertex> id = shuffled_ids(n, rng);
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const Spec& a = spec[x];
        const Spec& b = spec[y];
        bool edge = false;
        if (a.blob && b.blob && *a.blob == *b.blob) {
          edge = coin(rng);
        } else if (b.blob) {
          edge = (!a.blob && a.exc == b.blob) ? coin(rng) : m[a.type][b.type] == 1;
        } else if (a.blob) {
          edge = (!b.blob && b.exc == a.blob) ? coin(rng) : m[a.type][b.type] == 1;
        } else {
          edge = coin(rng);
        }
        if (edge) edges.push_back({id[x], id[y]});
      }
    }
    PlantedClassifier out;
    out.graph = Graph::build(n, edges);
    Classifier& c = out.classifier;
    c.blobs.assign(blob_count, VertexSet(n));
    c.reps = VertexSet(n);
    c.exc.assign(n, std::nullopt);
    c.rep.assign(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (spec[x].blob) c.blobs[*spec[x].blob].insert(id[x]);
      c.exc[id[x]] = spec[x].exc;
      c.rep[id[x]] = id[first_rep + spec[x].type];
    }
    for (std::size_t t = 0; t < k; ++t) c.reps.insert(id[first_rep + t]);
    return out;
  }
}

std::optional<SpacedInstance> spaced_instance(std::size_t r, std::uint64_t seed, std::size_t max_vertices,
                                              std::size_t legs) {
  std::mt19937_64 rng(seed);
  const std::size_t depth = r % 2 == 1 ? (r - 1) / 2 : (r - 2) / 2;
  std::size_t base = legs * (depth + 1) + (r % 2 == 0 ? 1 : 0);
  if (base + 2 > max_vertices) return std::nullopt;
  std::size_t extras = 2 + uniform_below(rng, std::min<std::size_t>(max_vertices - base - 2, 3) + 1);
  std::size_t n = base + extras;
  auto leg = [&](std::size_t i, std::size_t d) { return i * (depth + 1) + d; };
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  auto link = [&](std::size_t a, std::size_t b, bool on) { adj[a][b] = adj[b][a] = on ? 1 : 0; };
  for (std::size_t i = 0; i < legs; ++i)
    for (std::size_t d = 0; d < depth; ++d) link(leg(i, d), leg(i, d + 1), true);
  std::size_t hub = legs * (depth + 1);
  for (std::size_t i = 0; i < legs; ++i) {
    if (r % 2 == 0) {
      link(leg(i, depth), hub, true);
    } else {
      for (std::size_t j = i + 1; j < legs; ++j) link(leg(i, depth), leg(j, depth), true);
    }
  }
  for (std::size_t e = 0; e < extras; ++e) {
    std::size_t u = base + e;
    bool all = e == 0 || (e > 1 && coin(rng));
    for (std::size_t i = 0; i < legs; ++i) link(u, leg(i, depth), all);
    if (uniform_below(rng, 3) == 0) {
      std::size_t i = uniform_below(rng, legs);
      for (std::size_t d = 0; d <= depth; ++d)
        if (coin(rng)) link(u, leg(i, d), !adj[u][leg(i, d)]);
    }
    for (std::size_t w = legs * (depth + 1); w < u; ++w)
      if (coin(rng)) link(u, w, true);
  }
  std::vector<Vertex> id = shuffled_ids(n, rng);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (adj[a][b]) edges.push_back({id[a], id[b]});
  SpacedInstance out;
  out.graph = Graph::build(n, edges);
  out.radius = r;
  for (std::size_t i = 0; i < legs; ++i) out.centers.push_back(id[leg(i, 0)]);
  VertexSet covered(n);
  for (Vertex c : out.centers) {
    out.balls.push_back(ball(out.graph, c, (r + 1) / 2 - 1));
    if (covered.intersects(out.balls.back())) return std::nullopt;
    covered |= out.balls.back();
  }
  for (Vertex a : out.centers)
    for (Vertex b : out.centers)
      if (a != b && distance(out.graph, a, b) != r) return std::nullopt;
  return out;
}

}  // namespace flipper::verify
