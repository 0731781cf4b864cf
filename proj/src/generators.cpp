#include "flipper/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace flipper {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  // Rejection sampling removes the modulo bias.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({Vertex(i - 1), Vertex(i)});
  return Graph::build(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) return path_graph(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({Vertex(i), Vertex((i + 1) % n)});
  return Graph::build(n, edges);
}

Graph grid_graph(std::size_t width, std::size_t height) {
  std::vector<Edge> edges;
  auto id = [width](std::size_t x, std::size_t y) { return Vertex(y * width + x); };
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      if (x + 1 < width) edges.push_back({id(x, y), id(x + 1, y)});
      if (y + 1 < height) edges.push_back({id(x, y), id(x, y + 1)});
    }
  }
  return Graph::build(width * height, edges);
}

Graph clique_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({Vertex(i), Vertex(j)});
  return Graph::build(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n <= 2) return path_graph(n);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = uniform_below(rng, n);
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t c : code) ++degree[c];
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (std::size_t c : code) {
    std::size_t leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({Vertex(leaf), Vertex(c)});
    if (--degree[c] == 1) leaves.insert(c);
  }
  std::size_t a = *leaves.begin();
  std::size_t b = *std::next(leaves.begin());
  edges.push_back({Vertex(a), Vertex(b)});
  return Graph::build(n, edges);
}

Graph bounded_degree_random(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g = Graph::edgeless(n);
  if (n < 2) return g;
  std::vector<std::size_t> degree(n, 0);
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> present;
  std::size_t attempts = n * max_degree * 2;
  for (std::size_t i = 0; i < attempts; ++i) {
    Vertex u = Vertex(uniform_below(rng, n));
    Vertex v = Vertex(uniform_below(rng, n));
    if (u == v || degree[u] >= max_degree || degree[v] >= max_degree) continue;
    auto key = std::minmax(u, v);
    if (!present.insert(key).second) continue;
    edges.push_back({u, v});
    ++degree[u];
    ++degree[v];
  }
  return Graph::build(n, edges);
}

Graph half_graph(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) edges.push_back({Vertex(i), Vertex(k + j)});
  return Graph::build(2 * k, edges);
}

Graph subdivided_clique(std::size_t n, std::size_t r) {
  std::size_t next = n;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vertex prev = Vertex(i);
      for (std::size_t k = 0; k < r; ++k) {
        edges.push_back({prev, Vertex(next)});
        prev = Vertex(next++);
      }
      edges.push_back({prev, Vertex(j)});
    }
  }
  return Graph::build(next, edges);
}

Graph random_graph(std::size_t n, unsigned percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform_below(rng, 100) < percent) edges.push_back({Vertex(i), Vertex(j)});
  return Graph::build(n, edges);
}

const std::vector<std::string>& sized_families() {
  static const std::vector<std::string> names = {"path", "cycle", "grid", "random_tree", "bounded_degree_random"};
  return names;
}

Graph generate_family(std::string_view family, std::size_t n, std::uint64_t seed) {
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "grid") {
    auto side = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(n))));
    side = std::max<std::size_t>(side, 1);
    return grid_graph(side, (n + side - 1) / side);
  }
  if (family == "random_tree") return random_tree(n, seed);
  if (family == "bounded_degree_random") return bounded_degree_random(n, 3, seed);
  throw std::invalid_argument("unknown graph family '" + std::string(family) + "'");
}

}  // namespace flipper
