#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "flipper/graph.hpp"

namespace flipper {

// Uniform integer in [0, bound) that does not depend on the standard library's
// distribution implementation, so seeded runs agree across platforms.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph grid_graph(std::size_t width, std::size_t height);
Graph clique_graph(std::size_t n);
// Uniform labelled tree from a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);
// Random graph with every degree at most max_degree.
Graph bounded_degree_random(std::size_t n, std::size_t max_degree, std::uint64_t seed);
// Ids 0..k-1 are the left side, k..2k-1 the right side; left i meets right j iff i < j.
Graph half_graph(std::size_t k);
// K_n with every edge replaced by a path through r new vertices.
Graph subdivided_clique(std::size_t n, std::size_t r);
// Erdos-Renyi G(n, p) with p given in percent.
Graph random_graph(std::size_t n, unsigned percent, std::uint64_t seed);

// Families with a single size knob, used by bench and the strategy suites:
// path, cycle, grid, random_tree, bounded_degree_random.
Graph generate_family(std::string_view family, std::size_t n, std::uint64_t seed);
const std::vector<std::string>& sized_families();

}  // namespace flipper
