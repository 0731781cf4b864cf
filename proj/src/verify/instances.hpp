#pragma once

// Random instances with planted structure for the property suites.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "flipper/classifier.hpp"

namespace flipper::verify {

VertexOrder random_order(std::size_t n, std::mt19937_64& rng);
VertexSet random_subset(const VertexSet& from, unsigned percent, std::mt19937_64& rng);

struct PlantedClassifier {
  Graph graph;
  Classifier classifier;
};

// Graph on at most max_vertices vertices built around a classifier with five
// or six blobs and one to three representatives. Ids are shuffled.
PlantedClassifier planted_classifier(std::uint64_t seed, std::size_t max_vertices = 14);

struct SpacedInstance {
  Graph graph;
  std::size_t radius = 0;
  std::vector<Vertex> centers;
  std::vector<VertexSet> balls;  // radius ceil(r/2)-1 around each centre
};

// Centres (five by default) at pairwise distance exactly r whose inner balls are disjoint:
// legs joined by a clique (odd r) or a hub (even r), plus a few decorating
// vertices. Returns nothing when the random decoration broke the spacing.
std::optional<SpacedInstance> spaced_instance(std::size_t r, std::uint64_t seed, std::size_t max_vertices = 18,
                                              std::size_t legs = 5);

}  // namespace flipper::verify
