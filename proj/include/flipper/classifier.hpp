#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "flipper/graph.hpp"
#include "flipper/order.hpp"
#include "flipper/partition.hpp"

namespace flipper {

// Blob family with representatives. Every live vertex v has a representative
// rep[v] in reps and at most one exceptional blob exc[v]; outside that blob v
// sees each blob exactly as its representative does.
struct Classifier {
  std::vector<VertexSet> blobs;
  VertexSet reps;
  std::vector<std::optional<std::size_t>> exc;  // indexed by id
  std::vector<Vertex> rep;                      // indexed by id

  std::size_t size() const noexcept { return blobs.size(); }
  std::size_t order() const { return reps.count(); }
};

struct ClassifierViolation {
  char condition;  // 'a'..'e', or 's' for a malformed structure
  Vertex vertex;
  std::optional<std::size_t> blob;
  std::string message;
};

// Checks the five classifier conditions in order and reports the first failure.
std::optional<ClassifierViolation> validate_classifier(const Graph& g, const Classifier& c);

// Partition with a distinguished member per part.
struct RaisedPartition {
  std::vector<VertexSet> parts;
  std::vector<Vertex> anchors;  // anchors[i] lies in parts[i]

  std::optional<std::size_t> part_of(Vertex v) const;
  Partition as_partition() const { return Partition(parts); }
};

// Fibres of rep, anchored at the representatives.
RaisedPartition raised_partition(const Graph& g, const Classifier& c);

// Rebuilds the raised partition from five blobs alone: walking the vertices in
// order, a vertex joins the first anchor it agrees with on at least three blobs,
// otherwise it opens a new part. Optional budget is charged per row comparison.
RaisedPartition partition_from_five(const Graph& g, std::span<const VertexSet> blobs, const VertexOrder& order,
                                    StepBudget* budget = nullptr);

// Swaps in new representatives, one per part, dropping the blobs that were
// exceptional for them.
Classifier reselect_representatives(const Graph& g, const Classifier& c, const VertexSet& new_reps);

// Representatives become the least member of their part.
Classifier canonize(const Graph& g, const Classifier& c, const VertexOrder& order);

struct ClassifierSearchLimits {
  std::size_t max_order = 3;
  std::size_t min_size = 0;  // minimum number of blobs after canonizing
  std::size_t max_vertices = 16;
  std::size_t max_balls = 8;
  std::size_t node_cap = 2'000'000;
};

// Exhaustive search over blob subfamilies (largest first, then lexicographic)
// and representative sets (by size, then lexicographic in order). Returns a
// canonical classifier or nothing. Throws std::invalid_argument when the
// instance exceeds the limits and BudgetExceeded past node_cap.
std::optional<Classifier> search_classifier(const Graph& g, std::span<const VertexSet> balls, const VertexOrder& order,
                                            const ClassifierSearchLimits& limits = {});

}  // namespace flipper
