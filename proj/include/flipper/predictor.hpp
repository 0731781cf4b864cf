#pragma once

#include <optional>
#include <vector>

#include "flipper/classifier.hpp"
#include "flipper/flips.hpp"

namespace flipper {

struct PredictConfig {
  std::size_t radius = 1;
  VertexOrder order;
  // Work limit is step_budget_factor * n^2 machine words for an n-vertex graph.
  std::size_t step_budget_factor = 64;
  std::size_t max_flips = 256;
};

// FLIPPER_STEP_BUDGET if set to a positive integer, otherwise fallback.
std::size_t step_budget_factor_from_env(std::size_t fallback = 64);

// Split of a raised partition by neighbourhood in the anchor set: a cell holds
// the members of one part that see the same anchors.
struct TraceCells {
  struct Cell {
    Vertex anchor;
    VertexSet trace;  // neighbours among the anchors
    VertexSet members;
  };
  std::vector<Cell> cells;  // sorted by least member in the vertex order
  VertexSet anchors;
  VertexSet central;  // anchors that meet every ball
};

TraceCells trace_cells(const Graph& h, const RaisedPartition& p, const VertexSet& central, const VertexOrder& order,
                       StepBudget* budget = nullptr);

// Flip sets used when the centres sit at exactly the target distance, one for
// odd and one for even distances.
FlipSet flips_odd_case(const TraceCells& t);
FlipSet flips_even_case(const TraceCells& t);
FlipSet flips_for_radius(const TraceCells& t, std::size_t radius);

struct PredictTrace {
  FlipSet flips;
  std::size_t steps = 0;
  bool guard_tripped = false;
  std::vector<std::size_t> cells_per_level;  // zero where no cells were built
};

// Flip set computed from five vertices only. Larger sets are cut to their five
// least members, smaller ones give the empty set.
PredictTrace predict_traced(const Graph& g, const PredictConfig& cfg, const VertexSet& z);
FlipSet predict(const Graph& g, const PredictConfig& cfg, const VertexSet& z);

struct ReferenceLevel {
  enum class Kind { base, far, exact };
  std::size_t radius;
  Kind kind;
  VertexSet centers;
  std::optional<Classifier> classifier;
};

struct ReferenceResult {
  VertexSet y;
  FlipSet flips;
  std::vector<ReferenceLevel> levels;
};

// Slow reference that builds the flip set for a whole vertex set x by
// searching classifiers exhaustively at every level. Gives nothing when some
// level has no classifier or no subfamily of five suitably spaced blobs.
std::optional<ReferenceResult> reference_flips(const Graph& g, const PredictConfig& cfg, const VertexSet& x,
                                               const ClassifierSearchLimits& limits = {});

}  // namespace flipper
