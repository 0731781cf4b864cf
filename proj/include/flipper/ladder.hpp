#pragma once

#include "flipper/graph.hpp"

namespace flipper {

// Whether g contains distinct a_1..a_k, b_1..b_k with a_i b_j an edge iff i < j.
// Edges inside the a's and inside the b's are unconstrained. Throws
// BudgetExceeded after node_cap search nodes.
bool has_ladder(const Graph& g, std::size_t k, std::size_t node_cap = 10'000'000);

}  // namespace flipper
