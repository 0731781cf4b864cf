#include "flipper/ladder.hpp"

#include <vector>

namespace flipper {

namespace {

struct LadderSearch {
  const Graph& g;
  std::size_t k;
  StepBudget nodes;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  VertexSet used;

  bool extend() {
    if (a.size() == k) return true;
    nodes.charge(1);
    // New a_t must miss every earlier b_i, new b_t must hit every earlier a_i.
    VertexSet cand_a = g.vertices() - used;
    VertexSet cand_b = g.vertices() - used;
    for (Vertex bi : b) cand_a -= g.neighbors(bi);
    for (Vertex ai : a) cand_b &= g.neighbors(ai);
    for (Vertex x : cand_a) {
      VertexSet partners = cand_b - g.neighbors(x);
      partners.erase(x);
      for (Vertex y : partners) {
        a.push_back(x);
        b.push_back(y);
        used.insert(x);
        used.insert(y);
        if (extend()) return true;
        used.erase(x);
        used.erase(y);
        a.pop_back();
        b.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

bool has_ladder(const Graph& g, std::size_t k, std::size_t node_cap) {
  if (k == 0) return true;
  LadderSearch search{g, k, StepBudget(node_cap), {}, {}, VertexSet(g.universe())};
  return search.extend();
}

}  // namespace flipper
