#include "verify/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace flipper::oracle {

MatrixGraph MatrixGraph::from(const Graph& g) {
  MatrixGraph m;
  m.n = g.universe();
  m.live.assign(m.n, 0);
  m.adj.assign(m.n, std::vector<char>(m.n, 0));
  for (std::size_t u = 0; u < m.n; ++u) {
    m.live[u] = g.is_live(Vertex(u)) ? 1 : 0;
    for (std::size_t v = 0; v < m.n; ++v) m.adj[u][v] = g.adjacent(Vertex(u), Vertex(v)) ? 1 : 0;
  }
  return m;
}

bool MatrixGraph::same_as(const Graph& g) const {
  if (g.universe() != n) return false;
  for (std::size_t u = 0; u < n; ++u) {
    if ((live[u] != 0) != g.is_live(Vertex(u))) return false;
    for (std::size_t v = 0; v < n; ++v)
      if ((adj[u][v] != 0) != g.adjacent(Vertex(u), Vertex(v))) return false;
  }
  return true;
}

void flip(MatrixGraph& m, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<char> in_a(m.n, 0);
  std::vector<char> in_b(m.n, 0);
  for (Vertex v : a)
    if (v < m.n) in_a[v] = 1;
  for (Vertex v : b)
    if (v < m.n) in_b[v] = 1;
  for (std::size_t u = 0; u < m.n; ++u) {
    for (std::size_t v = u + 1; v < m.n; ++v) {
      if (!m.live[u] || !m.live[v]) continue;
      if ((in_a[u] && in_b[v]) || (in_b[u] && in_a[v])) {
        m.adj[u][v] ^= 1;
        m.adj[v][u] ^= 1;
      }
    }
  }
}

MatrixGraph induced(const MatrixGraph& m, const std::vector<char>& keep) {
  MatrixGraph out = m;
  for (std::size_t u = 0; u < m.n; ++u) {
    out.live[u] = m.live[u] && keep[u];
    for (std::size_t v = 0; v < m.n; ++v) {
      if (!out.live[u] || !(m.live[v] && keep[v])) out.adj[u][v] = 0;
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> distances(const MatrixGraph& m) {
  std::vector<std::vector<std::size_t>> d(m.n, std::vector<std::size_t>(m.n, kInfinity));
  for (std::size_t u = 0; u < m.n; ++u) {
    if (!m.live[u]) continue;
    d[u][u] = 0;
    for (std::size_t v = 0; v < m.n; ++v)
      if (m.live[v] && m.adj[u][v]) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < m.n; ++k)
    for (std::size_t i = 0; i < m.n; ++i) {
      if (d[i][k] == kInfinity) continue;
      for (std::size_t j = 0; j < m.n; ++j) {
        if (d[k][j] == kInfinity) continue;
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
      }
    }
  return d;
}

std::vector<std::vector<Vertex>> s_classes(const MatrixGraph& m, const std::vector<Vertex>& s) {
  std::vector<char> in_s(m.n, 0);
  for (Vertex v : s)
    if (v < m.n && m.live[v]) in_s[v] = 1;
  std::map<std::vector<char>, std::vector<Vertex>> groups;
  std::vector<std::vector<Vertex>> out;
  for (std::size_t v = 0; v < m.n; ++v) {
    if (!m.live[v]) continue;
    if (in_s[v]) {
      out.push_back({Vertex(v)});
      continue;
    }
    std::vector<char> trace;
    for (std::size_t w = 0; w < m.n; ++w)
      if (in_s[w]) trace.push_back(m.adj[v][w]);
    groups[trace].push_back(Vertex(v));
  }
  for (auto& [trace, members] : groups) out.push_back(members);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> parts_of(const Partition& p) {
  std::vector<std::vector<Vertex>> out;
  for (const VertexSet& part : p.parts()) out.push_back(part.to_vector());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <typename Visit>
void each_partition_flip(const MatrixGraph& m, const std::vector<std::vector<Vertex>>& parts, Visit visit) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i; j < parts.size(); ++j) pairs.emplace_back(i, j);
  if (pairs.size() > 21) throw std::invalid_argument("oracle: too many parts");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    MatrixGraph h = m;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if ((mask >> k) & 1U) flip(h, parts[pairs[k].first], parts[pairs[k].second]);
    if (visit(h)) return;
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> flip_distances(const MatrixGraph& m, const std::vector<std::vector<Vertex>>& parts) {
  std::vector<std::vector<std::size_t>> worst(m.n, std::vector<std::size_t>(m.n, 0));
  each_partition_flip(m, parts, [&](const MatrixGraph& h) {
    auto d = distances(h);
    for (std::size_t u = 0; u < m.n; ++u)
      for (std::size_t v = 0; v < m.n; ++v) worst[u][v] = std::max(worst[u][v], d[u][v]);
    return false;
  });
  return worst;
}

bool is_partition_flip(const MatrixGraph& g, const MatrixGraph& h, const std::vector<std::vector<Vertex>>& parts) {
  bool found = false;
  each_partition_flip(g, parts, [&](const MatrixGraph& f) {
    found = f.live == h.live && f.adj == h.adj;
    return found;
  });
  return found;
}

bool has_ladder(const MatrixGraph& m, std::size_t k) {
  std::vector<Vertex> pick;
  std::vector<char> used(m.n, 0);
  std::function<bool()> rec = [&]() -> bool {
    if (pick.size() == 2 * k) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          bool edge = m.adj[pick[i]][pick[k + j]] != 0;
          if (edge != (i < j)) return false;
        }
      return true;
    }
    for (std::size_t v = 0; v < m.n; ++v) {
      if (!m.live[v] || used[v]) continue;
      used[v] = 1;
      pick.push_back(Vertex(v));
      if (rec()) return true;
      pick.pop_back();
      used[v] = 0;
    }
    return false;
  };
  return rec();
}

namespace {

using Rows = std::vector<std::uint8_t>;

std::uint32_t code_of(const Rows& rows, const std::vector<std::size_t>& perm) {
  // perm[p] is the vertex placed at position p.
  std::uint32_t code = 0;
  std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) code = (code << 1) | ((rows[perm[i]] >> perm[j]) & 1U);
  return code;
}

std::uint32_t canonical_code(const Rows& rows) {
  std::size_t n = rows.size();
  std::vector<std::size_t> color(n, 0);
  for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<std::size_t>(__builtin_popcount(rows[v]));
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (std::size_t w = 0; w < n; ++w)
        if ((rows[v] >> w) & 1U) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t v = 0; v < n; ++v)
      color[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  std::vector<std::size_t> slot_color;
  for (std::size_t c = 0; c < classes; ++c)
    for (std::size_t v = 0; v < n; ++v)
      if (color[v] == c) slot_color.push_back(c);
  std::vector<std::size_t> perm(n);
  std::vector<char> used(n, 0);
  std::uint32_t best = 0;
  bool have = false;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      std::uint32_t c = code_of(rows, perm);
      if (!have || c > best) best = c;
      have = true;
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || color[v] != slot_color[pos]) continue;
      used[v] = 1;
      perm[pos] = v;
      rec(pos + 1);
      used[v] = 0;
    }
  };
  rec(0);
  return best;
}

}  // namespace

std::vector<Graph> graphs_up_to_isomorphism(std::size_t n) {
  if (n > 8) throw std::invalid_argument("graphs_up_to_isomorphism: n must be at most 8");
  std::vector<Rows> level;
  if (n == 0) return {};
  level.push_back(Rows(1, 0));
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<Rows> next;
    std::unordered_set<std::uint32_t> seen;
    for (const Rows& base : level) {
      for (std::uint32_t nb = 0; nb < (1U << (size - 1)); ++nb) {
        Rows rows = base;
        rows.push_back(static_cast<std::uint8_t>(nb));
        for (std::size_t v = 0; v + 1 < size; ++v)
          if ((nb >> v) & 1U) rows[v] = static_cast<std::uint8_t>(rows[v] | (1U << (size - 1)));
        if (seen.insert(canonical_code(rows)).second) next.push_back(rows);
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const Rows& rows : level) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if ((rows[u] >> v) & 1U) edges.push_back({Vertex(u), Vertex(v)});
    out.push_back(Graph::build(n, edges));
  }
  return out;
}

}  // namespace flipper::oracle
