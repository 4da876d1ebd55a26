#include "energych/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace energych {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxOrder)
    throw std::length_error("graph order " + std::to_string(n) + " outside [0, 64]");
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n_));
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(rows_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  rows_[u] |= bit(v);
  rows_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~bit(v);
  rows_[v] &= ~bit(u);
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
  Graph h(static_cast<int>(s.size()));
  for (int v : s)
    if (v < 0 || v >= g.order())
      throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) throw std::invalid_argument("induced_subgraph: repeated vertex");
      if (g.has_edge(s[i], s[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return h;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (s & ~g.vertices()) throw std::out_of_range("induced_subgraph: vertex set out of range");
  const auto vs = members(s);
  return induced_subgraph(g, std::span<const int>(vs));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.order() + h.order() > Graph::kMaxOrder)
    throw std::length_error("disjoint_union: combined order exceeds 64");
  Graph r(g.order() + h.order());
  const int off = g.order();
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) r.add_edge(u, v);
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v)
      if (h.has_edge(u, v)) r.add_edge(off + u, off + v);
  return r;
}

Graph join(const Graph& g, const Graph& h) {
  Graph r = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) r.add_edge(u, g.order() + v);
  return r;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw std::invalid_argument("relabel: permutation size mismatch");
  Graph r(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) r.add_edge(perm[u], perm[v]);
  return r;
}

StrippedGraph strip_isolated(const Graph& g) {
  VertexSet keep = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) keep |= bit(v);
  return {induced_subgraph(g, keep), g.order() - popcount(keep)};
}

std::vector<int> degeneracy_order(const Graph& g) {
  std::vector<int> order;
  order.reserve(g.order());
  VertexSet alive = g.vertices();
  while (alive) {
    int best = -1, best_deg = Graph::kMaxOrder + 1;
    for (VertexSet s = alive; s; s &= s - 1) {
      const int v = lowest(s);
      const int d = popcount(g.neighbors(v) & alive);
      if (d < best_deg) best = v, best_deg = d;
    }
    order.push_back(best);
    alive &= ~bit(best);
  }
  return order;
}

int degeneracy(const Graph& g) {
  int result = 0;
  VertexSet alive = g.vertices();
  for (int v : degeneracy_order(g)) {
    result = std::max(result, popcount(g.neighbors(v) & alive));
    alive &= ~bit(v);
  }
  return result;
}

VertexSet k_core_vertices(const Graph& g, int k) {
  VertexSet alive = g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexSet s = alive; s; s &= s - 1) {
      const int v = lowest(s);
      if (popcount(g.neighbors(v) & alive) < k) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

static VertexSet reach(const Graph& g, int start, VertexSet within) {
  VertexSet seen = bit(start), frontier = bit(start);
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> comps;
  VertexSet left = g.vertices();
  while (left) {
    const VertexSet c = reach(g, lowest(left), left);
    comps.push_back(c);
    left &= ~c;
  }
  return comps;
}

bool is_connected(const Graph& g, VertexSet s) {
  if (!s) return true;
  return reach(g, lowest(s), s) == s;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (VertexSet t = s; t; t &= t - 1) {
    const int v = lowest(t);
    if ((g.neighbors(v) & s) != (s & ~bit(v))) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (VertexSet t = s; t; t &= t - 1)
    if (g.neighbors(lowest(t)) & s) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (VertexSet s = g.neighbors(u); s; s &= s - 1) {
        const int v = lowest(s);
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool find_induced(const Graph& g, const Graph& pattern, VertexSet* witness) {
  const int p = pattern.order();
  if (p > g.order()) return false;
  std::vector<int> image(p, -1);
  VertexSet used = 0;
  std::function<bool(int)> extend = [&](int i) {
    if (i == p) return true;
    for (int v = 0; v < g.order(); ++v) {
      if (used & bit(v)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = pattern.has_edge(i, j) == g.has_edge(v, image[j]);
      if (!ok) continue;
      image[i] = v;
      used |= bit(v);
      if (extend(i + 1)) return true;
      used &= ~bit(v);
    }
    return false;
  };
  if (!extend(0)) return false;
  if (witness) *witness = used;
  return true;
}

bool has_induced(const Graph& g, const Graph& pattern) { return find_induced(g, pattern, nullptr); }

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(popcount(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

}  // namespace energych
