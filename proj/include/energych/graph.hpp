#ifndef ENERGYCH_GRAPH_HPP
#define ENERGYCH_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace energych {

using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

// Undirected simple graph on vertices 0..n-1, one adjacency word per row.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return n_ == 64 ? ~VertexSet{0} : bit(n_) - 1; }
  VertexSet neighbors(int v) const { return rows_[v]; }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(rows_[v]); }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<int> degree_sequence() const;  // non-increasing

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.rows_[i] != b.rows_[i]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexSet, kMaxOrder> rows_{};
};

Graph complement(const Graph& g);

// Vertices are renumbered 0..|s|-1 in the order given.
Graph induced_subgraph(const Graph& g, std::span<const int> s);
Graph induced_subgraph(const Graph& g, VertexSet s);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// Applies the relabeling v -> perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

struct StrippedGraph {
  Graph graph;
  int isolated_count = 0;
};
StrippedGraph strip_isolated(const Graph& g);

int degeneracy(const Graph& g);
// Vertices in min-degree peeling order.
std::vector<int> degeneracy_order(const Graph& g);

// Iteratively deletes vertices of degree < k; returns the surviving vertices.
VertexSet k_core_vertices(const Graph& g, int k);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g, VertexSet s);
bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
bool is_bipartite(const Graph& g);

bool has_induced(const Graph& g, const Graph& pattern);
// Subset of g inducing a copy of pattern, if any.
bool find_induced(const Graph& g, const Graph& pattern, VertexSet* witness);

std::vector<int> members(VertexSet s);

}  // namespace energych

#endif  // ENERGYCH_GRAPH_HPP
