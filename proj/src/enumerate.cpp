#include "energych/enumerate.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "energych/canon.hpp"
#include "energych/graph6.hpp"

namespace energych {

// Every graph on n vertices is some class representative on n-1 vertices plus
// one vertex with a chosen neighbourhood, so extending each representative by
// all 2^(n-1) neighbourhoods and deduplicating canonically is exhaustive.
namespace {

std::vector<Graph> extend_layer(const std::vector<Graph>& previous, int n) {
  std::map<std::string, Graph> classes;
  for (const Graph& base : previous) {
    for (VertexSet nbrs = 0; nbrs < bit(n - 1); ++nbrs) {
      Graph g = disjoint_union(base, Graph(1));
      for (VertexSet s = nbrs; s; s &= s - 1) g.add_edge(lowest(s), n - 1);
      CanonicalForm form = canonical_form(g);
      classes.try_emplace(g6_encode(form.graph), std::move(form.graph));
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [label, g] : classes) out.push_back(std::move(g));
  return out;
}

void check_order(int n) {
  if (n < 0 || n > kEnumerateMaxOrder)
    throw std::out_of_range("enumerate_graphs: order " + std::to_string(n) + " outside [0, 8]");
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
  check_order(n);
  std::vector<Graph> layer{Graph(0)};
  for (int k = 1; k <= n; ++k) layer = extend_layer(layer, k);
  return layer;
}

std::vector<Graph> enumerate_up_to(int max_order) {
  check_order(max_order);
  std::vector<Graph> out;
  std::vector<Graph> layer{Graph(0)};
  out.push_back(layer.front());
  for (int k = 1; k <= max_order; ++k) {
    layer = extend_layer(layer, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace energych
