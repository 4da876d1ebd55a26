#include "energych/coloring.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>

namespace energych {

namespace {

int greedy_clique_size(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (int start = 0; start < g.order(); ++start) {
    VertexSet clique = bit(start), cand = g.neighbors(start);
    while (cand) {
      int pick = -1, pick_deg = -1;
      for (VertexSet s = cand; s; s &= s - 1) {
        const int v = lowest(s);
        const int d = popcount(g.neighbors(v) & cand);
        if (d > pick_deg) pick = v, pick_deg = d;
      }
      clique |= bit(pick);
      cand &= g.neighbors(pick);
    }
    best = std::max(best, popcount(clique));
  }
  return best;
}

int greedy_color_count(const Graph& g) {
  std::vector<int> order(g.order());
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.order(), -1);
  int used = 0;
  for (int v : order) {
    std::uint64_t taken = 0;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1)
      if (color[lowest(s)] >= 0) taken |= std::uint64_t{1} << color[lowest(s)];
    color[v] = std::countr_one(taken);
    used = std::max(used, color[v] + 1);
  }
  return used;
}

// Vertices in max-degree-first order; a new colour may only be the next unused
// one, which removes colour permutations.
bool extend_coloring(const Graph& g, const std::vector<int>& order, std::size_t pos,
                     std::vector<int>& color, int used, int k) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  std::uint64_t taken = 0;
  for (VertexSet s = g.neighbors(v); s; s &= s - 1)
    if (color[lowest(s)] >= 0) taken |= std::uint64_t{1} << color[lowest(s)];
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if (taken >> c & 1U) continue;
    color[v] = c;
    if (extend_coloring(g, order, pos + 1, color, std::max(used, c + 1), k)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
  if (g.order() == 0) return k >= 0;
  if (k <= 0) return false;
  if (k >= g.order()) return true;
  std::vector<int> order(g.order());
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> color(g.order(), -1);
  return extend_coloring(g, order, 0, color, 0, k);
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const int lower = greedy_clique_size(g);
  const int upper = greedy_color_count(g);
  for (int k = lower; k < upper; ++k)
    if (is_k_colorable(g, k)) return k;
  return upper;
}

int ListAssignment::universe() const {
  int top = -1;
  for (const auto& l : lists)
    for (int c : l) top = std::max(top, c);
  return top + 1;
}

void ListAssignment::validate(int order) const {
  if (static_cast<int>(lists.size()) != order)
    throw std::invalid_argument("list assignment covers " + std::to_string(lists.size()) +
                                " vertices, graph has " + std::to_string(order));
  const int k = list_size();
  for (std::size_t v = 0; v < lists.size(); ++v) {
    auto l = lists[v];
    if (static_cast<int>(l.size()) != k)
      throw std::invalid_argument("list of vertex " + std::to_string(v) + " has size " +
                                  std::to_string(l.size()) + ", expected " + std::to_string(k));
    std::sort(l.begin(), l.end());
    if (!l.empty() && l.front() < 0) throw std::invalid_argument("negative colour in list");
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw std::invalid_argument("repeated colour in list of vertex " + std::to_string(v));
  }
}

namespace detail {

bool colorable(const Graph& g, std::span<const std::uint64_t> lists, std::vector<int>* choice) {
  const int n = g.order();
  std::array<std::uint64_t, Graph::kMaxOrder> avail{};
  std::array<int, Graph::kMaxOrder> chosen{};
  for (int v = 0; v < n; ++v) avail[v] = lists[v];
  VertexSet open = g.vertices();

  auto solve = [&](auto&& self) -> bool {
    if (!open) return true;
    int v = -1, best = 65;
    for (VertexSet s = open; s; s &= s - 1) {
      const int u = lowest(s);
      const int c = std::popcount(avail[u]);
      if (c < best) v = u, best = c;
      if (c == 0) return false;
    }
    open &= ~bit(v);
    const VertexSet nb = g.neighbors(v) & open;
    for (std::uint64_t cs = avail[v]; cs; cs &= cs - 1) {
      const std::uint64_t c = cs & -cs;
      std::array<std::uint64_t, Graph::kMaxOrder> saved;
      for (VertexSet s = nb; s; s &= s - 1) saved[lowest(s)] = avail[lowest(s)];
      for (VertexSet s = nb; s; s &= s - 1) avail[lowest(s)] &= ~c;
      chosen[v] = std::countr_zero(c);
      if (self(self)) return true;
      for (VertexSet s = nb; s; s &= s - 1) avail[lowest(s)] = saved[lowest(s)];
    }
    open |= bit(v);
    return false;
  };

  if (!solve(solve)) return false;
  if (choice) choice->assign(chosen.begin(), chosen.begin() + n);
  return true;
}

}  // namespace detail

ColoringWitness is_list_colorable(const Graph& g, const ListAssignment& lists) {
  lists.validate(g.order());
  // Compress colours so that every list fits a 64-bit mask. Only colours of
  // adjacent vertices interact, but a global index suffices at n*k <= 64.
  std::map<int, int> index;
  for (const auto& l : lists.lists)
    for (int c : l) index.emplace(c, 0);
  if (index.size() > 64)
    throw std::invalid_argument("list assignment uses more than 64 distinct colours");
  std::vector<int> colour_of;
  for (auto& [c, i] : index) {
    i = static_cast<int>(colour_of.size());
    colour_of.push_back(c);
  }
  std::vector<std::uint64_t> bits(g.order(), 0);
  for (int v = 0; v < g.order(); ++v)
    for (int c : lists.lists[v]) bits[v] |= std::uint64_t{1} << index[c];
  std::vector<int> choice;
  if (!detail::colorable(g, bits, &choice)) return std::nullopt;
  for (int& c : choice) c = colour_of[c];
  return choice;
}

}  // namespace energych
