#include "energych/canon.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "energych/graph6.hpp"

namespace energych {

namespace {

using Coloring = std::vector<int>;

int count_cells(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Splits cells by neighbour counts into every cell until stable. Cell order is
// derived only from colours, never from vertex ids.
void refine(const Graph& g, Coloring& colors) {
  const int n = g.order();
  int cells = count_cells(colors);
  std::vector<std::vector<int>> sig(n);
  std::vector<int> idx(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      sig[v].assign(cells + 1, 0);
      sig[v][0] = colors[v];
      for (VertexSet s = g.neighbors(v); s; s &= s - 1) ++sig[v][1 + colors[lowest(s)]];
    }
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
    int next = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++next;
      colors[idx[i]] = next;
    }
    if (next + 1 == cells) return;
    cells = next + 1;
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Coloring colors(n_, 0);
    std::vector<int> prefix;
    search(colors, prefix);
    return {g6_decode(best_key_), best_position_};
  }

 private:
  void search(Coloring colors, std::vector<int>& prefix) {
    refine(g_, colors);
    const int cells = count_cells(colors);
    if (cells == n_) {
      leaf(colors);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (!explored.empty() && same_orbit(prefix, v, explored)) continue;
      explored.push_back(v);
      Coloring child(colors);
      for (int u = 0; u < n_; ++u)
        if (colors[u] > target || (colors[u] == target && u != v)) ++child[u];
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Coloring& position) {
    const std::string key = g6_encode(relabel(g_, position));
    if (best_key_.empty() || key < best_key_) {
      best_key_ = key;
      best_position_ = position;
      return;
    }
    if (key != best_key_) return;
    std::vector<int> at(n_);
    for (int v = 0; v < n_; ++v) at[best_position_[v]] = v;
    std::vector<int> gamma(n_);
    for (int v = 0; v < n_; ++v) gamma[v] = at[position[v]];
    automorphisms_.push_back(std::move(gamma));
  }

  // Orbit test under the known automorphisms that fix every prefix vertex.
  bool same_orbit(const std::vector<int>& prefix, int v, const std::vector<int>& explored) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; }))
        continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int w) { return find(w) == root; });
  }

  const Graph& g_;
  int n_;
  std::string best_key_;
  std::vector<int> best_position_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonMaxOrder)
    throw std::length_error("canonical_form: order above 62 not supported");
  if (g.order() == 0) return {Graph(0), {}};
  return Canonizer(g).run();
}

CanonicalLabel canonical_label(const Graph& g) {
  if (g.order() == 0) return {g6_encode(g)};
  return {g6_encode(canonical_form(g).graph)};
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_label(g) == canonical_label(h);
}

std::vector<std::vector<int>> enumerate_automorphisms(const Graph& g, std::size_t cap) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> image(n, -1);
  VertexSet used = 0;
  auto extend = [&](auto&& self, int v) -> void {
    if (out.size() >= cap) return;
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used & bit(w)) || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used |= bit(w);
      self(self, v + 1);
      used &= ~bit(w);
    }
  };
  // Images are tried in ascending order, so the identity is found first.
  out.reserve(std::min<std::size_t>(cap, 1024));
  extend(extend, 0);
  return out;
}

}  // namespace energych
