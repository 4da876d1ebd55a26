#include "energych/ng_types.hpp"

#include <stdexcept>

namespace energych {

namespace {

// Subsets of `universe` with `size` elements, lexicographic in sorted order.
template <typename Visit>
bool for_each_subset(const std::vector<int>& universe, int size, Visit&& visit) {
  std::vector<int> pick(size);
  auto rec = [&](auto&& self, int pos, int from) -> bool {
    if (pos == size) {
      VertexSet s = 0;
      for (int i : pick) s |= bit(universe[i]);
      return visit(s);
    }
    for (int i = from; i <= static_cast<int>(universe.size()) - (size - pos); ++i) {
      pick[pos] = i;
      if (self(self, pos + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

VertexSet common_neighbours(const Graph& g, VertexSet t, VertexSet candidates) {
  VertexSet out = candidates;
  for (VertexSet s = t; s; s &= s - 1) out &= g.neighbors(lowest(s));
  return out;
}

std::vector<int> pentagon_order(const Graph& g, VertexSet c) {
  std::vector<int> order{lowest(c)};
  VertexSet seen = bit(order.front());
  while (static_cast<int>(order.size()) < 5) {
    const VertexSet next = g.neighbors(order.back()) & c & ~seen;
    const int v = lowest(next);
    order.push_back(v);
    seen |= bit(v);
  }
  return order;
}

}  // namespace

std::string to_string(TypeKind kind) {
  switch (kind) {
    case TypeKind::F1: return "F1";
    case TypeKind::F1bar: return "F1bar";
    case TypeKind::F2: return "F2";
  }
  return "?";
}

NgSum ng_sum(const Graph& g, ChoiceNumberCache& cache) {
  return {cache.choice_number(g), cache.choice_number(complement(g))};
}

std::optional<TypeWitness> find_type_F1(const Graph& g, ChoiceNumberCache& cache,
                                        const TypeConventions& conv) {
  const int n = g.order();
  if (n > 10) throw std::length_error("find_type_F1: order above 10");
  const auto all = members(g.vertices());
  std::optional<TypeWitness> found;
  for (int size = conv.allow_empty_t ? 0 : 1; size <= n && !found; ++size) {
    for_each_subset(all, size, [&](VertexSet t) {
      const VertexSet rest = g.vertices() & ~t;
      if (!is_independent(g, rest)) return false;
      const VertexSet s1 = common_neighbours(g, t, rest);
      if (!s1) return false;
      if (cache.choice_number(induced_subgraph(g, t | s1)) != size + 1) return false;
      TypeWitness w;
      w.s1 = s1;
      w.t = t;
      w.s2 = rest & ~s1;
      found = w;
      return true;
    });
  }
  return found;
}

std::optional<TypeWitness> find_type_F1bar(const Graph& g, ChoiceNumberCache& cache,
                                           const TypeConventions& conv) {
  auto w = find_type_F1(complement(g), cache, conv);
  if (w) w->kind = TypeKind::F1bar;
  return w;
}

std::optional<TypeWitness> find_type_F2(const Graph& g, const TypeConventions& conv) {
  const int n = g.order();
  if (n > 12) throw std::length_error("find_type_F2: order above 12");
  const auto all = members(g.vertices());
  std::optional<TypeWitness> found;
  for_each_subset(all, 5, [&](VertexSet c) {
    for (VertexSet s = c; s; s &= s - 1)
      if (popcount(g.neighbors(lowest(s)) & c) != 2) return false;
    if (!is_connected(g, c)) return false;
    VertexSet clique = 0, independent = 0;
    for (VertexSet s = g.vertices() & ~c; s; s &= s - 1) {
      const int v = lowest(s);
      const VertexSet seen = g.neighbors(v) & c;
      if (seen == c)
        clique |= bit(v);
      else if (seen == 0)
        independent |= bit(v);
      else
        return false;
    }
    if (!is_clique(g, clique) || !is_independent(g, independent)) return false;
    if (!conv.allow_empty_f2_parts && (!clique || !independent)) return false;
    TypeWitness w;
    w.kind = TypeKind::F2;
    w.clique = clique;
    w.independent = independent;
    w.cycle = pentagon_order(g, c);
    found = std::move(w);
    return true;
  });
  return found;
}

EqualityCharacterization check_equality_characterization(const Graph& g, ChoiceNumberCache& cache,
                                                         const TypeConventions& conv) {
  EqualityCharacterization out;
  out.sums = ng_sum(g, cache);
  out.equality = out.sums.sum() == g.order() + 1;
  out.witness = find_type_F1(g, cache, conv);
  if (!out.witness) out.witness = find_type_F1bar(g, cache, conv);
  if (!out.witness) out.witness = find_type_F2(g, conv);
  return out;
}

bool check_S1_bound(const TypeWitness& w, const Graph& g) {
  if (w.kind == TypeKind::F2) throw std::invalid_argument("check_S1_bound: not an F1 witness");
  const Graph f1 = w.kind == TypeKind::F1bar ? complement(g) : g;
  if (is_clique(f1, w.t)) return true;
  const VertexSet largest = common_neighbours(f1, w.t, f1.vertices() & ~w.t);
  const int t = popcount(w.t);
  return popcount(largest) >= t * t;
}

}  // namespace energych
