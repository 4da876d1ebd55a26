#ifndef ENERGYCH_CANON_HPP
#define ENERGYCH_CANON_HPP

#include <compare>
#include <string>
#include <vector>

#include "energych/graph.hpp"

namespace energych {

// graph6 text of the canonical relabeling; equal labels <=> isomorphic graphs.
struct CanonicalLabel {
  std::string bytes;
  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

struct CanonicalForm {
  Graph graph;
  std::vector<int> position;  // vertex v of the input sits at position[v] in graph
};

inline constexpr int kCanonMaxOrder = 62;

// Individualization-refinement search over equitable partitions, keeping the
// lexicographically smallest graph6 string; automorphisms found along the
// way prune equivalent branches.
CanonicalForm canonical_form(const Graph& g);
CanonicalLabel canonical_label(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

// Automorphisms as images perm[v], found by degree-respecting backtracking;
// stops after `cap` of them (the identity is always first).
std::vector<std::vector<int>> enumerate_automorphisms(const Graph& g, std::size_t cap);

}  // namespace energych

#endif  // ENERGYCH_CANON_HPP
