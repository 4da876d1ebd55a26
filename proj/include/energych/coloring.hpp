#ifndef ENERGYCH_COLORING_HPP
#define ENERGYCH_COLORING_HPP

#include <optional>
#include <span>
#include <vector>

#include "energych/graph.hpp"

namespace energych {

// Exact chromatic number; 0 for the null graph.
int chromatic_number(const Graph& g);
bool is_k_colorable(const Graph& g, int k);

// Per-vertex colour lists of one common size k over colours 0..U-1.
struct ListAssignment {
  std::vector<std::vector<int>> lists;

  int list_size() const { return lists.empty() ? 0 : static_cast<int>(lists.front().size()); }
  int universe() const;  // 1 + largest colour used

  // Throws std::invalid_argument on wrong vertex count, uneven or repeated
  // entries, or negative colours.
  void validate(int order) const;
};

// Chosen colour per vertex; empty when no proper choice exists.
using ColoringWitness = std::optional<std::vector<int>>;

ColoringWitness is_list_colorable(const Graph& g, const ListAssignment& lists);

namespace detail {

// Backtracking on colour bitsets, smallest remaining list first. Lists may be
// of any size (including empty). Writes the chosen colour indices when given.
bool colorable(const Graph& g, std::span<const std::uint64_t> lists, std::vector<int>* choice);

}  // namespace detail

}  // namespace energych

#endif  // ENERGYCH_COLORING_HPP
