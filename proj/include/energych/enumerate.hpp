#ifndef ENERGYCH_ENUMERATE_HPP
#define ENERGYCH_ENUMERATE_HPP

#include <vector>

#include "energych/graph.hpp"

namespace energych {

inline constexpr int kEnumerateMaxOrder = 8;

// One representative per isomorphism class on n vertices (0 <= n <= 8), each
// in canonical form, ordered by canonical label.
std::vector<Graph> enumerate_graphs(int n);

// All classes of order 0..max_order, grouped by order.
std::vector<Graph> enumerate_up_to(int max_order);

}  // namespace energych

#endif  // ENERGYCH_ENUMERATE_HPP
