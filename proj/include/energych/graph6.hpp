#ifndef ENERGYCH_GRAPH6_HPP
#define ENERGYCH_GRAPH6_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "energych/graph.hpp"

namespace energych {

// graph6 with the single-byte order header only (0 <= n <= 62).
inline constexpr int kGraph6MaxOrder = 62;

std::string g6_encode(const Graph& g);
Graph g6_decode(std::string_view text);

// One graph per line; blank lines and ">>" header lines are skipped.
std::vector<Graph> read_g6_corpus(std::istream& in);
void write_g6_corpus(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace energych

#endif  // ENERGYCH_GRAPH6_HPP
