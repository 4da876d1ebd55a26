#ifndef ENERGYCH_FAMILIES_HPP
#define ENERGYCH_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "energych/graph.hpp"

namespace energych {

enum class FamilyKind {
  Complete,             // K_a
  CompleteBipartite,    // K_{a,b}
  Path,                 // P_a
  Cycle,                // C_a
  A,                    // K_a plus a vertex joined to b of its vertices
  B,                    // K_a plus two pendants on one vertex
  TriangleTwoPendants,  // triangle with pendants on two different vertices
  TwoK2,
  K24Pendant,           // K_{2,4} plus a vertex joined to one degree-4 vertex
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Complete;
  int a = 0;
  int b = 0;

  std::string to_string() const;  // CLI syntax, e.g. "K2,4", "A7,4", "tri2p"
};

// Vertex orders: K_a and K_{a,b} list parts in order; paths and cycles follow
// 0-1-...; A(a,b) joins vertex a to 0..b-1; B(a) hangs a, a+1 on 0; the
// triangle 0,1,2 carries pendants 3 on 0 and 4 on 1; K24Pendant joins 6 to 0.
Graph generate(const FamilySpec& spec);

// Parses "K5", "K2,4", "P4", "C5", "A7,4", "B3", "tri2p", "2K2", "H".
std::optional<FamilySpec> parse_family(std::string_view text);

enum class ExceptionItem { Complete, B, A, TriangleTwoPendants, K24 };

struct ExceptionWitness {
  ExceptionItem item = ExceptionItem::Complete;
  int n = 0;  // K_n, B_n, A_{n,t}
  int t = 0;  // A_{n,t}
  int isolated_count = 0;

  FamilySpec family() const;
  std::string to_string() const;  // e.g. "iii:A4,2"
};

// Rebuilds the witnessed graph with its isolated vertices appended.
Graph regenerate(const ExceptionWitness& w);

// Whether A_{n,t} is on the chromatic exception list.
bool a_family_is_exception(int n, int t);

std::optional<ExceptionWitness> classify_chi_exception(const Graph& g);
std::optional<ExceptionWitness> classify_ch_exception(const Graph& g);

}  // namespace energych

#endif  // ENERGYCH_FAMILIES_HPP
