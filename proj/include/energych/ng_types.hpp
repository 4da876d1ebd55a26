#ifndef ENERGYCH_NG_TYPES_HPP
#define ENERGYCH_NG_TYPES_HPP

#include <optional>
#include <string>
#include <vector>

#include "energych/choosability.hpp"
#include "energych/graph.hpp"

namespace energych {

enum class TypeKind { F1, F1bar, F2 };

std::string to_string(TypeKind kind);

// For F1 the partition (s1, t, s2) is of g; for F1bar it is the F1 partition
// of the complement. For F2, clique/independent/cycle partition g and cycle
// lists the pentagon in cyclic order.
struct TypeWitness {
  TypeKind kind = TypeKind::F1;
  VertexSet s1 = 0;
  VertexSet t = 0;
  VertexSet s2 = 0;
  VertexSet clique = 0;
  VertexSet independent = 0;
  std::vector<int> cycle;
};

// Which empty parts the recognisers accept.
struct TypeConventions {
  bool allow_empty_t = true;        // F1 with T empty
  bool allow_empty_f2_parts = true;  // F2 with K or S empty
};

struct NgSum {
  int ch = 0;
  int ch_complement = 0;
  int sum() const { return ch + ch_complement; }
};

NgSum ng_sum(const Graph& g, ChoiceNumberCache& cache);

// T runs over vertex subsets by size, then lexicographically; S1 and S2 are
// forced by T. The first T satisfying every clause, including
// ch(g[T + S1]) = |T| + 1, is returned.
std::optional<TypeWitness> find_type_F1(const Graph& g, ChoiceNumberCache& cache,
                                        const TypeConventions& conv = {});
std::optional<TypeWitness> find_type_F1bar(const Graph& g, ChoiceNumberCache& cache,
                                           const TypeConventions& conv = {});
std::optional<TypeWitness> find_type_F2(const Graph& g, const TypeConventions& conv = {});

struct EqualityCharacterization {
  NgSum sums;
  bool equality = false;  // ch + ch(complement) == n + 1
  std::optional<TypeWitness> witness;

  // equality <=> some type fires
  bool consistent() const { return equality == witness.has_value(); }
};

EqualityCharacterization check_equality_characterization(const Graph& g, ChoiceNumberCache& cache,
                                                         const TypeConventions& conv = {});

// For an F1 witness whose T is not a clique, |S1| >= |T|^2 with S1 the
// largest part compatible with T. Vacuous for a clique T.
bool check_S1_bound(const TypeWitness& w, const Graph& g);

}  // namespace energych

#endif  // ENERGYCH_NG_TYPES_HPP
