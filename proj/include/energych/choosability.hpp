#ifndef ENERGYCH_CHOOSABILITY_HPP
#define ENERGYCH_CHOOSABILITY_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "energych/coloring.hpp"
#include "energych/graph.hpp"

namespace energych {

inline constexpr std::uint64_t kDefaultNodeCap = 1'000'000'000;

struct ChoosabilityOptions {
  std::uint64_t node_cap = kDefaultNodeCap;
  // OpenMP workers splitting the top-level branches; 1 runs serially,
  // 0 uses the runtime default.
  int threads = 1;
};

struct ChoosabilityResult {
  bool choosable = true;
  std::optional<ListAssignment> counterexample;  // set iff !choosable
  std::uint64_t nodes = 0;
};

// Exact decision of k-choosability. Throws SearchBudgetExceeded when the
// search would visit more than options.node_cap nodes.
//
// A bad assignment is searched as a multiset of colour classes (the vertex
// set carrying each colour). Splitting a class along the components it
// induces preserves colourability, and a vertex-minimal uncolourable part
// has no private colours, so on a connected k-core every class may be taken
// connected with at least two vertices. Merging two disjoint classes joined
// by an edge keeps an assignment bad, so any two classes either meet or are
// non-adjacent. Lists only grow during the search, so a partial assignment
// that is already colourable is abandoned.
ChoosabilityResult is_k_choosable(const Graph& g, int k, const ChoosabilityOptions& options = {});

// Smallest k in [chi, degeneracy + 1] that is choosable; 0 for the null graph.
int choice_number(const Graph& g, const ChoosabilityOptions& options = {});

// The k-core: g is k-choosable iff this graph is.
Graph choosability_reductions(const Graph& g, int k);

// Thread-safe memo of choice numbers keyed by canonical label.
class ChoiceNumberCache {
 public:
  explicit ChoiceNumberCache(ChoosabilityOptions options = {}) : options_(options) {}

  int choice_number(const Graph& g);
  std::size_t size() const;

 private:
  ChoosabilityOptions options_;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, int> known_;
};

namespace reference {

// Restricted-growth enumeration of list assignments with the private-colour
// rule. Exponentially slower; kept as an independent oracle for tests and
// the benchmark. Requires order * k <= 64.
ChoosabilityResult is_k_choosable(const Graph& g, int k, std::uint64_t node_cap = kDefaultNodeCap);
int choice_number(const Graph& g, std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace reference

}  // namespace energych

#endif  // ENERGYCH_CHOOSABILITY_HPP
