#include "energych/choosability.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <climits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <stdexcept>
#include <string>
#include <vector>

#include "energych/canon.hpp"
#include "energych/errors.hpp"

namespace energych {

namespace {

constexpr int kSearchMaxOrder = 20;
constexpr std::uint64_t kFlushEvery = 4096;
constexpr std::size_t kAutomorphismCap = 20000;

struct ClassTable {
  std::vector<VertexSet> classes;
  std::vector<VertexSet> reach;              // class plus its neighbourhood
  std::vector<std::vector<int>> containing;  // ascending class ids per vertex
};

// Connected vertex subsets of size >= 2, smallest first.
ClassTable connected_classes(const Graph& g) {
  const int m = g.order();
  ClassTable t;
  for (VertexSet s = 1; s < bit(m); ++s)
    if (popcount(s) >= 2 && is_connected(g, s)) t.classes.push_back(s);
  std::stable_sort(t.classes.begin(), t.classes.end(),
                   [](VertexSet a, VertexSet b) { return popcount(a) < popcount(b); });
  for (VertexSet c : t.classes) {
    VertexSet r = c;
    for (VertexSet s = c; s; s &= s - 1) r |= g.neighbors(lowest(s));
    t.reach.push_back(r);
  }
  t.containing.resize(m);
  for (int i = 0; i < static_cast<int>(t.classes.size()); ++i)
    for (VertexSet s = t.classes[i]; s; s &= s - 1) t.containing[lowest(s)].push_back(i);
  return t;
}

struct SearchState {
  std::array<std::uint64_t, kSearchMaxOrder> lists{};
  std::array<VertexSet, 64> chosen{};
  std::array<int, kSearchMaxOrder> cover{};
  std::array<int, kSearchMaxOrder> min_class{};
  int depth = 0;
};

struct SharedProgress {
  std::atomic<int> best_branch{INT_MAX};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> over_budget{false};
  std::uint64_t cap = kDefaultNodeCap;
};

class BadAssignmentSearch {
 public:
  BadAssignmentSearch(const Graph& g, int k, const ClassTable& table, SharedProgress& shared,
                      int branch)
      : g_(g), m_(g.order()), k_(k), table_(table), shared_(shared), branch_(branch),
        flush_every_(std::clamp<std::uint64_t>(shared.cap, 1, kFlushEvery)) {}

  ~BadAssignmentSearch() { flush(); }

  // True when a bad assignment was found; it is left in state.lists.
  bool dfs(SearchState& st) {
    if (++local_nodes_ % flush_every_ == 0 && !keep_going()) return false;
    if (stopped_) return false;

    int v = -1, low = k_;
    bool all_covered = true;
    VertexSet full = 0;
    for (int u = 0; u < m_; ++u) {
      if (st.cover[u] == k_) {
        full |= bit(u);
        continue;
      }
      if (st.cover[u] == 0) all_covered = false;
      if (st.cover[u] < low) v = u, low = st.cover[u];
    }
    const std::span<const std::uint64_t> lists(st.lists.data(), m_);
    if (v < 0) return !detail::colorable(g_, lists, nullptr);
    if (all_covered && detail::colorable(g_, lists, nullptr)) return false;

    for (int idx : table_.containing[v]) {
      if (idx < st.min_class[v]) continue;
      const VertexSet cls = table_.classes[idx];
      if (cls & full) continue;
      bool allowed = true;
      for (VertexSet s = cls; s && allowed; s &= s - 1) allowed = st.min_class[lowest(s)] <= idx;
      for (int d = 0; d < st.depth && allowed; ++d)
        allowed = (st.chosen[d] & cls) || !(st.chosen[d] & table_.reach[idx]);
      if (!allowed) continue;
      if (apply_and_descend(st, v, idx)) return true;
      if (stopped_) return false;
    }
    return false;
  }

  // Adds class idx as a new colour; later classes containing v must not
  // precede it, which makes sibling branches disjoint.
  bool apply_and_descend(SearchState& st, int v, int idx) {
    const VertexSet cls = table_.classes[idx];
    const std::uint64_t colour = std::uint64_t{1} << st.depth;
    for (VertexSet s = cls; s; s &= s - 1) {
      st.lists[lowest(s)] |= colour;
      ++st.cover[lowest(s)];
    }
    const int saved = st.min_class[v];
    st.min_class[v] = idx;
    st.chosen[st.depth++] = cls;
    const bool found = dfs(st);
    if (found) return true;
    --st.depth;
    st.min_class[v] = saved;
    for (VertexSet s = cls; s; s &= s - 1) {
      st.lists[lowest(s)] &= ~colour;
      --st.cover[lowest(s)];
    }
    return false;
  }

  std::uint64_t nodes() const { return local_nodes_; }

 private:
  bool keep_going() {
    flush();
    if (shared_.over_budget.load() || shared_.best_branch.load() < branch_) stopped_ = true;
    if (shared_.nodes.load() > shared_.cap) {
      shared_.over_budget = true;
      stopped_ = true;
    }
    return !stopped_;
  }

  void flush() {
    shared_.nodes += local_nodes_ - flushed_;
    flushed_ = local_nodes_;
  }

  const Graph& g_;
  int m_;
  int k_;
  const ClassTable& table_;
  SharedProgress& shared_;
  int branch_;
  std::uint64_t flush_every_;
  std::uint64_t local_nodes_ = 0;
  std::uint64_t flushed_ = 0;
  bool stopped_ = false;
};

struct ComponentOutcome {
  bool bad = false;
  std::vector<std::uint64_t> lists;  // colour bitsets when bad
  std::uint64_t nodes = 0;
};

// Union-find over class indices joined by the given automorphisms.
std::vector<int> class_orbit_minima(const ClassTable& t, const std::vector<std::vector<int>>& autos) {
  const int count = static_cast<int>(t.classes.size());
  std::unordered_map<VertexSet, int> index;
  for (int i = 0; i < count; ++i) index.emplace(t.classes[i], i);
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& sigma : autos)
    for (int i = 0; i < count; ++i) {
      VertexSet image = 0;
      for (VertexSet s = t.classes[i]; s; s &= s - 1) image |= bit(sigma[lowest(s)]);
      const int a = find(i), b = find(index.at(image));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> minimum(count);
  for (int i = 0; i < count; ++i) minimum[i] = find(i);
  return minimum;
}

// Relabels g so that vertex 0 has the smallest automorphism orbit; the
// returned permutation maps old ids to new ones.
std::vector<int> choose_root(const Graph& g) {
  const int m = g.order();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  const auto autos = enumerate_automorphisms(g, kAutomorphismCap);
  std::vector<VertexSet> orbit(m, 0);
  for (const auto& sigma : autos)
    for (int v = 0; v < m; ++v) orbit[v] |= bit(sigma[v]);
  int root = 0;
  for (int v = 1; v < m; ++v)
    if (popcount(orbit[v]) < popcount(orbit[root])) root = v;
  std::swap(perm[0], perm[root]);
  return perm;
}

// Searches a connected graph of minimum degree >= k.
ComponentOutcome search_component(const Graph& input, int k, const ChoosabilityOptions& options) {
  const int m = input.order();
  if (m > kSearchMaxOrder)
    throw std::length_error("choosability search limited to " + std::to_string(kSearchMaxOrder) +
                            " vertices after reduction");
  if (m * k > 128) throw std::length_error("choosability search needs order * k <= 128");

  const std::vector<int> perm = choose_root(input);
  const Graph g = relabel(input, perm);
  const ClassTable table = connected_classes(g);

  // Every bad multiset has an image under the root stabiliser whose first
  // root class is the least index in its orbit, so only those roots are tried.
  auto autos = enumerate_automorphisms(g, kAutomorphismCap);
  std::erase_if(autos, [](const std::vector<int>& sigma) { return sigma[0] != 0; });
  const std::vector<int> orbit_min = class_orbit_minima(table, autos);
  std::vector<int> roots;
  for (int idx : table.containing[0])
    if (orbit_min[idx] == idx) roots.push_back(idx);

  SharedProgress shared;
  shared.cap = options.node_cap;
  const int branches = static_cast<int>(roots.size());
  std::vector<std::vector<std::uint64_t>> found(branches);
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int b = 0; b < branches; ++b) {
    if (shared.best_branch.load() < b || shared.over_budget.load()) continue;
    SearchState st;
    BadAssignmentSearch search(g, k, table, shared, b);
    if (search.apply_and_descend(st, 0, roots[b])) {
      found[b].assign(st.lists.begin(), st.lists.begin() + m);
      int current = shared.best_branch.load();
      while (b < current && !shared.best_branch.compare_exchange_weak(current, b)) {
      }
    }
  }

  ComponentOutcome out;
  out.nodes = shared.nodes.load();
  if (shared.over_budget.load())
    throw SearchBudgetExceeded("choosability search exceeded node cap " +
                               std::to_string(options.node_cap));
  const int best = shared.best_branch.load();
  if (best != INT_MAX) {
    out.bad = true;
    out.lists.resize(m);
    for (int v = 0; v < m; ++v) out.lists[v] = found[best][perm[v]];
  }
  return out;
}

ListAssignment to_assignment(const std::vector<std::uint64_t>& bits) {
  std::map<int, int> rename;
  ListAssignment la;
  la.lists.resize(bits.size());
  for (std::size_t v = 0; v < bits.size(); ++v)
    for (std::uint64_t s = bits[v]; s; s &= s - 1) {
      const int c = std::countr_zero(s);
      auto [it, inserted] = rename.emplace(c, static_cast<int>(rename.size()));
      la.lists[v].push_back(it->second);
    }
  for (auto& l : la.lists) std::sort(l.begin(), l.end());
  return la;
}

// Lifts a bad assignment on the vertex subset `part` to all of g; vertices
// outside receive private fresh colours.
ListAssignment lift(const Graph& g, int k, VertexSet part, const ListAssignment& inner) {
  ListAssignment la;
  la.lists.resize(g.order());
  int next = inner.universe();
  int i = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (part & bit(v)) {
      la.lists[v] = inner.lists[i++];
    } else {
      for (int j = 0; j < k; ++j) la.lists[v].push_back(next++);
    }
  }
  return la;
}

}  // namespace

ChoosabilityResult is_k_choosable(const Graph& g, int k, const ChoosabilityOptions& options) {
  if (k < 1) throw std::invalid_argument("is_k_choosable: k must be at least 1");
  ChoosabilityResult result;
  const VertexSet core = k_core_vertices(g, k);
  if (!core) return result;
  const Graph reduced = induced_subgraph(g, core);
  const auto core_ids = members(core);
  for (VertexSet comp : connected_components(reduced)) {
    const Graph h = induced_subgraph(reduced, comp);
    VertexSet part = 0;
    for (int v : members(comp)) part |= bit(core_ids[v]);

    if (!is_k_colorable(h, k)) {
      ListAssignment same;
      same.lists.assign(h.order(), std::vector<int>{});
      for (auto& l : same.lists)
        for (int c = 0; c < k; ++c) l.push_back(c);
      result.choosable = false;
      result.counterexample = lift(g, k, part, same);
      return result;
    }
    const ComponentOutcome outcome = search_component(h, k, options);
    result.nodes += outcome.nodes;
    if (outcome.bad) {
      result.choosable = false;
      result.counterexample = lift(g, k, part, to_assignment(outcome.lists));
      return result;
    }
  }
  return result;
}

int choice_number(const Graph& g, const ChoosabilityOptions& options) {
  if (g.order() == 0) return 0;
  const int upper = degeneracy(g) + 1;
  for (int k = chromatic_number(g); k < upper; ++k)
    if (is_k_choosable(g, k, options).choosable) return k;
  return upper;
}

Graph choosability_reductions(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("choosability_reductions: k must be at least 1");
  return induced_subgraph(g, k_core_vertices(g, k));
}

int ChoiceNumberCache::choice_number(const Graph& g) {
  const std::string key = canonical_label(g).bytes;
  {
    std::lock_guard lock(mutex_);
    if (auto it = known_.find(key); it != known_.end()) return it->second;
  }
  const int ch = energych::choice_number(g, options_);
  std::lock_guard lock(mutex_);
  known_.emplace(key, ch);
  return ch;
}

std::size_t ChoiceNumberCache::size() const {
  std::lock_guard lock(mutex_);
  return known_.size();
}

namespace reference {

namespace {

class CanonicalAssignments {
 public:
  CanonicalAssignments(const Graph& g, int k, std::uint64_t cap)
      : g_(g), n_(g.order()), k_(k), cap_(cap), lists_(n_, 0), last_neighbor_(n_, -1) {
    for (int v = 0; v < n_; ++v)
      for (VertexSet s = g.neighbors(v); s; s &= s - 1)
        last_neighbor_[v] = std::max(last_neighbor_[v], lowest(s));
  }

  bool find_bad(int vertex, int used) {
    if (++nodes_ > cap_)
      throw SearchBudgetExceeded("reference choosability search exceeded node cap " +
                                 std::to_string(cap_));
    if (vertex == n_) return !detail::colorable(g_, lists_, nullptr);
    for (int fresh = 0; fresh <= k_; ++fresh) {
      std::uint64_t fresh_bits = 0;
      for (int j = 0; j < fresh; ++j) fresh_bits |= std::uint64_t{1} << (used + j);
      if (used + fresh > 64) break;
      if (choose_old(vertex, used, fresh, fresh_bits, 0, k_ - fresh, 0)) return true;
    }
    return false;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::uint64_t>& lists() const { return lists_; }

 private:
  // Picks `remaining` previously introduced colours, ascending from `from`.
  bool choose_old(int vertex, int used, int fresh, std::uint64_t chosen, int from, int remaining,
                  int depth) {
    if (remaining == 0) {
      lists_[vertex] = chosen;
      if (!private_rule_ok(vertex)) return false;
      return find_bad(vertex + 1, used + fresh);
    }
    for (int c = from; c <= used - remaining; ++c)
      if (choose_old(vertex, used, fresh, chosen | (std::uint64_t{1} << c), c + 1, remaining - 1,
                     depth + 1))
        return true;
    return false;
  }

  // Every vertex whose neighbourhood is now fully placed must have each of
  // its colours in some neighbour's list.
  bool private_rule_ok(int vertex) const {
    for (int v = 0; v <= vertex; ++v) {
      if (last_neighbor_[v] < 0) continue;
      const bool settles = (v == vertex && last_neighbor_[v] < vertex) || last_neighbor_[v] == vertex;
      if (!settles) continue;
      std::uint64_t seen = 0;
      for (VertexSet s = g_.neighbors(v); s; s &= s - 1) seen |= lists_[lowest(s)];
      if (lists_[v] & ~seen) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint64_t> lists_;
  std::vector<int> last_neighbor_;
};

}  // namespace

ChoosabilityResult is_k_choosable(const Graph& g, int k, std::uint64_t node_cap) {
  if (k < 1) throw std::invalid_argument("is_k_choosable: k must be at least 1");
  if (g.order() * k > 64) throw std::length_error("reference search needs order * k <= 64");
  ChoosabilityResult result;
  if (g.order() == 0) return result;
  CanonicalAssignments search(g, k, node_cap);
  if (search.find_bad(0, 0)) {
    result.choosable = false;
    result.counterexample = to_assignment(search.lists());
  }
  result.nodes = search.nodes();
  return result;
}

int choice_number(const Graph& g, std::uint64_t node_cap) {
  if (g.order() == 0) return 0;
  int k = 1;
  while (!is_k_choosable(g, k, node_cap).choosable) ++k;
  return k;
}

}  // namespace reference

}  // namespace energych
