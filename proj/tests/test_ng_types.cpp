#include "doctest.h"

#include "energych/choosability.hpp"
#include "energych/coloring.hpp"
#include "energych/enumerate.hpp"
#include "energych/families.hpp"
#include "energych/ng_types.hpp"
#include "oracles.hpp"

using namespace energych;

namespace {

Graph K(int n) { return generate({FamilyKind::Complete, n, 0}); }
Graph C(int n) { return generate({FamilyKind::Cycle, n, 0}); }
Graph P(int n) { return generate({FamilyKind::Path, n, 0}); }
Graph Kab(int a, int b) { return generate({FamilyKind::CompleteBipartite, a, b}); }

// Re-checks every defining clause of an F1 partition of g directly.
bool valid_f1(const Graph& g, const TypeWitness& w, ChoiceNumberCache& cache) {
  if ((w.s1 | w.t | w.s2) != g.vertices()) return false;
  if ((w.s1 & w.t) || (w.s1 & w.s2) || (w.t & w.s2)) return false;
  if (!w.s1) return false;
  for (int u : members(w.s1 | w.s2))
    for (int v : members(w.s1 | w.s2))
      if (g.has_edge(u, v)) return false;
  for (int u : members(w.s1))
    for (int v : members(w.t))
      if (!g.has_edge(u, v)) return false;
  for (int u : members(w.s2)) {
    bool misses = false;
    for (int v : members(w.t)) misses |= !g.has_edge(u, v);
    if (!misses) return false;
  }
  return cache.choice_number(induced_subgraph(g, w.s1 | w.t)) == popcount(w.t) + 1;
}

bool valid_f2(const Graph& g, const TypeWitness& w) {
  VertexSet c = 0;
  for (int v : w.cycle) c |= bit(v);
  if (w.cycle.size() != 5 || popcount(c) != 5) return false;
  if ((w.clique | w.independent | c) != g.vertices()) return false;
  if ((w.clique & w.independent) || (w.clique & c) || (w.independent & c)) return false;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const bool adjacent = (i + 1) % 5 == j || (j + 1) % 5 == i;
      if (i != j && g.has_edge(w.cycle[i], w.cycle[j]) != adjacent) return false;
    }
  }
  for (int u : members(w.clique)) {
    for (int v : members(w.clique))
      if (u != v && !g.has_edge(u, v)) return false;
    for (int v : w.cycle)
      if (!g.has_edge(u, v)) return false;
  }
  for (int u : members(w.independent)) {
    for (int v : members(w.independent))
      if (g.has_edge(u, v)) return false;
    for (int v : w.cycle)
      if (g.has_edge(u, v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Nordhaus-Gaddum sums") {
  ChoiceNumberCache cache;
  CHECK(ng_sum(C(5), cache).ch == 3);
  CHECK(ng_sum(C(5), cache).ch_complement == 3);
  for (int n = 1; n <= 6; ++n) {
    const NgSum s = ng_sum(K(n), cache);
    CHECK(s.ch == n);
    CHECK(s.ch_complement == 1);
  }
  CHECK(ng_sum(P(4), cache).sum() == 4);
}

TEST_CASE("type F1 examples") {
  ChoiceNumberCache cache;
  const Graph star = Kab(1, 3);
  const auto w = find_type_F1(star, cache);
  REQUIRE(w);
  CHECK(w->t == bit(0));
  CHECK(w->s1 == 0b1110);
  CHECK(w->s2 == 0);
  for (int n = 2; n <= 6; ++n) {
    const auto k = find_type_F1(K(n), cache);
    REQUIRE(k);
    CHECK(popcount(k->t) == n - 1);
    CHECK(popcount(k->s1) == 1);
    CHECK(k->s2 == 0);
    CHECK(valid_f1(K(n), *k, cache));
  }
  CHECK_FALSE(find_type_F1(generate({FamilyKind::TwoK2, 0, 0}), cache).has_value());
  const auto k1 = find_type_F1(K(1), cache);
  REQUIRE(k1);
  CHECK(k1->t == 0);
  CHECK(k1->s1 == 1);
  CHECK_THROWS(find_type_F1(Graph(11), cache));
}

TEST_CASE("empty T is refused when asked") {
  ChoiceNumberCache cache;
  TypeConventions strict;
  strict.allow_empty_t = false;
  CHECK_FALSE(find_type_F1(K(1), cache, strict).has_value());
  CHECK(find_type_F1(Kab(1, 3), cache, strict).has_value());
}

TEST_CASE("type F2 examples") {
  const auto c5 = find_type_F2(C(5));
  REQUIRE(c5);
  CHECK(c5->clique == 0);
  CHECK(c5->independent == 0);
  CHECK(valid_f2(C(5), *c5));
  const Graph jk = join(K(2), C(5));
  const auto w = find_type_F2(jk);
  REQUIRE(w);
  CHECK(w->clique == 0b11);
  CHECK(w->independent == 0);
  CHECK(valid_f2(jk, *w));
  CHECK_FALSE(find_type_F2(C(6)).has_value());
  TypeConventions strict;
  strict.allow_empty_f2_parts = false;
  CHECK_FALSE(find_type_F2(C(5), strict).has_value());
  CHECK_THROWS(find_type_F2(Graph(13)));
}

TEST_CASE("equality characterization examples") {
  ChoiceNumberCache cache;
  const auto c5 = check_equality_characterization(C(5), cache);
  CHECK(c5.equality);
  CHECK(c5.consistent());
  const auto p4 = check_equality_characterization(P(4), cache);
  CHECK_FALSE(p4.equality);
  CHECK(p4.consistent());
  const auto k1 = check_equality_characterization(K(1), cache);
  CHECK(k1.equality);
  CHECK(k1.consistent());
  REQUIRE(k1.witness);
  CHECK(k1.witness->kind == TypeKind::F1);
}

TEST_CASE("S1 bound") {
  ChoiceNumberCache cache;
  TypeWitness w;
  w.kind = TypeKind::F1;
  w.t = 0b11;
  w.s1 = 0b111100;
  CHECK(check_S1_bound(w, Kab(2, 4)));
  w.s1 = 0b1111100;
  CHECK(check_S1_bound(w, Kab(2, 5)));
  const auto k = find_type_F1(K(4), cache);
  REQUIRE(k);
  CHECK(check_S1_bound(*k, K(4)));
  // K2,3: only three vertices can sit over a non-clique T of size 2
  w.t = 0b11;
  w.s1 = 0b11100;
  CHECK_FALSE(check_S1_bound(w, Kab(2, 3)));
  TypeWitness f2;
  f2.kind = TypeKind::F2;
  CHECK_THROWS(check_S1_bound(f2, C(5)));
}

TEST_CASE("Nordhaus-Gaddum bound and equality types on the corpus") {
  ChoiceNumberCache cache;
  int equalities = 0;
  for (const Graph& g : enumerate_up_to(6)) {
    const int n = g.order();
    const Graph gbar = complement(g);
    const int ch = cache.choice_number(g), chb = cache.choice_number(gbar);
    CHECK(ch + chb <= n + 1);

    const auto f1 = find_type_F1(g, cache);
    const auto f1bar = find_type_F1bar(g, cache);
    const auto f2 = find_type_F2(g);
    if (f1) {
      CHECK(valid_f1(g, *f1, cache));
      if (!is_clique(g, f1->t)) CHECK(check_S1_bound(*f1, g));
    }
    if (f1bar) CHECK(valid_f1(gbar, *f1bar, cache));
    if (f2) CHECK(valid_f2(g, *f2));
    // F1bar is F1 of the complement
    CHECK(f1bar.has_value() == find_type_F1(gbar, cache).has_value());
    CHECK(find_type_F1bar(gbar, cache).has_value() == f1.has_value());

    const bool eq = ch + chb == n + 1;
    equalities += eq;
    CHECK(eq == (f1 || f1bar || f2));
    CHECK(check_equality_characterization(g, cache).consistent());
  }
  CHECK(equalities > 0);
}
