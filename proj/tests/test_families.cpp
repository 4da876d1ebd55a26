#include "doctest.h"

#include "energych/canon.hpp"
#include "energych/charpoly.hpp"
#include "energych/coloring.hpp"
#include "energych/enumerate.hpp"
#include "energych/families.hpp"
#include "energych/spectral.hpp"
#include "oracles.hpp"

using namespace energych;

namespace {

Graph K(int n) { return generate({FamilyKind::Complete, n, 0}); }
Graph A(int n, int t) { return generate({FamilyKind::A, n, t}); }
Graph B(int n) { return generate({FamilyKind::B, n, 0}); }
Graph Kab(int a, int b) { return generate({FamilyKind::CompleteBipartite, a, b}); }

}  // namespace

TEST_CASE("generators") {
  const Graph a = A(5, 2);
  CHECK(a.order() == 6);
  CHECK(a.edge_count() == 10 + 2);
  CHECK(a.has_edge(5, 0));
  CHECK(a.has_edge(5, 1));
  CHECK_FALSE(a.has_edge(5, 2));
  // t = n - 1 leaves exactly one non-edge
  for (int n = 2; n <= 7; ++n) {
    Graph almost = K(n + 1);
    almost.remove_edge(0, n);
    CHECK(oracle::isomorphic(A(n, n - 1), almost));
    CHECK_FALSE(oracle::isomorphic(A(n, n - 1), K(n + 1)));
  }
  CHECK(oracle::isomorphic(B(1), generate({FamilyKind::Path, 3, 0})));
  CHECK(B(3).order() == 5);
  const Graph tri = generate({FamilyKind::TriangleTwoPendants, 0, 0});
  CHECK(tri.order() == 5);
  CHECK(tri.degree_sequence() == std::vector<int>{3, 3, 2, 1, 1});
  const Graph h = generate({FamilyKind::K24Pendant, 0, 0});
  CHECK(h.order() == 7);
  CHECK(h.edge_count() == 9);
  CHECK(oracle::isomorphic(Kab(2, 4), join(Graph(2), Graph(4))));

  CHECK_THROWS(generate({FamilyKind::A, 4, 4}));
  CHECK_THROWS(generate({FamilyKind::A, 4, 0}));
  CHECK_THROWS(generate({FamilyKind::B, 0, 0}));
  CHECK_THROWS(generate({FamilyKind::Cycle, 2, 0}));
}

TEST_CASE("family strings") {
  for (const char* s : {"K5", "K2,4", "P4", "C5", "A7,4", "B3", "tri2p", "2K2", "H"}) {
    const auto spec = parse_family(s);
    REQUIRE(spec);
    CHECK(spec->to_string() == s);
  }
  CHECK(parse_family("K2,5")->kind == FamilyKind::CompleteBipartite);
  CHECK(parse_family("A7,4")->a == 7);
  CHECK(parse_family("A7,4")->b == 4);
  for (const char* s : {"", "K", "Kx", "A7", "A7,", "Q3", "K2,4,5", "Bw", "K-1"})
    CHECK_FALSE(parse_family(s).has_value());
}

TEST_CASE("chromatic exception recogniser") {
  CHECK_FALSE(classify_chi_exception(A(7, 4)).has_value());
  const auto k5 = classify_chi_exception(disjoint_union(K(5), Graph(3)));
  REQUIRE(k5);
  CHECK(k5->item == ExceptionItem::Complete);
  CHECK(k5->n == 5);
  CHECK(k5->isolated_count == 3);
  CHECK_FALSE(classify_chi_exception(Kab(2, 4)).has_value());
  CHECK_FALSE(classify_chi_exception(Graph(0)).has_value());
  const auto empty = classify_chi_exception(Graph(4));
  REQUIRE(empty);
  CHECK(empty->n == 1);
  CHECK(empty->isolated_count == 3);
  const auto b1 = classify_chi_exception(B(1));
  REQUIRE(b1);
  CHECK(b1->item == ExceptionItem::B);
}

TEST_CASE("choice exception recogniser") {
  const auto v = classify_ch_exception(Kab(2, 4));
  REQUIRE(v);
  CHECK(v->item == ExceptionItem::K24);
  CHECK(v->to_string() == "v:K2,4");
  CHECK_FALSE(classify_ch_exception(Kab(2, 5)).has_value());
  const auto b3 = classify_ch_exception(B(3));
  REQUIRE(b3);
  CHECK(b3->item == ExceptionItem::B);
  CHECK(b3->n == 3);
}

TEST_CASE("A family table") {
  for (int n = 2; n <= 7; ++n)
    for (int t = 1; t <= n - 1; ++t) {
      const auto w = classify_chi_exception(A(n, t));
      CHECK(w.has_value() == !(n == 7 && t == 4));
      CHECK(a_family_is_exception(n, t) == !(n == 7 && t == 4));
    }
  for (int n = 8; n <= 9; ++n)
    for (int t = 1; t <= n - 1; ++t)
      CHECK(a_family_is_exception(n, t) == (t == 1 || t == 2 || t == n - 1));
  CHECK_FALSE(a_family_is_exception(4, 0));
  CHECK_FALSE(a_family_is_exception(4, 4));
}

TEST_CASE("A family membership matches energy at orders 8 and 9") {
  // spot check beyond the exhaustive range; ties are settled exactly
  for (int n = 8; n <= 9; ++n)
    for (int t = 1; t <= n - 1; ++t) {
      const Graph g = A(n, t);
      const auto s = eigenvalues(g);
      const int chi = chromatic_number(g);
      bool below = energy_of(s) < 2.0 * chi - 1e-6;
      if (std::abs(energy_of(s) - 2.0 * chi) <= 1e-6) {
        const auto sign = compare_energy_exact(g, s, 2 * chi);
        REQUIRE(sign);
        below = *sign < 0;
      }
      CHECK(below == a_family_is_exception(n, t));
      CHECK(classify_chi_exception(g).has_value() == a_family_is_exception(n, t));
    }
}

TEST_CASE("classification is stable under relabeling") {
  std::mt19937 rng(29);
  for (const Graph& g : enumerate_up_to(6)) {
    const auto w = classify_ch_exception(g);
    for (int r = 0; r < 5; ++r) {
      const auto u = classify_ch_exception(relabel(g, oracle::random_permutation(g.order(), rng)));
      REQUIRE(u.has_value() == w.has_value());
      if (w) CHECK(u->to_string() == w->to_string());
    }
  }
}

TEST_CASE("witnesses regenerate the input") {
  for (const Graph& g : enumerate_up_to(7)) {
    if (const auto w = classify_ch_exception(g)) CHECK(is_isomorphic(regenerate(*w), g));
    if (const auto w = classify_chi_exception(g)) CHECK(is_isomorphic(regenerate(*w), g));
  }
}
