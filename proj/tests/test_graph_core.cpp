#include "doctest.h"

#include <sstream>

#include "energych/canon.hpp"
#include "energych/coloring.hpp"
#include "energych/enumerate.hpp"
#include "energych/errors.hpp"
#include "energych/families.hpp"
#include "energych/graph.hpp"
#include "energych/graph6.hpp"
#include "oracles.hpp"

using namespace energych;

namespace {

Graph K(int n) { return generate({FamilyKind::Complete, n, 0}); }
Graph C(int n) { return generate({FamilyKind::Cycle, n, 0}); }
Graph P(int n) { return generate({FamilyKind::Path, n, 0}); }
Graph Kab(int a, int b) { return generate({FamilyKind::CompleteBipartite, a, b}); }

}  // namespace

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.has_edge(1, 0));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree_sequence() == std::vector<int>{2, 1, 1, 0});
  g.remove_edge(1, 0);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS(g.add_edge(0, 0));
  CHECK_THROWS(g.add_edge(0, 4));
  CHECK_THROWS(Graph(65));
}

TEST_CASE("complement") {
  CHECK(complement(K(3)) == Graph(3));
  CHECK(complement(Graph(0)).order() == 0);
  const Graph c5 = C(5);
  // explicit isomorphism: i -> 2i mod 5
  const std::vector<int> perm{0, 2, 4, 1, 3};
  CHECK(relabel(c5, perm) == complement(c5));
  for (const Graph& g : enumerate_up_to(6)) CHECK(complement(complement(g)) == g);
}

TEST_CASE("induced subgraph") {
  const std::vector<int> s{0, 1, 2};
  CHECK(induced_subgraph(K(4), s) == K(3));
  const std::vector<int> t{0, 1, 3, 4};
  const Graph two = induced_subgraph(P(5), t);
  CHECK(two.edge_count() == 2);
  CHECK(two.has_edge(0, 1));
  CHECK(two.has_edge(2, 3));
  CHECK(induced_subgraph(C(5), VertexSet{0}).order() == 0);
  const std::vector<int> bad{0, 7};
  CHECK_THROWS(induced_subgraph(K(4), bad));
}

TEST_CASE("deleting a vertex never raises a kept degree") {
  for (const Graph& g : enumerate_up_to(6)) {
    for (int v = 0; v < g.order(); ++v) {
      const VertexSet keep = g.vertices() & ~bit(v);
      const Graph h = induced_subgraph(g, keep);
      int i = 0;
      for (int u : members(keep)) CHECK(h.degree(i++) <= g.degree(u));
    }
  }
}

TEST_CASE("union and join") {
  CHECK(oracle::isomorphic(join(Graph(2), Graph(4)), Kab(2, 4)));
  const Graph u = disjoint_union(K(2), K(2));
  CHECK(u.order() == 4);
  CHECK(u.edge_count() == 2);
  CHECK(u.has_edge(2, 3));
  const Graph w = join(K(1), C(5));
  CHECK(w.edge_count() == 10);
  CHECK(w.degree(0) == 5);
  CHECK_THROWS_AS(disjoint_union(Graph(40), Graph(30)), std::length_error);
  CHECK_THROWS_AS(join(Graph(40), Graph(30)), std::length_error);
}

TEST_CASE("strip isolated") {
  const auto a = strip_isolated(disjoint_union(K(3), Graph(2)));
  CHECK(a.graph == K(3));
  CHECK(a.isolated_count == 2);
  const auto b = strip_isolated(Graph(5));
  CHECK(b.graph.order() == 0);
  CHECK(b.isolated_count == 5);
  CHECK(strip_isolated(Kab(2, 4)).graph == Kab(2, 4));
}

TEST_CASE("degeneracy and cores") {
  for (int n = 1; n <= 7; ++n) CHECK(degeneracy(K(n)) == n - 1);
  CHECK(degeneracy(C(6)) == 2);
  CHECK(degeneracy(Kab(2, 4)) == 2);
  CHECK(degeneracy(Graph(0)) == 0);
  const Graph h = generate({FamilyKind::K24Pendant, 0, 0});
  CHECK(popcount(k_core_vertices(h, 2)) == 6);
  CHECK(k_core_vertices(P(6), 2) == 0);
  for (const Graph& g : enumerate_up_to(7)) CHECK(degeneracy(g) + 1 >= chromatic_number(g));
}

TEST_CASE("connectivity helpers") {
  CHECK(connected_components(disjoint_union(C(4), K(2))).size() == 2);
  CHECK(is_bipartite(C(6)));
  CHECK_FALSE(is_bipartite(C(5)));
  CHECK(is_clique(K(4), 0b1111));
  CHECK(is_independent(Kab(2, 3), 0b11));
}

TEST_CASE("induced pattern search") {
  const Graph two_k2 = disjoint_union(K(2), K(2));
  CHECK_FALSE(has_induced(K(5), two_k2));
  CHECK(has_induced(P(5), two_k2));
  CHECK(has_induced(generate({FamilyKind::K24Pendant, 0, 0}), P(4)));
  CHECK_FALSE(has_induced(K(3), K(4)));
  VertexSet w = 0;
  REQUIRE(find_induced(P(5), two_k2, &w));
  CHECK(oracle::isomorphic(induced_subgraph(P(5), w), two_k2));
}

TEST_CASE("isomorphism") {
  CHECK(is_isomorphic(C(5), complement(C(5))));
  CHECK_FALSE(is_isomorphic(Kab(1, 3), P(4)));
  std::vector<int> p{0, 1, 2, 3};
  std::set<std::string> labels;
  do labels.insert(canonical_label(relabel(P(4), p)).bytes);
  while (std::next_permutation(p.begin(), p.end()));
  CHECK(labels.size() == 1);
}

TEST_CASE("canonical label agrees with brute force up to order 6") {
  std::mt19937 rng(7);
  for (const Graph& g : enumerate_up_to(6)) {
    const auto label = canonical_label(g);
    for (int r = 0; r < 50; ++r) {
      const auto p = oracle::random_permutation(g.order(), rng);
      CHECK(canonical_label(relabel(g, p)) == label);
    }
  }
  // equal labels <=> isomorphic, checked pairwise at order 5
  const auto five = enumerate_graphs(5);
  for (std::size_t i = 0; i < five.size(); ++i)
    for (std::size_t j = 0; j < five.size(); ++j)
      CHECK((is_isomorphic(five[i], five[j]) == oracle::isomorphic(five[i], five[j])));
}

TEST_CASE("automorphisms") {
  const auto autos = enumerate_automorphisms(C(5), 100);
  CHECK(autos.size() == 10);
  CHECK(autos.front() == std::vector<int>{0, 1, 2, 3, 4});
  for (const auto& a : autos) CHECK(relabel(C(5), a) == C(5));
  CHECK(enumerate_automorphisms(K(5), 7).size() == 7);
}

TEST_CASE("enumeration matches brute-force class counts") {
  const int expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) CHECK(enumerate_graphs(n).size() == expected[n]);
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> found;
    for (const Graph& g : enumerate_graphs(n)) found.insert(oracle::min_mask(g));
    CHECK(found == oracle::classes(n));
  }
  std::set<std::string> labels;
  for (const Graph& g : enumerate_graphs(7)) labels.insert(canonical_label(g).bytes);
  CHECK(labels.size() == 1044);
  CHECK(enumerate_up_to(7).size() == 1253);
  CHECK_THROWS_AS(enumerate_graphs(9), std::out_of_range);
  CHECK_THROWS_AS(enumerate_graphs(-1), std::out_of_range);
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_graphs(6) == enumerate_graphs(6));
}

TEST_CASE("graph6 hand encodings") {
  CHECK(g6_encode(K(2)) == "A_");
  CHECK(g6_encode(K(3)) == "Bw");
  CHECK(g6_encode(Graph(0)) == "?");
  CHECK(g6_encode(Graph(1)) == "@");
  // C4 0-1-2-3-0: pairs (0,1)(0,2)(1,2)(0,3)(1,3)(2,3) = 1 0 1 1 0 1 -> 45 + 63
  CHECK(g6_encode(C(4)) == std::string(1, 'C') + char(45 + 63));
  CHECK(g6_decode("Bw") == K(3));
  CHECK(g6_decode("A_") == K(2));
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(g6_decode(""), ParseError);
  CHECK_THROWS_AS(g6_decode("~"), ParseError);  // 126: long-form header
  CHECK_THROWS_AS(g6_decode("Bw?"), ParseError);
  CHECK_THROWS_AS(g6_decode("C"), ParseError);
  CHECK_THROWS_AS(g6_decode("B "), ParseError);
  try {
    g6_decode("A`");  // padding bit set
    FAIL("accepted nonzero padding");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
}

TEST_CASE("graph6 round trip on the corpus") {
  for (const Graph& g : enumerate_up_to(7)) CHECK(g6_decode(g6_encode(g)) == g);
  std::mt19937 rng(3);
  for (int r = 0; r < 20; ++r) {
    Graph h(40);
    for (int u = 0; u < 40; ++u)
      for (int v = u + 1; v < 40; ++v)
        if (rng() % 3 == 0) h.add_edge(u, v);
    CHECK(g6_decode(g6_encode(h)) == h);
  }
}

TEST_CASE("graph6 corpus files") {
  std::istringstream in(">>graph6<<Bw\n\nA_\n@\n");
  const auto graphs = read_g6_corpus(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == K(3));
  CHECK(graphs[1] == K(2));
  std::ostringstream out;
  write_g6_corpus(out, graphs);
  CHECK(out.str() == "Bw\nA_\n@\n");
  std::istringstream bad("Bw\nB!\n");
  CHECK_THROWS_AS(read_g6_corpus(bad), ParseError);
}
