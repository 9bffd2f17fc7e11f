#include "doctest.h"
#include "ktdom/errors.hpp"
#include "ktdom/generators.hpp"
#include "ktdom/ktree.hpp"
#include "support/corpus.hpp"

using namespace ktdom;

TEST_CASE("ktree_init") {
  const KTree t1 = ktree_init(1);
  CHECK(t1.graph.vertex_count() == 2);
  CHECK(t1.graph.edge_count() == 1);

  const KTree t3 = ktree_init(3);
  CHECK(t3.graph.vertex_count() == 4);
  CHECK(t3.graph.edge_count() == 6);
  CHECK(t3.base == VertexSet{0, 1, 2, 3});
  CHECK(t3.build_order.empty());

  CHECK_THROWS_AS(ktree_init(0), std::invalid_argument);
}

TEST_CASE("ktree_attach grows by one simplicial vertex") {
  KTree t = ktree_init(1);
  const int v = ktree_attach(t, {0});
  CHECK(v == 2);
  CHECK(t.graph.vertex_count() == 3);
  CHECK(t.graph.edge_count() == 2);
  CHECK(t.graph.neighbors(2) == std::vector<int>{0});

  KTree fig1 = ktree_init(2);
  const int w = ktree_attach(fig1, {1, 2});
  CHECK(w == 3);
  CHECK(fig1.graph.edge_count() == 5);
  CHECK(fig1.graph.neighbors(3) == std::vector<int>{1, 2});

  CHECK_THROWS_AS(ktree_attach(fig1, {0, 1, 2}), InvalidAttachmentError);
  CHECK_THROWS_AS(ktree_attach(fig1, {0, 3}), InvalidAttachmentError);  // not a clique
  CHECK_THROWS_AS(ktree_attach(fig1, {1, 7}), InvalidAttachmentError);  // missing vertex
}

TEST_CASE("edge count closed form") {
  CHECK(ktree_edge_count(4, 3) == 6);
  CHECK(ktree_edge_count(16, 3) == 42);
  CHECK(gen_tight(3, 4).graph.edge_count() == 42);
  for (int m = 1; m <= 6; ++m) {
    CHECK(ktree_edge_count(2 * m, 1) == 2 * m - 1);
    CHECK(gen_caterpillar(m).edge_count() == 2 * m - 1);
  }
  CHECK_THROWS_AS(ktree_edge_count(3, 3), std::invalid_argument);
}

TEST_CASE("recognize accepts K_{k+1} with an empty order") {
  const Graph g = ktree_init(3).graph;
  const RecognitionResult rec = recognize(g, 3);
  REQUIRE(rec.accepted);
  CHECK(rec.elimination.order.empty());
  CHECK(rec.elimination.residual_base == VertexSet{0, 1, 2, 3});
}

TEST_CASE("recognize rejects wrong k and added edges") {
  const Graph k4 = ktree_init(3).graph;
  const RecognitionResult asym = recognize(k4, 2);
  CHECK_FALSE(asym.accepted);
  CHECK(asym.defect == KTreeDefect::bad_edge_count);
  CHECK(asym.reason.find("edge count mismatch") != std::string::npos);

  Graph g = gen_random_ktree(2, 10, 7).graph;
  REQUIRE(recognize(g, 2).accepted);
  // first non-edge
  bool added = false;
  for (int u = 0; u < g.vertex_count() && !added; ++u) {
    for (int v = u + 1; v < g.vertex_count() && !added; ++v) {
      if (!g.has_edge(u, v)) {
        g.add_edge(u, v);
        added = true;
      }
    }
  }
  REQUIRE(added);
  const RecognitionResult rec = recognize(g, 2);
  CHECK_FALSE(rec.accepted);
  CHECK(rec.defect == KTreeDefect::bad_edge_count);
}

TEST_CASE("recognize distinguishes defect kinds") {
  // triangle + isolated vertex: n=4, m=3 matches a tree's count but no
  // degree-1 vertex exists
  Graph tri(4);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  const RecognitionResult r1 = recognize(tri, 1);
  CHECK_FALSE(r1.accepted);
  CHECK(r1.defect == KTreeDefect::no_degree_k_vertex);

  // C_5 plus a hub over four of its vertices: m = 2n-3 for k=2, and the only
  // degree-2 vertex has nonadjacent neighbors
  Graph c5hub(6);
  c5hub.add_edge(0, 1);
  c5hub.add_edge(1, 2);
  c5hub.add_edge(2, 3);
  c5hub.add_edge(3, 4);
  c5hub.add_edge(0, 4);
  for (int v = 0; v <= 3; ++v) c5hub.add_edge(5, v);
  CHECK(c5hub.edge_count() == ktree_edge_count(6, 2));
  const RecognitionResult r2 = recognize(c5hub, 2);
  CHECK_FALSE(r2.accepted);
  CHECK(r2.defect == KTreeDefect::non_clique_neighborhood);

  Graph small(2);
  small.add_edge(0, 1);
  const RecognitionResult r3 = recognize(small, 2);
  CHECK_FALSE(r3.accepted);
  CHECK(r3.defect == KTreeDefect::too_few_vertices);
}

TEST_CASE("round-trip: builder outputs are recognized and replay identically") {
  for (const auto& e : ktdom_test::corpus_params(60)) {
    const KTree t = ktdom_test::corpus_instance(e);
    const RecognitionResult rec = recognize(t.graph, e.k);
    REQUIRE(rec.accepted);
    CHECK(static_cast<int>(rec.elimination.order.size()) == e.n - e.k - 1);

    const KTree rebuilt = ktree_from_elimination(t.graph, e.k, rec.elimination);
    CHECK(rebuilt.graph == t.graph);

    // structural fact: degree-k vertices of a k-tree with n > k+1 are
    // pairwise nonadjacent
    CHECK(is_independent(t.graph, k_vertex_set(t.graph, e.k)));
  }
}

TEST_CASE("recognition works on every generator family") {
  CHECK(recognize(gen_kpath(1, 5).graph, 1).accepted);
  CHECK(recognize(gen_kpath(3, 4).graph, 3).accepted);
  CHECK(recognize(gen_tight(2, 3).graph, 2).accepted);
  CHECK(recognize(gen_tight(4, 5).graph, 4).accepted);
  CHECK(recognize(gen_caterpillar(6), 1).accepted);
  CHECK(recognize(gen_complete(5).graph, 5).accepted);
}

TEST_CASE("ktree_from_elimination rejects corrupted orders") {
  const KTree t = gen_random_ktree(2, 8, 3);
  const RecognitionResult rec = recognize(t.graph, 2);
  REQUIRE(rec.accepted);

  EliminationOrder bad = rec.elimination;
  std::swap(bad.order.front(), bad.order.back());
  // swapping may or may not stay valid depending on the instance; a
  // duplicated entry never does
  bad.order.back() = bad.order.front();
  CHECK_THROWS_AS(ktree_from_elimination(t.graph, 2, bad), AlgorithmInvariantViolation);

  EliminationOrder short_order = rec.elimination;
  short_order.order.pop_back();
  CHECK_THROWS_AS(ktree_from_elimination(t.graph, 2, short_order), AlgorithmInvariantViolation);
}
