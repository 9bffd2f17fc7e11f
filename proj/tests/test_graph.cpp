#include <algorithm>

#include "doctest.h"
#include "ktdom/errors.hpp"
#include "ktdom/generators.hpp"
#include "ktdom/graph.hpp"
#include "support/corpus.hpp"

using namespace ktdom;

namespace {

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph star3() {  // center 0, leaves 1..3
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(0, 3);
  return g;
}

}  // namespace

TEST_CASE("empty and edgeless graphs") {
  Graph g0(0);
  CHECK(g0.vertex_count() == 0);
  CHECK(g0.edge_count() == 0);

  Graph g3(3);
  for (int v = 0; v < 3; ++v) CHECK(g3.degree(v) == 0);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
}

TEST_CASE("K_4 assembly") {
  const Graph g = complete_graph(4);
  CHECK(g.edge_count() == 6);
  for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
  CHECK(is_clique(g, {0, 1, 2, 3}));
}

TEST_CASE("add_edge rejects self-loops and bad ids, ignores duplicates") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK(g.edge_count() == 1);
  g.add_edge(1, 0);
  g.add_edge(0, 1);
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(2, 2), InvalidEdgeError);
  CHECK_THROWS_AS(g.add_edge(0, 3), InvalidEdgeError);
  CHECK_THROWS_AS(g.add_edge(-1, 0), InvalidEdgeError);
}

TEST_CASE("closed neighborhoods") {
  Graph g(2);
  CHECK(closed_neighborhood(g, 1) == VertexSet{1});

  const Graph star = star3();
  CHECK(closed_neighborhood(star, 0) == VertexSet{0, 1, 2, 3});
  CHECK(closed_neighborhood(star, 2) == VertexSet{0, 2});

  const Graph k4 = complete_graph(4);
  CHECK(closed_neighborhood(k4, 2) == VertexSet{0, 1, 2, 3});
  CHECK_THROWS_AS(closed_neighborhood(k4, 4), std::out_of_range);
}

TEST_CASE("clique, independence and domination predicates") {
  const Graph star = star3();
  CHECK(is_clique(star, {2}));
  CHECK(is_clique(star, {}));
  CHECK_FALSE(is_clique(star, {1, 2}));

  CHECK(is_independent(star, {}));
  CHECK(is_independent(star, {1, 2, 3}));
  CHECK_FALSE(is_independent(star, {0, 1}));

  CHECK(is_dominating(star, {0, 1, 2, 3}));
  CHECK(is_dominating(star, {0}));
  CHECK_FALSE(is_dominating(star, {1}));

  const Graph cat = gen_caterpillar(3);
  CHECK(is_independent(cat, {3, 4, 5}));
}

TEST_CASE("k_vertex_set") {
  CHECK(k_vertex_set(complete_graph(4), 3) == VertexSet{0, 1, 2, 3});
  CHECK(k_vertex_set(gen_tight(3, 4).graph, 3) == VertexSet{12, 13, 14, 15});
  CHECK(k_vertex_set(gen_caterpillar(3), 1) == VertexSet{3, 4, 5});
}

TEST_CASE("neighborhood sizes and adjacency symmetry on random k-trees") {
  for (const auto& e : ktdom_test::corpus_params(24)) {
    const Graph g = ktdom_test::corpus_instance(e).graph;
    long long degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto& nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      CHECK(static_cast<int>(closed_neighborhood(g, v).size()) == g.degree(v) + 1);
      for (int u : nb) CHECK(g.has_edge(u, v));
      degree_sum += g.degree(v);
    }
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK_FALSE(is_dominating(g, {}));
    CHECK(is_independent(g, {}));
    VertexSet all(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
    CHECK(is_dominating(g, all));
  }
}
