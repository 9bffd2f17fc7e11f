#include <algorithm>

#include "doctest.h"
#include "ktdom/domination.hpp"
#include "ktdom/errors.hpp"
#include "ktdom/generators.hpp"
#include "support/corpus.hpp"

using namespace ktdom;

TEST_CASE("color classes partition the vertex set") {
  const KTree k4 = ktree_init(3);
  const Coloring c = rainbow_coloring(k4);
  const auto classes = color_classes(c, 4);
  REQUIRE(classes.size() == 5);
  CHECK(classes[0] == VertexSet{0});
  CHECK(classes[1] == VertexSet{1});
  CHECK(classes[2] == VertexSet{2});
  CHECK(classes[3] == VertexSet{3});
  CHECK(classes[4].empty());
}

TEST_CASE("single-attachment 2-tree, worked by hand") {
  KTree t = ktree_init(2);
  ktree_attach(t, {1, 2});
  // colors: 0->1, 1->2, 2->3, 3->4; V_2 = {0, 3}
  const Coloring c = rainbow_coloring(t);
  const auto zs = color_classes(c, 4);
  CHECK(zs[0] == VertexSet{0});
  CHECK(zs[1] == VertexSet{1});
  CHECK(zs[2] == VertexSet{2});
  CHECK(zs[3] == VertexSet{3});

  // N[0] shows colors {1,2,3}: 0 lands in S_4; N[3] shows {2,3,4}: 3 in S_1
  const auto ss = residual_sets(t.graph, 2, zs);
  CHECK(ss[0] == VertexSet{3});
  CHECK(ss[1].empty());
  CHECK(ss[2].empty());
  CHECK(ss[3] == VertexSet{0});

  const DominationCertificate cert = construct_independent_dominating_set(t);
  CHECK(cert.bound_num == 6);
  CHECK(cert.bound_den == 4);
  CHECK(cert.bound_floor() == 1);
  REQUIRE(cert.classes.size() == 4);
  CHECK(cert.classes[0].size() == 2);  // {0} + {3}
  CHECK(cert.classes[1].size() == 1);  // {1}
  CHECK(cert.classes[2].size() == 1);  // {2}
  CHECK(cert.classes[3].size() == 2);  // {3} + {0}
  CHECK(cert.chosen_color == 2);
  CHECK(cert.chosen == VertexSet{1});
  CHECK(verify_certificate(t.graph, cert).valid());
}

TEST_CASE("K_{k+1} degenerates to a single vertex") {
  for (int k = 1; k <= 5; ++k) {
    const DominationCertificate cert = construct_independent_dominating_set(ktree_init(k));
    CHECK(cert.chosen_color == 0);
    CHECK(cert.chosen == VertexSet{0});
    CHECK(cert.classes.empty());
    CHECK(cert.bound_num == 2 * (k + 1));
    CHECK(cert.bound_den == k + 2);
    CHECK(verify_certificate(ktree_init(k).graph, cert).valid());
  }
}

TEST_CASE("tight family meets the bound exactly") {
  const KTree t = gen_tight(3, 4);
  const DominationCertificate cert = construct_independent_dominating_set(t);
  CHECK(cert.bound_num == 20);
  CHECK(cert.bound_den == 5);
  CHECK(cert.bound_floor() == 4);
  CHECK(static_cast<long long>(cert.chosen.size()) == 4);
  long long total = 0;
  for (const auto& cl : cert.classes) total += cl.size();
  CHECK(total == 20);
  CHECK(verify_certificate(t.graph, cert).valid());
}

TEST_CASE("bound arithmetic stays exact") {
  CHECK(bound_value(16, 4, 3) == std::pair<long long, long long>{20, 5});
  CHECK(bound_value(4, 4, 3) == std::pair<long long, long long>{8, 5});
  for (int m = 1; m <= 9; ++m) {
    CHECK(bound_value(2 * m, m, 1) == std::pair<long long, long long>{3 * m, 3});
  }
  CHECK_THROWS_AS(bound_value(3, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(bound_value(5, 6, 1), std::invalid_argument);
}

TEST_CASE("residual set properties across the corpus") {
  for (const auto& e : ktdom_test::corpus_params(40)) {
    const KTree t = ktdom_test::corpus_instance(e);
    const Coloring c = rainbow_coloring(t);
    const auto zs = color_classes(c, e.n);
    const auto ss = residual_sets(t.graph, e.k, zs);

    const VertexSet vk = k_vertex_set(t.graph, e.k);
    long long stotal = 0;
    std::vector<char> seen(static_cast<std::size_t>(e.n), 0);
    for (const auto& s : ss) {
      stotal += static_cast<long long>(s.size());
      for (int v : s) {
        CHECK(t.graph.degree(v) == e.k);  // S_i stays inside V_k
        CHECK_FALSE(seen[static_cast<std::size_t>(v)]);
        seen[static_cast<std::size_t>(v)] = 1;
      }
    }
    CHECK(stotal == static_cast<long long>(vk.size()));
  }
}

TEST_CASE("verification catches tampered certificates") {
  const KTree t = gen_tight(2, 3);
  const DominationCertificate cert = construct_independent_dominating_set(t);
  REQUIRE(verify_certificate(t.graph, cert).valid());
  REQUIRE(cert.chosen.size() >= 2);

  DominationCertificate dropped = cert;
  dropped.chosen.erase(dropped.chosen.begin());
  const CertificateReport r1 = verify_certificate(t.graph, dropped);
  CHECK_FALSE(r1.valid());
  bool domination_flagged = false;
  for (const auto& v : r1.violations) {
    domination_flagged |= v.find("domination violation") != std::string::npos;
  }
  CHECK(domination_flagged);

  DominationCertificate padded = cert;
  const int member = padded.chosen.front();
  const int neighbor = t.graph.neighbors(member).front();
  padded.chosen.insert(
      std::lower_bound(padded.chosen.begin(), padded.chosen.end(), neighbor), neighbor);
  const CertificateReport r2 = verify_certificate(t.graph, padded);
  CHECK_FALSE(r2.valid());
  bool independence_flagged = false;
  for (const auto& v : r2.violations) {
    independence_flagged |= v.find("independence violation") != std::string::npos;
  }
  CHECK(independence_flagged);

  DominationCertificate wrong_bound = cert;
  wrong_bound.bound_num -= 1;
  CHECK_FALSE(verify_certificate(t.graph, wrong_bound).valid());
}

TEST_CASE("counting identity and candidate validity on the corpus") {
  for (const auto& e : ktdom_test::corpus_params(40)) {
    const KTree t = ktdom_test::corpus_instance(e);
    const DominationCertificate cert = construct_independent_dominating_set(t);
    CAPTURE(e.k);
    CAPTURE(e.n);
    CAPTURE(e.seed);

    long long total = 0;
    for (const auto& cl : cert.classes) {
      total += cl.size();
      const VertexSet d = cl.combined();
      CHECK(is_independent(t.graph, d));
      CHECK(is_dominating(t.graph, d));
    }
    CHECK(total == cert.bound_num);
    CHECK(static_cast<long long>(cert.chosen.size()) * cert.bound_den <= cert.bound_num);
    CHECK(verify_certificate(t.graph, cert).valid());
  }
}
