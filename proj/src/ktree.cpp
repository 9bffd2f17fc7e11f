#include "ktdom/ktree.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "ktdom/errors.hpp"

namespace ktdom {

KTree ktree_init(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  KTree t;
  t.k = k;
  t.graph = Graph(k + 1);
  t.base.reserve(static_cast<std::size_t>(k) + 1);
  for (int u = 0; u <= k; ++u) {
    t.base.push_back(u);
    for (int v = u + 1; v <= k; ++v) t.graph.add_edge(u, v);
  }
  return t;
}

int ktree_attach(KTree& t, const VertexSet& clique) {
  VertexSet c = clique;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (static_cast<int>(c.size()) != t.k) {
    throw InvalidAttachmentError("attachment set must contain exactly k=" +
                                 std::to_string(t.k) + " distinct vertices, got " +
                                 std::to_string(c.size()));
  }
  const int n = t.graph.vertex_count();
  for (int u : c) {
    if (u < 0 || u >= n) {
      throw InvalidAttachmentError("attachment vertex " + std::to_string(u) +
                                   " does not exist");
    }
  }
  if (!is_clique(t.graph, c)) {
    throw InvalidAttachmentError("attachment set is not a clique");
  }
  const int v = t.graph.add_vertex();
  for (int u : c) t.graph.add_edge(u, v);
  t.build_order.push_back({v, std::move(c)});
  return v;
}

long long ktree_edge_count(long long n, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (n < k + 1) throw std::invalid_argument("a k-tree needs at least k+1 vertices");
  return k * n - static_cast<long long>(k) * (k + 1) / 2;
}

RecognitionResult recognize(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  RecognitionResult res;
  const int n = g.vertex_count();
  if (n < k + 1) {
    res.defect = KTreeDefect::too_few_vertices;
    res.reason = "too few vertices (n=" + std::to_string(n) + ", need at least " +
                 std::to_string(k + 1) + ")";
    return res;
  }
  const long long expected = ktree_edge_count(n, k);
  if (g.edge_count() != expected) {
    res.defect = KTreeDefect::bad_edge_count;
    res.reason = "edge count mismatch (m=" + std::to_string(g.edge_count()) +
                 ", expected " + std::to_string(expected) + ")";
    return res;
  }

  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  // Degree-k vertices not yet rejected by the clique check. A rejected
  // vertex stays rejected: while its degree remains k its alive neighborhood
  // is the same fixed set, and degrees never increase during peeling.
  std::set<int> candidates;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    if (deg[static_cast<std::size_t>(v)] == k) candidates.insert(v);
  }

  auto alive_neighbors = [&](int v) {
    VertexSet out;
    for (int u : g.neighbors(v)) {
      if (alive[static_cast<std::size_t>(u)]) out.push_back(u);
    }
    return out;
  };

  int remaining = n;
  res.elimination.order.reserve(static_cast<std::size_t>(n - k - 1));
  while (remaining > k + 1) {
    int pick = -1;
    VertexSet pick_nbrs;
    for (auto it = candidates.begin(); it != candidates.end();) {
      VertexSet nb = alive_neighbors(*it);
      if (is_clique(g, nb)) {
        pick = *it;
        pick_nbrs = std::move(nb);
        candidates.erase(it);
        break;
      }
      it = candidates.erase(it);
    }
    if (pick < 0) {
      bool degree_k_left = false;
      for (int v = 0; v < n && !degree_k_left; ++v) {
        degree_k_left = alive[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == k;
      }
      res.defect = degree_k_left ? KTreeDefect::non_clique_neighborhood
                                 : KTreeDefect::no_degree_k_vertex;
      res.reason = degree_k_left
                       ? "no simplicial k-vertex: every remaining degree-" +
                             std::to_string(k) + " vertex has a non-clique neighborhood"
                       : "no degree-" + std::to_string(k) +
                             " vertex among the remaining " + std::to_string(remaining);
      return res;
    }
    alive[static_cast<std::size_t>(pick)] = 0;
    --remaining;
    res.elimination.order.push_back(pick);
    for (int u : pick_nbrs) {
      int& d = deg[static_cast<std::size_t>(u)];
      --d;
      if (d == k) {
        candidates.insert(u);
      } else if (d == k - 1) {
        candidates.erase(u);
      }
    }
  }

  VertexSet residue;
  residue.reserve(static_cast<std::size_t>(k) + 1);
  for (int v = 0; v < n; ++v) {
    if (alive[static_cast<std::size_t>(v)]) residue.push_back(v);
  }
  if (!is_clique(g, residue)) {
    res.defect = KTreeDefect::residue_not_complete;
    res.reason = "residue is not K_" + std::to_string(k + 1);
    return res;
  }
  res.elimination.residual_base = std::move(residue);
  res.accepted = true;
  return res;
}

KTree ktree_from_elimination(const Graph& g, int k, const EliminationOrder& eo) {
  const int n = g.vertex_count();
  if (static_cast<int>(eo.residual_base.size()) != k + 1 ||
      static_cast<long long>(eo.order.size()) != static_cast<long long>(n) - k - 1) {
    throw AlgorithmInvariantViolation("elimination order has inconsistent sizes");
  }
  if (!is_clique(g, eo.residual_base)) {
    throw AlgorithmInvariantViolation("residual base is not a clique");
  }

  KTree t;
  t.k = k;
  t.graph = Graph(n);
  t.base = eo.residual_base;
  std::sort(t.base.begin(), t.base.end());
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < t.base.size(); ++i) {
    const int u = t.base[i];
    if (u < 0 || u >= n || present[static_cast<std::size_t>(u)]) {
      throw AlgorithmInvariantViolation("residual base is not a vertex set");
    }
    present[static_cast<std::size_t>(u)] = 1;
    for (std::size_t j = i + 1; j < t.base.size(); ++j) t.graph.add_edge(u, t.base[j]);
  }

  // Re-add peeled vertices last-to-first; each one's attachment clique is its
  // neighborhood among the vertices present at that moment.
  t.build_order.reserve(eo.order.size());
  for (auto it = eo.order.rbegin(); it != eo.order.rend(); ++it) {
    const int v = *it;
    if (v < 0 || v >= n || present[static_cast<std::size_t>(v)]) {
      throw AlgorithmInvariantViolation("elimination order is not a permutation of the peeled vertices");
    }
    VertexSet clique;
    for (int u : g.neighbors(v)) {
      if (present[static_cast<std::size_t>(u)]) clique.push_back(u);
    }
    if (static_cast<int>(clique.size()) != k || !is_clique(g, clique)) {
      throw AlgorithmInvariantViolation("vertex " + std::to_string(v) +
                                        " does not attach to a k-clique when replayed");
    }
    present[static_cast<std::size_t>(v)] = 1;
    for (int u : clique) t.graph.add_edge(u, v);
    t.build_order.push_back({v, std::move(clique)});
  }

  if (t.graph.edge_count() != g.edge_count()) {
    throw AlgorithmInvariantViolation("replayed edge set differs from the input graph");
  }
  return t;
}

}  // namespace ktdom
