#pragma once

#include <string>
#include <vector>

#include "ktdom/graph.hpp"

namespace ktdom {

struct Attachment {
  int vertex = -1;
  VertexSet clique;  // the k existing vertices the new vertex was joined to
};

// A graph together with the construction witness certifying k-tree-ness:
// the base K_{k+1} plus the attachment log, in construction order.
struct KTree {
  Graph graph;
  int k = 0;
  VertexSet base;
  std::vector<Attachment> build_order;
};

// The smallest k-tree, K_{k+1}, with an empty attachment log.
// Throws std::invalid_argument for k < 1.
KTree ktree_init(int k);

// Joins a fresh vertex to `clique` and logs the attachment. Returns the new
// vertex id (= previous vertex count). Throws InvalidAttachmentError unless
// `clique` is a k-clique of the current graph.
int ktree_attach(KTree& t, const VertexSet& clique);

// Closed form k*n - k*(k+1)/2: the base contributes k*(k+1)/2 edges and each
// attachment adds k. Throws std::invalid_argument when n < k+1.
long long ktree_edge_count(long long n, int k);

enum class KTreeDefect {
  none,
  too_few_vertices,
  bad_edge_count,
  no_degree_k_vertex,
  non_clique_neighborhood,
  residue_not_complete,
};

// Reverse construction order: peeling the vertices in sequence, each has
// degree exactly k with a clique neighborhood at removal time, and the
// residue is K_{k+1}.
struct EliminationOrder {
  std::vector<int> order;   // peeled vertices, n - k - 1 of them
  VertexSet residual_base;  // the k+1 vertices left standing
};

struct RecognitionResult {
  bool accepted = false;
  EliminationOrder elimination;  // meaningful only when accepted
  KTreeDefect defect = KTreeDefect::none;
  std::string reason;
};

// Greedy simplicial peeling: after an O(1) edge-count precheck, repeatedly
// removes the smallest-id vertex of current degree k whose neighborhood is a
// clique. Accepts exactly the k-trees for the declared k; k is never
// inferred because some (n, m) pairs satisfy the closed form for several k.
RecognitionResult recognize(const Graph& g, int k);

// Replays an elimination order in reverse through the attachment rule and
// returns the reconstructed witness, which has the identical edge set.
// Throws AlgorithmInvariantViolation when the order does not replay cleanly
// (a corrupted order or a graph it does not belong to).
KTree ktree_from_elimination(const Graph& g, int k, const EliminationOrder& eo);

}  // namespace ktdom
