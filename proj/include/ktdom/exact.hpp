#pragma once

#include <cstdint>

#include "ktdom/graph.hpp"

namespace ktdom {

// Keeps desk-scale runs under a minute while covering n around 30 on k-trees.
inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

struct OracleResult {
  // Minimum size found. Exact when limit_hit is false; an upper bound when
  // the budget ran out; -1 if the budget ran out before any witness existed.
  int size = -1;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  bool limit_hit = false;
};

// Exact independent domination number by branch and bound. Branching rule:
// take the smallest-id undominated vertex v; every independent dominating
// set must hit N[v]; branch on each compatible u in N[v] ascending, and
// forbid u in the later branches so no set is explored twice. Prunes with
// |partial| plus the number of root packing centers the partial set has not
// yet touched. The budget is signalled in-band via limit_hit, never an error.
OracleResult exact_gamma_i(const Graph& g, std::uint64_t node_limit = kDefaultNodeLimit);

// Plain domination number: same search without the independence filter.
OracleResult exact_gamma(const Graph& g, std::uint64_t node_limit = kDefaultNodeLimit);

// |centers| as a certified lower bound on gamma (hence on gamma_i): any
// dominating set needs a distinct vertex inside each of the pairwise
// disjoint closed neighborhoods. Throws InvalidPackingError if they overlap.
int disjoint_neighborhood_lower_bound(const Graph& g, const VertexSet& centers);

// Ascending-id greedy packing of pairwise disjoint closed neighborhoods;
// the root lower bound used by the oracle, exposed for the sandwich checks.
VertexSet greedy_disjoint_packing(const Graph& g);

}  // namespace ktdom
