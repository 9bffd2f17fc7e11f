#pragma once

#include <cstdint>

#include "ktdom/graph.hpp"
#include "ktdom/ktree.hpp"

namespace ktdom {

// splitmix64. Fixed and fully specified so identical seeds reproduce
// identical instances on every platform and in every language; see the
// README for the constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Unbiased draw from [0, bound) by rejection sampling; bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// K_{k+1}.
KTree gen_complete(int k);

// Random k-tree on n vertices: every attachment clique is drawn uniformly
// from the registry of all k-cliques created so far. The registry starts
// with the k+1 k-subsets of the base; attaching v to C adds the k cliques
// (C - {u}) + {v} and keeps C. Identical (k, n, seed) gives an identical
// edge set. Throws std::invalid_argument when n < k+1.
KTree gen_random_ktree(int k, int n, std::uint64_t seed);

// The k-th power of a path on k*t vertices (edges between indices at
// distance <= k): a k-tree with exactly two degree-k vertices once
// k*t >= k+2, whose t consecutive blocks of k vertices each induce K_k.
// Throws std::invalid_argument when k*t < k+1.
KTree gen_kpath(int k, int t);

// gen_kpath(k, t) plus one pendant vertex per block (ids k*t .. k*t+t-1),
// each attached to its block's clique. The pendant closed neighborhoods are
// pairwise disjoint, which makes the bound tight on this family.
KTree gen_tight(int k, int t);

// Path on m vertices (ids 0..m-1) with a pendant leaf on each (ids
// m..2m-1); a 1-tree with exactly m degree-1 vertices once m >= 2.
Graph gen_caterpillar(int m);

}  // namespace ktdom
