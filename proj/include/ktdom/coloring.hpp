#pragma once

#include <utility>
#include <vector>

#include "ktdom/graph.hpp"
#include "ktdom/ktree.hpp"

namespace ktdom {

// Proper (k+2)-coloring of a k-tree in which every vertex of degree >= k+1
// sees all k+2 colors in its closed neighborhood. Colors are 1-based.
struct Coloring {
  int k = 0;
  std::vector<int> colors;  // vertex id -> color in 1..k+2

  int color_count() const { return k + 2; }
  bool operator==(const Coloring&) const = default;
};

// Colors the witness iteratively: the base K_{k+1} gets colors 1..k+1 in
// ascending id order, then each attached vertex x with clique C is colored by
// case analysis on the graph state just before x arrives.
//   Case 1 - some u in C still had degree k: x takes the unique color absent
//            from N[u] + {u}. All such u agree on that color; disagreement is
//            reported as a violation instead of silently picking one.
//   Case 2 - every u in C already had degree > k: exactly two colors are
//            absent from C; x takes the smaller.
// Deterministic given the witness. Throws AlgorithmInvariantViolation when
// the witness is corrupted.
Coloring rainbow_coloring(const KTree& t);

struct ColoringReport {
  // Edges whose endpoints share a color, as (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> properness_violations;
  // Vertices of degree >= k+1 whose closed neighborhood misses a color.
  std::vector<int> rainbow_violations;
  // For every degree-k vertex, the colors absent from its closed
  // neighborhood. On a valid coloring each list has exactly one entry.
  std::vector<std::pair<int, std::vector<int>>> k_vertex_missing;

  bool valid() const {
    return properness_violations.empty() && rainbow_violations.empty();
  }
  bool operator==(const ColoringReport&) const = default;
};

// Re-checks properness and the rainbow property from scratch for any graph
// and total coloring; never trusts how the coloring was produced.
// The default entry point runs the per-vertex checks in parallel (OpenMP);
// the serial variant is the reference the parallel kernel is tested against.
// Both produce identical reports.
ColoringReport verify_rainbow(const Graph& g, int k, const Coloring& c);
ColoringReport verify_rainbow_serial(const Graph& g, int k, const Coloring& c);

}  // namespace ktdom
