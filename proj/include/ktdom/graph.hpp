#pragma once

#include <vector>

namespace ktdom {

// Vertex subset, kept sorted ascending without duplicates.
using VertexSet = std::vector<int>;

// Undirected simple graph over dense vertex ids 0..n-1. Adjacency lists are
// sorted, so neighbor iteration order is ascending and all derived outputs
// are deterministic. Mutable while being built; treated as immutable once
// handed to coloring/domination/oracle code and safe to share across
// concurrent readers.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  // Appends an isolated vertex, returns its id.
  int add_vertex();

  // Symmetric insert, idempotent on duplicates. Throws InvalidEdgeError on
  // self-loops or endpoints outside [0, n).
  void add_edge(int u, int v);

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// N[v] = N(v) + {v}, ascending.
VertexSet closed_neighborhood(const Graph& g, int v);

// True iff every pair in s is adjacent.
bool is_clique(const Graph& g, const VertexSet& s);

// True iff no two members are adjacent.
bool is_independent(const Graph& g, const VertexSet& s);

// True iff every vertex outside s has a neighbor in s.
bool is_dominating(const Graph& g, const VertexSet& s);

// All vertices of degree exactly k, ascending.
VertexSet k_vertex_set(const Graph& g, int k);

}  // namespace ktdom
