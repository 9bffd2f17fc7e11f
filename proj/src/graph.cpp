#include "ktdom/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ktdom/errors.hpp"

namespace ktdom {

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  n_ = n;
  adj_.resize(static_cast<std::size_t>(n));
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return n_++;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex id " + std::to_string(v) + " outside [0, " +
                            std::to_string(n_) + ")");
  }
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw InvalidEdgeError("edge endpoint outside [0, " + std::to_string(n_) +
                           "): (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  if (u == v) {
    throw InvalidEdgeError("self-loop at vertex " + std::to_string(u));
  }
  auto& au = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;  // idempotent
  au.insert(it, v);
  auto& av = adj_[static_cast<std::size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  const auto& b = adj_[static_cast<std::size_t>(v)];
  if (a.size() <= b.size()) return std::binary_search(a.begin(), a.end(), v);
  return std::binary_search(b.begin(), b.end(), u);
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  const auto& nb = g.neighbors(v);
  VertexSet out;
  out.reserve(nb.size() + 1);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  out.assign(nb.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, nb.end());
  return out;
}

namespace {

// Predicates accept arbitrary member order; sort a copy only when needed.
VertexSet sorted_copy_if_needed(const VertexSet& s) {
  if (std::is_sorted(s.begin(), s.end())) return s;
  VertexSet c = s;
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j]) continue;
      if (!g.has_edge(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  VertexSet sorted = sorted_copy_if_needed(s);
  for (int u : sorted) {
    for (int w : g.neighbors(u)) {
      if (w <= u) continue;  // each pair once
      if (std::binary_search(sorted.begin(), sorted.end(), w)) return false;
    }
  }
  return true;
}

bool is_dominating(const Graph& g, const VertexSet& s) {
  std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int u : s) {
    for (int w : g.neighbors(u)) covered[static_cast<std::size_t>(w)] = 1;
    covered[static_cast<std::size_t>(u)] = 1;
  }
  for (char c : covered) {
    if (!c) return false;
  }
  return true;
}

VertexSet k_vertex_set(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("degree must be non-negative");
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == k) out.push_back(v);
  }
  return out;
}

}  // namespace ktdom
