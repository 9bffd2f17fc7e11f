#include "ktdom/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ktdom/errors.hpp"

namespace ktdom {

namespace {

// Color sets are tracked as bitmasks; color c occupies bit c-1.
std::uint64_t full_mask(int k) { return (k + 2 >= 64) ? ~0ull : (1ull << (k + 2)) - 1; }

void check_color_domain(const Graph& g, int k, const Coloring& c) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k + 2 > 64) throw std::invalid_argument("k+2 colors exceed the 64-color limit");
  if (static_cast<int>(c.colors.size()) != g.vertex_count()) {
    throw std::invalid_argument("coloring is not total: " + std::to_string(c.colors.size()) +
                                " colors for " + std::to_string(g.vertex_count()) + " vertices");
  }
  for (int col : c.colors) {
    if (col < 1 || col > k + 2) {
      throw std::invalid_argument("color " + std::to_string(col) + " outside 1.." +
                                  std::to_string(k + 2));
    }
  }
}

}  // namespace

Coloring rainbow_coloring(const KTree& t) {
  const Graph& g = t.graph;
  const int k = t.k;
  const int n = g.vertex_count();
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k + 2 > 64) throw std::invalid_argument("k+2 colors exceed the 64-color limit");
  if (static_cast<int>(t.base.size()) != k + 1 || !is_clique(g, t.base)) {
    throw AlgorithmInvariantViolation("witness base is not a (k+1)-clique");
  }
  if (static_cast<long long>(t.build_order.size()) != static_cast<long long>(n) - k - 1) {
    throw AlgorithmInvariantViolation("witness attachment log has the wrong length");
  }

  Coloring c;
  c.k = k;
  c.colors.assign(static_cast<std::size_t>(n), 0);

  // Rebuild state: which vertices are present and their degree so far.
  std::vector<char> present(static_cast<std::size_t>(n), 0);
  std::vector<int> pdeg(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < t.base.size(); ++i) {
    const int u = t.base[i];
    present[static_cast<std::size_t>(u)] = 1;
    pdeg[static_cast<std::size_t>(u)] = k;
    c.colors[static_cast<std::size_t>(u)] = static_cast<int>(i) + 1;
  }

  const std::uint64_t full = full_mask(k);
  for (const Attachment& at : t.build_order) {
    const int x = at.vertex;
    if (x < 0 || x >= n || present[static_cast<std::size_t>(x)] ||
        static_cast<int>(at.clique.size()) != k) {
      throw AlgorithmInvariantViolation("corrupted attachment for vertex " + std::to_string(x));
    }

    int assigned = 0;
    bool case_one = false;
    for (int u : at.clique) {
      if (!present[static_cast<std::size_t>(u)]) {
        throw AlgorithmInvariantViolation("attachment clique member not present yet");
      }
      if (pdeg[static_cast<std::size_t>(u)] != k) continue;
      // Case 1: N[u] + {u} in the current graph is a properly colored
      // (k+1)-clique, so exactly one color is missing.
      std::uint64_t seen = 1ull << (c.colors[static_cast<std::size_t>(u)] - 1);
      for (int w : g.neighbors(u)) {
        if (present[static_cast<std::size_t>(w)]) {
          seen |= 1ull << (c.colors[static_cast<std::size_t>(w)] - 1);
        }
      }
      const std::uint64_t missing = full & ~seen;
      if (std::popcount(missing) != 1) {
        throw AlgorithmInvariantViolation(
            "degree-k attachment neighbor " + std::to_string(u) + " is missing " +
            std::to_string(std::popcount(missing)) + " colors instead of one");
      }
      const int color = std::countr_zero(missing) + 1;
      if (case_one && color != assigned) {
        throw AlgorithmInvariantViolation(
            "degree-k attachment neighbors disagree on the missing color");
      }
      assigned = color;
      case_one = true;
    }

    if (!case_one) {
      // Case 2: the clique shows exactly k colors, leaving two choices.
      std::uint64_t seen = 0;
      for (int u : at.clique) seen |= 1ull << (c.colors[static_cast<std::size_t>(u)] - 1);
      const std::uint64_t missing = full & ~seen;
      if (std::popcount(seen) != k || std::popcount(missing) != 2) {
        throw AlgorithmInvariantViolation("attachment clique is not showing k distinct colors");
      }
      assigned = std::countr_zero(missing) + 1;
    }

    c.colors[static_cast<std::size_t>(x)] = assigned;
    present[static_cast<std::size_t>(x)] = 1;
    pdeg[static_cast<std::size_t>(x)] = k;
    for (int u : at.clique) ++pdeg[static_cast<std::size_t>(u)];
  }
  return c;
}

namespace {

// Everything verify needs to know about a single vertex; computed
// independently per vertex so the parallel kernel can fill these in any
// order and the merge stays deterministic.
struct VertexCheck {
  std::vector<int> clashing_neighbors;  // neighbors u > v with color[u] == color[v]
  bool rainbow_bad = false;
  bool degree_k = false;
  std::vector<int> missing;
};

VertexCheck check_vertex(const Graph& g, int k, const Coloring& c, std::uint64_t full, int v) {
  VertexCheck out;
  const int cv = c.colors[static_cast<std::size_t>(v)];
  std::uint64_t seen = 1ull << (cv - 1);
  for (int u : g.neighbors(v)) {
    seen |= 1ull << (c.colors[static_cast<std::size_t>(u)] - 1);
    if (u > v && c.colors[static_cast<std::size_t>(u)] == cv) {
      out.clashing_neighbors.push_back(u);
    }
  }
  const int deg = g.degree(v);
  if (deg >= k + 1) {
    out.rainbow_bad = (seen != full);
  } else if (deg == k) {
    out.degree_k = true;
    std::uint64_t missing = full & ~seen;
    while (missing) {
      out.missing.push_back(std::countr_zero(missing) + 1);
      missing &= missing - 1;
    }
  }
  return out;
}

ColoringReport assemble(const Graph& g, const std::vector<VertexCheck>& checks) {
  ColoringReport rep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const VertexCheck& ck = checks[static_cast<std::size_t>(v)];
    for (int u : ck.clashing_neighbors) rep.properness_violations.emplace_back(v, u);
    if (ck.rainbow_bad) rep.rainbow_violations.push_back(v);
    if (ck.degree_k) rep.k_vertex_missing.emplace_back(v, ck.missing);
  }
  return rep;
}

}  // namespace

ColoringReport verify_rainbow(const Graph& g, int k, const Coloring& c) {
  check_color_domain(g, k, c);
  const int n = g.vertex_count();
  const std::uint64_t full = full_mask(k);
  std::vector<VertexCheck> checks(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (int v = 0; v < n; ++v) {
    checks[static_cast<std::size_t>(v)] = check_vertex(g, k, c, full, v);
  }
  return assemble(g, checks);
}

ColoringReport verify_rainbow_serial(const Graph& g, int k, const Coloring& c) {
  check_color_domain(g, k, c);
  const std::uint64_t full = full_mask(k);
  ColoringReport rep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int cv = c.colors[static_cast<std::size_t>(v)];
    std::uint64_t seen = 1ull << (cv - 1);
    for (int u : g.neighbors(v)) {
      seen |= 1ull << (c.colors[static_cast<std::size_t>(u)] - 1);
      if (u > v && c.colors[static_cast<std::size_t>(u)] == cv) {
        rep.properness_violations.emplace_back(v, u);
      }
    }
    const int deg = g.degree(v);
    if (deg >= k + 1) {
      if (seen != full) rep.rainbow_violations.push_back(v);
    } else if (deg == k) {
      std::vector<int> missing;
      std::uint64_t miss = full & ~seen;
      while (miss) {
        missing.push_back(std::countr_zero(miss) + 1);
        miss &= miss - 1;
      }
      rep.k_vertex_missing.emplace_back(v, std::move(missing));
    }
  }
  return rep;
}

}  // namespace ktdom
