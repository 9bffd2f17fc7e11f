#include "ktdom/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ktdom/errors.hpp"

namespace ktdom {

VertexSet CandidateClass::combined() const {
  VertexSet out;
  out.reserve(zclass.size() + residual.size());
  std::merge(zclass.begin(), zclass.end(), residual.begin(), residual.end(),
             std::back_inserter(out));
  return out;
}

std::vector<VertexSet> color_classes(const Coloring& c, int n) {
  if (static_cast<int>(c.colors.size()) != n) {
    throw std::invalid_argument("coloring is not total on the vertex set");
  }
  std::vector<VertexSet> classes(static_cast<std::size_t>(c.color_count()));
  for (int v = 0; v < n; ++v) {
    const int col = c.colors[static_cast<std::size_t>(v)];
    if (col < 1 || col > c.color_count()) {
      throw std::invalid_argument("color " + std::to_string(col) + " outside 1.." +
                                  std::to_string(c.color_count()));
    }
    classes[static_cast<std::size_t>(col - 1)].push_back(v);
  }
  return classes;
}

namespace {

// Recovers vertex -> color from a class list, insisting on a partition.
std::vector<int> colors_from_classes(const std::vector<VertexSet>& classes, int n) {
  std::vector<int> color_of(static_cast<std::size_t>(n), 0);
  long long assigned = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (int v : classes[i]) {
      if (v < 0 || v >= n || color_of[static_cast<std::size_t>(v)] != 0) {
        throw std::invalid_argument("classes do not partition the vertex set");
      }
      color_of[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
      ++assigned;
    }
  }
  if (assigned != n) throw std::invalid_argument("classes do not cover the vertex set");
  return color_of;
}

// missing_masks[v] = colors absent from N[v], for degree-k vertices only.
// This is the per-vertex form of "v is not dominated by Z_i": color i misses
// N[v] exactly when v lands in S_i.
std::vector<std::uint64_t> missing_color_masks(const Graph& g, int k,
                                               const std::vector<int>& color_of,
                                               int color_count, bool parallel) {
  const int n = g.vertex_count();
  const std::uint64_t full =
      (color_count >= 64) ? ~0ull : (1ull << color_count) - 1;
  std::vector<std::uint64_t> miss(static_cast<std::size_t>(n), 0);
#pragma omp parallel for schedule(static) if (parallel)
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != k) continue;
    std::uint64_t seen = 1ull << (color_of[static_cast<std::size_t>(v)] - 1);
    for (int u : g.neighbors(v)) {
      seen |= 1ull << (color_of[static_cast<std::size_t>(u)] - 1);
    }
    miss[static_cast<std::size_t>(v)] = full & ~seen;
  }
  return miss;
}

std::vector<VertexSet> residual_sets_impl(const Graph& g, int k,
                                          const std::vector<VertexSet>& classes,
                                          bool parallel) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k + 2 > 64) throw std::invalid_argument("k+2 colors exceed the 64-color limit");
  const int n = g.vertex_count();
  const std::vector<int> color_of = colors_from_classes(classes, n);
  const auto miss = missing_color_masks(g, k, color_of, static_cast<int>(classes.size()), parallel);

  std::vector<VertexSet> out(classes.size());
  for (int v = 0; v < n; ++v) {
    std::uint64_t m = miss[static_cast<std::size_t>(v)];
    while (m) {
      out[static_cast<std::size_t>(std::countr_zero(m))].push_back(v);
      m &= m - 1;
    }
  }
  return out;
}

DominationCertificate construct_impl(const KTree& t, bool parallel) {
  const Graph& g = t.graph;
  const int k = t.k;
  const int n = g.vertex_count();

  DominationCertificate cert;
  cert.k = k;
  cert.n = n;
  const long long vk = static_cast<long long>(k_vertex_set(g, k).size());
  const auto [num, den] = bound_value(n, vk, k);
  cert.bound_num = num;
  cert.bound_den = den;

  if (n == k + 1) {
    // K_{k+1}: any single vertex dominates and the class construction would
    // not be independent, so the certificate degenerates to {0}.
    cert.chosen_color = 0;
    cert.chosen = {0};
    return cert;
  }

  const Coloring c = rainbow_coloring(t);
  const auto zs = color_classes(c, n);
  const auto ss = residual_sets_impl(g, k, zs, parallel);

  cert.classes.reserve(zs.size());
  for (std::size_t i = 0; i < zs.size(); ++i) {
    cert.classes.push_back({static_cast<int>(i) + 1, zs[i], ss[i]});
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < cert.classes.size(); ++i) {
    if (cert.classes[i].size() < cert.classes[best].size()) best = i;
  }
  cert.chosen_color = static_cast<int>(best) + 1;
  cert.chosen = cert.classes[best].combined();
  return cert;
}

}  // namespace

std::vector<VertexSet> residual_sets(const Graph& g, int k,
                                     const std::vector<VertexSet>& classes) {
  return residual_sets_impl(g, k, classes, true);
}

std::vector<VertexSet> residual_sets_serial(const Graph& g, int k,
                                            const std::vector<VertexSet>& classes) {
  return residual_sets_impl(g, k, classes, false);
}

DominationCertificate construct_independent_dominating_set(const KTree& t) {
  return construct_impl(t, true);
}

DominationCertificate construct_independent_dominating_set_serial(const KTree& t) {
  return construct_impl(t, false);
}

std::pair<long long, long long> bound_value(long long n, long long vk, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (n < k + 1) throw std::invalid_argument("a k-tree needs at least k+1 vertices");
  if (vk < 0 || vk > n) throw std::invalid_argument("|V_k| must lie in [0, n]");
  return {n + vk, k + 2};
}

namespace {

std::string join_ids(const VertexSet& s, std::size_t cap = 8) {
  std::string out;
  for (std::size_t i = 0; i < s.size() && i < cap; ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  if (s.size() > cap) out += " ...";
  return out;
}

// Direct re-checks of the chosen set; shared by both verify variants.
void check_chosen(const Graph& g, const DominationCertificate& cert,
                  std::vector<std::string>& out) {
  if (!std::is_sorted(cert.chosen.begin(), cert.chosen.end()) ||
      std::adjacent_find(cert.chosen.begin(), cert.chosen.end()) != cert.chosen.end()) {
    out.push_back("chosen set is not a sorted duplicate-free vertex set");
    return;
  }
  for (int v : cert.chosen) {
    if (v < 0 || v >= g.vertex_count()) {
      out.push_back("chosen set contains invalid vertex " + std::to_string(v));
      return;
    }
  }
  if (!is_independent(g, cert.chosen)) {
    out.push_back("independence violation: chosen set contains adjacent vertices");
  }
  if (!is_dominating(g, cert.chosen)) {
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int u : cert.chosen) {
      for (int w : g.neighbors(u)) covered[static_cast<std::size_t>(w)] = 1;
      covered[static_cast<std::size_t>(u)] = 1;
    }
    int missed = -1;
    for (int v = 0; v < g.vertex_count() && missed < 0; ++v) {
      if (!covered[static_cast<std::size_t>(v)]) missed = v;
    }
    out.push_back("domination violation: vertex " + std::to_string(missed) +
                  " is not dominated by the chosen set");
  }
  if (static_cast<long long>(cert.chosen.size()) * cert.bound_den > cert.bound_num) {
    out.push_back("bound violation: (k+2)*|D| = " +
                  std::to_string(static_cast<long long>(cert.chosen.size()) * cert.bound_den) +
                  " exceeds n+|V_k| = " + std::to_string(cert.bound_num));
  }
}

CertificateReport verify_impl(const Graph& g, const DominationCertificate& cert,
                              bool parallel) {
  CertificateReport rep;
  auto& out = rep.violations;
  const int k = cert.k;
  const int n = g.vertex_count();

  if (k < 1 || k + 2 > 64) {
    out.push_back("certificate parameter k out of range");
    return rep;
  }
  if (cert.n != n) {
    out.push_back("certificate built for n=" + std::to_string(cert.n) +
                  " but graph has n=" + std::to_string(n));
    return rep;
  }
  const long long vk = static_cast<long long>(k_vertex_set(g, k).size());
  if (cert.bound_den != k + 2 || cert.bound_num != n + vk) {
    out.push_back("bound fields disagree with the graph: expected " +
                  std::to_string(n + vk) + "/" + std::to_string(k + 2) + ", got " +
                  std::to_string(cert.bound_num) + "/" + std::to_string(cert.bound_den));
  }

  check_chosen(g, cert, out);

  if (n == k + 1) {
    if (!cert.classes.empty()) out.push_back("K_{k+1} certificate must omit classes");
    if (cert.chosen_color != 0) out.push_back("K_{k+1} certificate must mark chosen_color=0");
    if (cert.chosen != VertexSet{0}) {
      out.push_back("K_{k+1} certificate must choose {0}, got {" + join_ids(cert.chosen) + "}");
    }
    return rep;
  }

  if (static_cast<int>(cert.classes.size()) != k + 2) {
    out.push_back("expected " + std::to_string(k + 2) + " classes, got " +
                  std::to_string(cert.classes.size()));
    return rep;
  }
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    if (cert.classes[i].color != static_cast<int>(i) + 1) {
      out.push_back("class " + std::to_string(i) + " carries color " +
                    std::to_string(cert.classes[i].color));
      return rep;
    }
  }

  // The Z_i must form a proper rainbow coloring; rebuild it and re-check.
  std::vector<VertexSet> zs(cert.classes.size());
  for (std::size_t i = 0; i < cert.classes.size(); ++i) zs[i] = cert.classes[i].zclass;
  std::vector<int> color_of;
  try {
    color_of = colors_from_classes(zs, n);
  } catch (const std::invalid_argument& e) {
    out.push_back(std::string("color classes invalid: ") + e.what());
    return rep;
  }
  Coloring c;
  c.k = k;
  c.colors = color_of;
  const ColoringReport crep =
      parallel ? verify_rainbow(g, k, c) : verify_rainbow_serial(g, k, c);
  for (const auto& [u, v] : crep.properness_violations) {
    out.push_back("classes are not independent: edge (" + std::to_string(u) + ", " +
                  std::to_string(v) + ") inside class " +
                  std::to_string(color_of[static_cast<std::size_t>(u)]));
  }
  for (int v : crep.rainbow_violations) {
    out.push_back("rainbow violation at vertex " + std::to_string(v) +
                  ": some class fails to dominate it");
  }

  // S_i definition, pairwise disjointness, and the counting identity.
  const auto ss = residual_sets_impl(g, k, zs, parallel);
  long long total = 0;
  long long stotal = 0;
  std::vector<char> in_some_s(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    if (cert.classes[i].residual != ss[i]) {
      out.push_back("S_" + std::to_string(i + 1) + " does not match its definition");
    }
    for (int v : ss[i]) {
      if (in_some_s[static_cast<std::size_t>(v)]) {
        out.push_back("degree-k vertex " + std::to_string(v) + " falls in two S_i");
      }
      in_some_s[static_cast<std::size_t>(v)] = 1;
    }
    total += cert.classes[i].size();
    stotal += static_cast<long long>(ss[i].size());
  }
  if (stotal != vk) {
    out.push_back("sum |S_i| = " + std::to_string(stotal) + " but |V_k| = " + std::to_string(vk));
  }
  if (total != n + vk) {
    out.push_back("counting identity broken: sum |Z_i|+|S_i| = " + std::to_string(total) +
                  ", expected n+|V_k| = " + std::to_string(n + vk));
  }

  // Every candidate must itself be independent and dominating.
  std::vector<std::string> class_faults(cert.classes.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (int i = 0; i < static_cast<int>(cert.classes.size()); ++i) {
    const VertexSet d = cert.classes[static_cast<std::size_t>(i)].combined();
    std::string fault;
    if (!is_independent(g, d)) {
      fault += "candidate D_" + std::to_string(i + 1) + " is not independent; ";
    }
    if (!is_dominating(g, d)) {
      fault += "candidate D_" + std::to_string(i + 1) + " is not dominating; ";
    }
    class_faults[static_cast<std::size_t>(i)] = std::move(fault);
  }
  for (auto& f : class_faults) {
    if (!f.empty()) out.push_back(f.substr(0, f.size() - 2));
  }

  // Selection rule: minimum size, ties to the smallest color.
  std::size_t best = 0;
  for (std::size_t i = 1; i < cert.classes.size(); ++i) {
    if (cert.classes[i].size() < cert.classes[best].size()) best = i;
  }
  if (cert.chosen_color != static_cast<int>(best) + 1) {
    out.push_back("chosen_color " + std::to_string(cert.chosen_color) +
                  " is not the smallest minimum class (expected " +
                  std::to_string(best + 1) + ")");
  } else if (cert.chosen != cert.classes[best].combined()) {
    out.push_back("chosen set differs from class " + std::to_string(best + 1));
  }
  return rep;
}

}  // namespace

CertificateReport verify_certificate(const Graph& g, const DominationCertificate& cert) {
  return verify_impl(g, cert, true);
}

CertificateReport verify_certificate_serial(const Graph& g, const DominationCertificate& cert) {
  return verify_impl(g, cert, false);
}

}  // namespace ktdom
