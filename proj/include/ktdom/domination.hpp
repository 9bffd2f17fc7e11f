#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ktdom/coloring.hpp"
#include "ktdom/graph.hpp"
#include "ktdom/ktree.hpp"

namespace ktdom {

// One of the k+2 candidate independent dominating sets D_i = Z_i + S_i,
// where Z_i is color class i and S_i holds the degree-k vertices Z_i fails
// to dominate.
struct CandidateClass {
  int color = 0;       // 1..k+2
  VertexSet zclass;    // Z_i
  VertexSet residual;  // S_i, disjoint from Z_i

  long long size() const {
    return static_cast<long long>(zclass.size() + residual.size());
  }
  VertexSet combined() const;  // D_i, ascending

  bool operator==(const CandidateClass&) const = default;
};

// All k+2 candidates, the selected minimum, and the bound as an exact
// integer pair. For n == k+1 the construction degenerates: the certificate
// carries the single-vertex set {0} and no classes, marked by
// chosen_color == 0.
struct DominationCertificate {
  int k = 0;
  int n = 0;
  std::vector<CandidateClass> classes;
  int chosen_color = 0;
  VertexSet chosen;
  long long bound_num = 0;  // n + |V_k|
  long long bound_den = 0;  // k + 2

  long long bound_floor() const { return bound_num / bound_den; }
  bool operator==(const DominationCertificate&) const = default;
};

// Partition of the vertices into the k+2 (possibly empty) color classes.
std::vector<VertexSet> color_classes(const Coloring& c, int n);

// S_i = { v of degree k : N[v] does not meet Z_i }. Every degree-k vertex of
// a validly colored k-tree lands in exactly one S_i; the computation itself
// takes the definition at face value and works for any proper coloring.
// Parallel kernel plus the serial reference it is tested against.
std::vector<VertexSet> residual_sets(const Graph& g, int k,
                                     const std::vector<VertexSet>& classes);
std::vector<VertexSet> residual_sets_serial(const Graph& g, int k,
                                            const std::vector<VertexSet>& classes);

// Colors the witness, forms all k+2 candidates, and selects the minimum
// (ties break to the smallest color index). The average of the candidate
// sizes is (n + |V_k|) / (k+2), so the chosen set meets the bound.
DominationCertificate construct_independent_dominating_set(const KTree& t);
DominationCertificate construct_independent_dominating_set_serial(const KTree& t);

// (n + vk, k + 2) as exact integers; never floating point.
std::pair<long long, long long> bound_value(long long n, long long vk, int k);

struct CertificateReport {
  std::vector<std::string> violations;
  bool valid() const { return violations.empty(); }
};

// Re-derives every certificate invariant from scratch: the chosen set is
// independent and dominating, the classes re-color the graph properly with
// the rainbow property, each S_i matches its definition, the S_i are
// pairwise disjoint, the sizes sum to n + |V_k|, and the chosen set meets
// the bound by exact integer comparison.
CertificateReport verify_certificate(const Graph& g, const DominationCertificate& cert);
CertificateReport verify_certificate_serial(const Graph& g, const DominationCertificate& cert);

}  // namespace ktdom
