#include "ktdom/generators.hpp"

#include <stdexcept>
#include <string>

namespace ktdom {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

KTree gen_complete(int k) { return ktree_init(k); }

KTree gen_random_ktree(int k, int n, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (n < k + 1) {
    throw std::invalid_argument("random k-tree needs n >= k+1, got n=" + std::to_string(n));
  }
  KTree t = ktree_init(k);

  // All k-cliques created so far, in creation order.
  std::vector<VertexSet> registry;
  registry.reserve(static_cast<std::size_t>(k + 1) +
                   static_cast<std::size_t>(k) * static_cast<std::size_t>(n - k - 1));
  for (int drop = 0; drop <= k; ++drop) {
    VertexSet c;
    c.reserve(static_cast<std::size_t>(k));
    for (int u = 0; u <= k; ++u) {
      if (u != drop) c.push_back(u);
    }
    registry.push_back(std::move(c));
  }

  SplitMix64 rng(seed);
  for (int step = 0; step < n - k - 1; ++step) {
    const VertexSet host = registry[static_cast<std::size_t>(rng.below(registry.size()))];
    const int v = ktree_attach(t, host);
    for (int u : host) {
      VertexSet c;
      c.reserve(static_cast<std::size_t>(k));
      for (int w : host) {
        if (w != u) c.push_back(w);
      }
      c.push_back(v);  // v is the largest id so far, order stays ascending
      registry.push_back(std::move(c));
    }
  }
  return t;
}

KTree gen_kpath(int k, int t) {
  if (k < 1 || t < 1) throw std::invalid_argument("k and t must be positive");
  const long long total = static_cast<long long>(k) * t;
  if (total < k + 1) {
    throw std::invalid_argument("k-path needs k*t >= k+1, got k*t=" + std::to_string(total));
  }
  KTree kt = ktree_init(k);
  for (int j = k + 1; j < total; ++j) {
    VertexSet pred;
    pred.reserve(static_cast<std::size_t>(k));
    for (int u = j - k; u < j; ++u) pred.push_back(u);
    ktree_attach(kt, pred);
  }
  return kt;
}

KTree gen_tight(int k, int t) {
  KTree p = gen_kpath(k, t);
  for (int i = 0; i < t; ++i) {
    VertexSet block;
    block.reserve(static_cast<std::size_t>(k));
    for (int u = i * k; u < (i + 1) * k; ++u) block.push_back(u);
    ktree_attach(p, block);
  }
  return p;
}

Graph gen_caterpillar(int m) {
  if (m < 1) throw std::invalid_argument("path length must be positive");
  Graph g(2 * m);
  for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  for (int i = 0; i < m; ++i) g.add_edge(i, m + i);
  return g;
}

}  // namespace ktdom
