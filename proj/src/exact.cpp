#include "ktdom/exact.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>
#include <string>

#include "ktdom/errors.hpp"

namespace ktdom {

namespace {

// Fixed-width bitset sized at runtime; word count is shared by all sets of
// one search, so operations skip bounds bookkeeping.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : bits_(n), words_(static_cast<std::size_t>((n + 63) / 64), 0) {}

  void set(int i) { words_[static_cast<std::size_t>(i >> 6)] |= 1ull << (i & 63); }
  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
  }
  void operator|=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  }
  bool all() const {
    if (bits_ == 0) return true;
    for (std::size_t w = 0; w + 1 < words_.size(); ++w) {
      if (words_[w] != ~0ull) return false;
    }
    const int tail = bits_ - 64 * (static_cast<int>(words_.size()) - 1);
    const std::uint64_t tail_mask = (tail == 64) ? ~0ull : (1ull << tail) - 1;
    return words_.back() == tail_mask;
  }
  int first_clear() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t inv = ~words_[w];
      if (inv) {
        const int i = 64 * static_cast<int>(w) + std::countr_zero(inv);
        return i < bits_ ? i : -1;
      }
    }
    return -1;
  }
  // |this & ~other|
  int count_andnot(const Bits& other) const {
    int c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      c += std::popcount(words_[w] & ~other.words_[w]);
    }
    return c;
  }
  // Ascending members of this & ~a & ~b.
  template <typename Fn>
  void for_each_andnot(const Bits& a, const Bits& b, Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w] & ~a.words_[w] & ~b.words_[w];
      while (word) {
        fn(64 * static_cast<int>(w) + std::countr_zero(word));
        word &= word - 1;
      }
    }
  }

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Searcher {
  const Graph& g;
  const bool independent;
  const std::uint64_t limit;

  int n;
  std::vector<Bits> closed;  // closed neighborhood of every vertex
  Bits centers;              // root packing
  int root_lb = 0;

  std::uint64_t nodes = 0;
  bool limit_hit = false;
  bool optimal_reached = false;  // incumbent met the root lower bound
  int best = INT_MAX;
  std::vector<int> best_set;
  std::vector<int> cur;

  Searcher(const Graph& graph, bool indep, std::uint64_t node_limit)
      : g(graph), independent(indep), limit(node_limit), n(graph.vertex_count()) {
    closed.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      Bits b(n);
      b.set(v);
      for (int u : g.neighbors(v)) b.set(u);
      closed.push_back(std::move(b));
    }
    centers = Bits(n);
    for (int v : greedy_disjoint_packing(g)) {
      centers.set(v);
      ++root_lb;
    }
  }

  // dominated = union of closed[p] over the partial set; for the independent
  // variant this doubles as the conflict mask, since a vertex is dominated
  // exactly when it is in or adjacent to the partial set.
  void dfs(const Bits& dominated, const Bits& pmask, Bits forbidden) {
    if (limit_hit || optimal_reached) return;
    if (nodes >= limit) {
      limit_hit = true;
      return;
    }
    ++nodes;

    if (dominated.all()) {
      if (static_cast<int>(cur.size()) < best) {
        best = static_cast<int>(cur.size());
        best_set = cur;
        if (best == root_lb) optimal_reached = true;
      }
      return;
    }
    const int unhit = std::max(centers.count_andnot(dominated), 1);
    if (static_cast<int>(cur.size()) + unhit >= best) return;

    const int v = dominated.first_clear();
    const Bits& blocker = independent ? dominated : pmask;
    std::vector<int> children;
    closed[static_cast<std::size_t>(v)].for_each_andnot(forbidden, blocker,
                                                        [&](int u) { children.push_back(u); });
    for (int u : children) {
      Bits d2 = dominated;
      d2 |= closed[static_cast<std::size_t>(u)];
      Bits p2 = pmask;
      p2.set(u);
      cur.push_back(u);
      dfs(d2, p2, forbidden);
      cur.pop_back();
      if (limit_hit || optimal_reached) return;
      forbidden.set(u);
    }
  }

  OracleResult run() {
    dfs(Bits(n), Bits(n), Bits(n));
    OracleResult res;
    res.nodes_explored = nodes;
    res.limit_hit = limit_hit;
    if (best != INT_MAX) {
      res.size = best;
      res.witness = best_set;
      std::sort(res.witness.begin(), res.witness.end());
    }
    return res;
  }
};

}  // namespace

OracleResult exact_gamma_i(const Graph& g, std::uint64_t node_limit) {
  if (node_limit == 0) throw std::invalid_argument("node limit must be positive");
  return Searcher(g, /*indep=*/true, node_limit).run();
}

OracleResult exact_gamma(const Graph& g, std::uint64_t node_limit) {
  if (node_limit == 0) throw std::invalid_argument("node limit must be positive");
  return Searcher(g, /*indep=*/false, node_limit).run();
}

int disjoint_neighborhood_lower_bound(const Graph& g, const VertexSet& centers) {
  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int c : centers) {
    for (int w : closed_neighborhood(g, c)) {
      if (owner[static_cast<std::size_t>(w)] >= 0) {
        throw InvalidPackingError("closed neighborhoods of " +
                                  std::to_string(owner[static_cast<std::size_t>(w)]) + " and " +
                                  std::to_string(c) + " both contain " + std::to_string(w));
      }
      owner[static_cast<std::size_t>(w)] = c;
    }
  }
  return static_cast<int>(centers.size());
}

VertexSet greedy_disjoint_packing(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  VertexSet centers;
  for (int v = 0; v < n; ++v) {
    if (used[static_cast<std::size_t>(v)]) continue;
    bool free = true;
    for (int u : g.neighbors(v)) {
      if (used[static_cast<std::size_t>(u)]) {
        free = false;
        break;
      }
    }
    if (!free) continue;
    used[static_cast<std::size_t>(v)] = 1;
    for (int u : g.neighbors(v)) used[static_cast<std::size_t>(u)] = 1;
    centers.push_back(v);
  }
  return centers;
}

}  // namespace ktdom
