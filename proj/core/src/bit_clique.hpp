#pragma once

// Bitset graphs and a colouring-bounded maximum clique search. Private to
// the library.

#include <bit>
#include <cstdint>
#include <vector>

#include "drg/permutation.hpp"

namespace drg::detail {

using Word = std::uint64_t;

struct Bits {
  std::vector<Word> w;

  Bits() = default;
  explicit Bits(std::size_t n) : w((n + 63) / 64, 0) {}

  void set(std::size_t i) { w[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    for (Word x : w)
      if (x)
        return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (Word x : w)
      c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }
  /// Lowest set bit, or npos.
  std::size_t first() const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i])
        return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
    return static_cast<std::size_t>(-1);
  }
};

/// Undirected graph as adjacency bitsets.
class BitGraph {
public:
  explicit BitGraph(std::size_t n) : n_(n), rows_(n, Bits(n)) {}
  std::size_t size() const { return n_; }
  const Bits &row(std::size_t v) const { return rows_[v]; }
  Bits &row(std::size_t v) { return rows_[v]; }

private:
  std::size_t n_;
  std::vector<Bits> rows_;
};

/*
 * Graphs over lists of permutations where u ~ v is decided by whether u
 * and v agree somewhere. For each point x the vertices are bucketed by
 * their image of x; the vertices agreeing with v somewhere are the union
 * of v's buckets, which costs O(total bucket size) per row instead of a
 * pairwise comparison.
 *
 * disagree_everywhere = true gives the derangement-graph adjacency,
 * false gives its complement (minus loops).
 */
BitGraph agreement_graph(const std::vector<Permutation> &verts, bool disagree_everywhere);

struct CliqueSearch {
  std::vector<std::uint32_t> best;  ///< vertex ids, ascending
  bool closed = false;              ///< search finished without hitting the budget
  bool reached_target = false;
  std::uint64_t nodes = 0;
};

/*
 * Branch and bound with greedy colouring bounds. Starts from `seed` (which
 * must be a clique) and only records strictly larger cliques. Stops early
 * once `target` vertices are reached; `node_budget` caps the number of
 * search-tree nodes.
 */
CliqueSearch max_clique_bitset(const BitGraph &g, std::vector<std::uint32_t> seed, std::size_t target,
                               std::uint64_t node_budget);

} // namespace drg::detail
