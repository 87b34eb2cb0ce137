#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "drg/permutation.hpp"

namespace drg {

/// Desk-scale caps shared by every module. All are overridable from the CLI.
struct Budgets {
  std::uint64_t elements = 200000;  ///< max |G| for full enumeration
  std::uint64_t coset_degree = 10000;
  std::uint64_t subgroup = 10000;   ///< max order of an enumerated subgroup
  std::uint64_t nodes = 2000000;    ///< search-tree nodes for clique/coclique/backtracking
};

/*
 * A permutation group given by generators, with a stabilizer chain
 * (base and strong generating set) built by deterministic Schreier-Sims
 * at construction. Base points are chosen greedily as the smallest point
 * moved by a generator that fixes the current base, so two groups built
 * from the same generators have identical chains.
 *
 * Instances are immutable; all queries are const and safe to share
 * between threads.
 */
class PermGroup {
public:
  /// Throws InputError on an empty generator list or mixed degrees.
  explicit PermGroup(std::vector<Permutation> generators);
  /// Same group with the chain's base starting at `base_prefix`.
  PermGroup(std::vector<Permutation> generators, std::vector<Point> base_prefix);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }

  /// Exact order, the product of the basic orbit lengths.
  std::uint64_t order() const { return order_; }

  /// Sifts p through the chain.
  bool contains(const Permutation &p) const;

  std::vector<Point> orbit(Point x) const;
  /// Orbits in order of their least point, each sorted.
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Generators of the point stabilizer G_x (identity if trivial).
  PermGroup stabilizer(Point x) const;

  const std::vector<Point> &base() const { return base_; }
  std::vector<std::size_t> basic_orbit_lengths() const;
  /// Strong generators fixing base points 0..level-1.
  const std::vector<Permutation> &strong_generators(std::size_t level) const;

  /// Visits every element exactly once (chain order, not sorted). Throws
  /// BudgetError when order() > budget.
  void for_each_element(std::uint64_t budget,
                        const std::function<void(const Permutation &)> &visit) const;
  /// All elements, sorted lexicographically.
  std::vector<Permutation> elements(std::uint64_t budget) const;

  /// Uniformly random element (product of random transversal entries).
  Permutation random_element(std::mt19937_64 &rng) const;

  /// Same group, chain built on the base 0, 1, 2, ... so that
  /// least_in_coset() can walk it greedily.
  PermGroup with_ordered_base() const;
  /// Lexicographically least element of the right coset H*g, where H is
  /// this group. Needs a chain from with_ordered_base(); otherwise throws
  /// PreconditionError.
  Permutation least_in_coset(const Permutation &g) const;

private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Permutation> gens_inv;
    /// For each point: -2 outside the orbit, -1 at the base point, else the
    /// index of the generator whose application reached it in the BFS tree.
    std::vector<int> label;
    std::vector<Point> orbit;
  };

  void build(std::vector<Point> base_prefix);
  void compute_orbit(Level &level) const;
  /// Transversal element u with base_point^u == beta.
  Permutation transversal(const Level &level, Point beta) const;
  /// Multiplies y by the inverse transversal element for beta, in place.
  void strip_step(const Level &level, Point beta, std::vector<Point> &y) const;
  /// Sifts from `from_level`; returns the level where sifting stopped
  /// (levels_.size() when it passed all levels) and leaves the residue in y.
  std::size_t strip(std::vector<Point> &y, std::size_t from_level) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

} // namespace drg
