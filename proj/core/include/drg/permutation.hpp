#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace drg {

using Point = std::uint32_t;

/*
 * A bijection of {0, ..., n-1} stored as its image sequence.
 *
 * Permutations act on the right: the image of x under p is p[x], and
 * compose(p, q) applies p first, then q, so that
 *
 *   compose(p, q)[x] == q[p[x]].
 *
 * Comparison is lexicographic on the image sequence; every "least"
 * witness in the library refers to this order.
 */
class Permutation {
public:
  /// Identity on one point.
  Permutation() : images_{0} {}

  /// Validates that `images` is a bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses disjoint-cycle notation such as "(1,2,3)(4,5)". Points are
  /// shifted down by one when `one_based` is set. "()" is the identity.
  static Permutation from_cycles(std::size_t degree, std::string_view cycles,
                                 bool one_based = false);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;

  /// 0-based disjoint-cycle string, fixed points omitted; "()" for identity.
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a,
                                          const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation &, const Permutation &);
  friend Permutation inverse(const Permutation &);
  friend Permutation power(const Permutation &, std::int64_t);
};

/// Throws InputError when degrees differ.
Permutation compose(const Permutation &p, const Permutation &q);
Permutation inverse(const Permutation &p);
/// p^k for any integer k (negative powers invert).
Permutation power(const Permutation &p, std::int64_t k);

inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return compose(p, q);
}

/// Conjugate p^g = g^-1 p g.
Permutation conjugate(const Permutation &p, const Permutation &g);

/// Sorted cycle lengths, fixed points included as 1s.
std::vector<std::size_t> cycle_type(const Permutation &p);
/// Cycles of length >= 2, each starting at its least point, sorted by that point.
std::vector<std::vector<Point>> cycles(const Permutation &p);

bool is_derangement(const Permutation &p);
std::size_t fixed_point_count(const Permutation &p);
/// lcm of the cycle lengths.
std::uint64_t element_order(const Permutation &p);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace drg
