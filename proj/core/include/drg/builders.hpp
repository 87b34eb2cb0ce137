#pragma once

#include <cstdint>
#include <vector>

#include "drg/derangement_graph.hpp"
#include "drg/perm_group.hpp"

namespace drg {

/// The l-subsets of {0..m-1} in lexicographic order; subset i is point i
/// of the subset actions below.
std::vector<std::vector<Point>> subsets_of(std::size_t m, std::size_t l);

/// Action of a permutation of {0..m-1} on the l-subsets.
Permutation action_on_subsets(const Permutation &g, std::size_t l);

/// Alt(m) on l-subsets, generated by the images of (0 1 2) and of the
/// m-cycle (m odd) or the (m-1)-cycle fixing 0 (m even). Needs m >= 3 and
/// 1 <= l <= m/2; throws BudgetError when binomial(m, l) exceeds the
/// coset-degree budget.
PermGroup subsets_action(std::size_t m, std::size_t l, const Budgets &budgets = {});

struct SubsetWitness {
  Permutation on_points;   ///< element of Alt(m)
  Permutation on_subsets;  ///< its image on the l-subsets
};

/// Element with m mod p fixed points and (m - m mod p)/p cycles of length p
/// on the remaining points. Requires p prime, p > l and m mod p <= l - 1 (so
/// p divides m(m-1)...(m-l+1)); throws InputError otherwise, and also when
/// the element would be odd.
SubsetWitness alt_subset_semiregular_witness(std::size_t m, std::size_t l, std::size_t p);

struct WreathSpec {
  PermGroup base;  ///< on Delta
  PermGroup top;   ///< on {0..k-1}
};

/// base wr top in product action on Delta^k (mixed radix, coordinate 0 least
/// significant). Generators are each base generator in each coordinate plus
/// each top generator. The chain order is checked against |base|^k |top|.
PermGroup wreath_product_action(const WreathSpec &spec, const Budgets &budgets = {});

/// {(h^e_0, ..., h^e_{k-1}) : e in {0,1}^k} in product action on Delta^k,
/// identity first. Throws InputError when h is not a derangement.
CliqueCertificate product_clique(const Permutation &h, std::size_t k, const Budgets &budgets = {});

} // namespace drg
