#pragma once

#include <cstdint>
#include <vector>

#include "drg/perm_group.hpp"

namespace drg {

/// Right-multiplication action of G on the right cosets H*g.
struct CosetAction {
  PermGroup group;                        ///< degree |G:H|, point 0 is H itself
  std::vector<Permutation> coset_reps;    ///< least element of each coset, by point
};

/// Throws InputError when a generator of H is not in G and BudgetError
/// when |G:H| exceeds `max_degree`.
CosetAction coset_action(const PermGroup &group, const std::vector<Permutation> &subgroup_gens,
                         std::uint64_t max_degree = Budgets{}.coset_degree);

} // namespace drg
