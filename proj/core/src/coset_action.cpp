#include "drg/coset_action.hpp"

#include <map>
#include <string>

#include "drg/error.hpp"

namespace drg {

CosetAction coset_action(const PermGroup &group, const std::vector<Permutation> &subgroup_gens,
                         std::uint64_t max_degree) {
  for (const auto &h : subgroup_gens)
    if (!group.contains(h))
      throw InputError("coset_action: subgroup generator " + h.to_cycle_string() +
                       " is not in the group");
  const std::size_t n = group.degree();
  std::vector<Permutation> hgens = subgroup_gens;
  if (hgens.empty())
    hgens.push_back(Permutation::identity(n));
  PermGroup sub = PermGroup(hgens).with_ordered_base();
  if (group.order() % sub.order() != 0)
    throw InputError("coset_action: subgroup order does not divide group order");
  const std::uint64_t index = group.order() / sub.order();
  if (index > max_degree)
    throw BudgetError("coset action degree " + std::to_string(index) + " exceeds budget " +
                      std::to_string(max_degree));

  std::map<Permutation, Point> id_of;
  std::vector<Permutation> reps;
  reps.push_back(sub.least_in_coset(Permutation::identity(n)));
  id_of.emplace(reps.back(), 0);
  const auto &gens = group.generators();
  std::vector<std::vector<Point>> images(gens.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation key = sub.least_in_coset(compose(reps[i], gens[s]));
      auto [it, fresh] = id_of.emplace(key, static_cast<Point>(reps.size()));
      if (fresh)
        reps.push_back(std::move(key));
      images[s].push_back(it->second);
    }
  }
  if (reps.size() != index)
    throw IntegrityError("coset enumeration found " + std::to_string(reps.size()) +
                         " cosets, expected " + std::to_string(index));

  std::vector<Permutation> action_gens;
  for (auto &img : images)
    action_gens.emplace_back(std::move(img));
  return CosetAction{PermGroup(std::move(action_gens)), std::move(reps)};
}

} // namespace drg
