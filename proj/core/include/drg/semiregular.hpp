#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "drg/blocks.hpp"
#include "drg/derangement_graph.hpp"
#include "drg/perm_group.hpp"
#include "drg/verdict.hpp"

namespace drg {

enum class WitnessMethod { order_coprime, cyclic_scan, backtrack, lifted, catalog };
const char *to_string(WitnessMethod m);

/// A subgroup whose non-identity elements are all derangements.
struct SemiregularWitness {
  std::vector<Permutation> subgroup_generators;
  std::uint64_t order = 1;
  WitnessMethod method = WitnessMethod::cyclic_scan;
};

struct ElusivenessReport {
  Verdict elusive = Verdict::unknown;
  std::optional<Permutation> witness;  ///< prime-order derangement when not elusive
  std::string witness_description;     ///< used when the witness is not materialized
  std::vector<std::uint64_t> primes_checked;
};

/// All cycles have one common length (a fixed point counts as a 1-cycle).
bool is_semiregular_element(const Permutation &p);

/// Enumerates <gens> (BudgetError past `subgroup_budget`) and checks that
/// every non-identity element is a derangement.
bool is_semiregular_subgroup(const std::vector<Permutation> &gens,
                             std::uint64_t subgroup_budget = Budgets{}.subgroup);

/// Primes p dividing |G| but not |G|/degree. Needs a transitive group.
std::vector<std::uint64_t> semiregular_primes(const PermGroup &group);

/// Prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Scans every element when |G| fits the element budget. Larger groups are
/// sampled, which can only prove non-elusiveness.
ElusivenessReport is_elusive(const PermGroup &group, const Budgets &budgets = {});

struct MaxSemiregularResult {
  SemiregularWitness witness;
  bool optimal = false;
  std::uint64_t nodes = 0;
};

/*
 * Largest semiregular subgroup found, in three phases: a prime coprime to
 * the stabilizer order, the best semiregular element, then extension of
 * semiregular subgroups. The extension first adds normalizing elements,
 * then any prime-power-order element; the second pass is exhaustive up to
 * conjugacy, so `optimal` is set when it closes (or the order reaches the
 * degree, which bounds every semiregular subgroup). `target` stops the
 * search early once reached.
 */
MaxSemiregularResult max_semiregular_order(const PermGroup &group, const Budgets &budgets = {},
                                           std::uint64_t target = 0);

struct LiftResult {
  SemiregularWitness witness;
  std::uint64_t kernel_order = 0;
  std::uint64_t block_subgroup_order = 0;
  bool semiregular = false;  ///< false means the lifting hypothesis failed for this input
  std::string message;
};

/// Preimage in G of the block-permutation group <block_gens>. Throws
/// PreconditionError when <block_gens> is not semiregular on the blocks.
LiftResult lift_semiregular(const PermGroup &group, const BlockSystem &system,
                            const std::vector<Permutation> &block_gens, const Budgets &budgets = {});

/// Whether (h_0,...,h_{k-1}; a) is fixed-point-free on Delta^k, from the
/// cycle products of a (never builds Delta^k).
bool product_action_fpf(const std::vector<Permutation> &h, const Permutation &a);

/// Image of (h; a) on Delta^k, points in mixed radix with coordinate 0 least
/// significant. Coordinate i of a point moves to coordinate a[i] and is
/// mapped by h_i.
Permutation product_action_element(const std::vector<Permutation> &h, const Permutation &a);

/// Elusiveness of base wr top in product action, decided from prime-order
/// shapes of base elements. Needs |base| within the element budget and at
/// most four coordinates.
ElusivenessReport wreath_elusive_check(const PermGroup &base, const PermGroup &top, const Budgets &budgets = {});

/// Re-derives the subgroup and checks order and semiregularity.
AuditResult verify_semiregular_witness(const SemiregularWitness &w, const PermGroup &group,
                                       std::uint64_t subgroup_budget = Budgets{}.subgroup);

nlohmann::json to_json(const SemiregularWitness &w);
nlohmann::json to_json(const ElusivenessReport &r);

} // namespace drg
