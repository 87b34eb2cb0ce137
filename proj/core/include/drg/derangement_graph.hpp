#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "drg/perm_group.hpp"
#include "drg/verdict.hpp"

namespace drg {

/*
 * The derangement graph of G has the elements of G as vertices, with g ~ h
 * when g*h^-1 is a derangement, i.e. g and h disagree at every point. It is
 * never materialized; searches work on the derangements (for cliques through
 * the identity) or on the other non-identity elements (for intersecting
 * families through the identity) and build bitset adjacency over those.
 */

struct DerangementSet {
  std::vector<Permutation> members;  ///< sorted lexicographically
  std::size_t count() const { return members.size(); }
};

/// Throws BudgetError when |G| exceeds budget.
DerangementSet derangement_set(const PermGroup &group, std::uint64_t element_budget = Budgets{}.elements);

/// g*h^-1 is a derangement. Throws InputError on a degree mismatch.
bool are_adjacent(const Permutation &g, const Permutation &h);

struct CliqueCertificate {
  std::vector<Permutation> vertices;  ///< identity first, rest sorted
  std::size_t size() const { return vertices.size(); }
};

/// A set of elements pairwise agreeing somewhere.
struct CocliqueCertificate {
  std::vector<Permutation> vertices;
  std::size_t size() const { return vertices.size(); }
};

struct KCliqueResult {
  Verdict found = Verdict::unknown;  ///< no = search closed without one
  std::optional<CliqueCertificate> clique;
  std::uint64_t nodes = 0;
  bool sampled = false;  ///< group too large: searched random derangements only
};

/// Looks for a clique of size >= k through the identity. Groups over the
/// element budget are handled by sampling, which can only answer yes or
/// unknown. The sampling RNG is seeded, so results are reproducible.
KCliqueResult find_k_clique(const PermGroup &group, std::size_t k, const Budgets &budgets = {});

struct MaxCliqueResult {
  CliqueCertificate clique;
  bool optimal = false;
  std::uint64_t nodes = 0;
  bool sampled = false;
};

/// Largest clique found; `optimal` only when the search closed or the
/// clique reached the degree (no clique can exceed it).
MaxCliqueResult max_clique(const PermGroup &group, const Budgets &budgets = {});

struct MaxCocliqueResult {
  CocliqueCertificate family;
  bool optimal = false;
  std::uint64_t upper_bound = 0;  ///< |G| / best clique size known
  std::uint64_t nodes = 0;
};

/// Largest intersecting family through the identity, seeded with the
/// stabilizer of point 0. `clique_size` (a known clique size) tightens the
/// upper bound |G|/clique_size. Throws BudgetError when |G| is over budget.
MaxCocliqueResult max_intersecting_family(const PermGroup &group, const Budgets &budgets = {},
                                          std::size_t clique_size = 0);

struct DensityReport {
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::uint64_t stabilizer_order = 0;
  std::uint64_t best_clique = 0;
  bool clique_optimal = false;
  std::string clique_source;  ///< "search" or "sampled"
  std::uint64_t best_coclique = 0;
  bool coclique_optimal = false;
  std::string coclique_source;  ///< "search" or "point-stabilizer" (over budget)
  Rational rho_lower;
  Rational rho_upper;
  std::optional<CliqueCertificate> clique;
  std::optional<CocliqueCertificate> coclique;
  std::uint64_t nodes = 0;
};

/// Requires a transitive group (PreconditionError otherwise). Over-budget
/// parts fall back to what is provable: the stabilizer for the lower bound
/// and a sampled clique for the upper bound, with optimality flags false.
DensityReport density_bounds(const PermGroup &group, const Budgets &budgets = {});

struct AuditResult {
  bool ok = true;
  std::string message;  ///< names the first violating vertex or pair
  explicit operator bool() const { return ok; }
};

// Independent checkers: membership by sifting, pairwise ratios by
// compose/inverse/is_derangement. They share nothing with the searches.
AuditResult verify_clique(const PermGroup &group, const CliqueCertificate &clique);
AuditResult verify_coclique(const PermGroup &group, const CocliqueCertificate &family);
/// Both certificates valid and |clique| * |family| <= |G|.
AuditResult clique_coclique_audit(const CliqueCertificate &clique, const CocliqueCertificate &family,
                                  const PermGroup &group);

nlohmann::json to_json(const CliqueCertificate &c);
nlohmann::json to_json(const CocliqueCertificate &c);
nlohmann::json to_json(const DensityReport &r);

} // namespace drg
