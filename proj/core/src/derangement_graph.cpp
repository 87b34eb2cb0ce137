#include "drg/derangement_graph.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "bit_clique.hpp"
#include "drg/error.hpp"

namespace drg {

namespace {

// Largest vertex set given bitset adjacency (20000^2 bits = 50 MB).
constexpr std::size_t kMaxGraphVertices = 20000;
// Derangements kept when sampling a group too large to enumerate.
constexpr std::size_t kSampleVertices = 2048;
constexpr std::size_t kSampleDraws = 200000;
constexpr std::uint64_t kSampleSeed = 0x64726721;

struct Candidates {
  std::vector<Permutation> verts;
  bool sampled = false;
};

// deterministic subset when there are too many vertices for bitsets
void thin_out(std::vector<Permutation> &verts, std::size_t cap) {
  if (verts.size() <= cap)
    return;
  std::mt19937_64 rng(kSampleSeed);
  std::shuffle(verts.begin(), verts.end(), rng);
  verts.resize(cap);
  std::sort(verts.begin(), verts.end());
}

Candidates derangement_candidates(const PermGroup &group, const Budgets &budgets) {
  Candidates c;
  if (group.order() <= budgets.elements) {
    c.verts = derangement_set(group, budgets.elements).members;
    if (c.verts.size() > kMaxGraphVertices) {
      thin_out(c.verts, kMaxGraphVertices);
      c.sampled = true;
    }
    return c;
  }
  c.sampled = true;
  std::mt19937_64 rng(kSampleSeed);
  std::set<Permutation> seen;
  for (std::size_t i = 0; i < kSampleDraws && seen.size() < kSampleVertices; ++i) {
    Permutation g = group.random_element(rng);
    if (is_derangement(g))
      seen.insert(std::move(g));
  }
  c.verts.assign(seen.begin(), seen.end());
  return c;
}

CliqueCertificate rooted_clique(std::size_t degree, const std::vector<Permutation> &verts,
                                const std::vector<std::uint32_t> &ids) {
  CliqueCertificate c;
  c.vertices.push_back(Permutation::identity(degree));
  for (auto id : ids)
    c.vertices.push_back(verts[id]);
  return c;
}

} // namespace

DerangementSet derangement_set(const PermGroup &group, std::uint64_t element_budget) {
  DerangementSet d;
  group.for_each_element(element_budget, [&](const Permutation &g) {
    if (is_derangement(g))
      d.members.push_back(g);
  });
  std::sort(d.members.begin(), d.members.end());
  return d;
}

bool are_adjacent(const Permutation &g, const Permutation &h) {
  if (g.degree() != h.degree())
    throw InputError("are_adjacent: degree mismatch");
  for (Point x = 0; x < g.degree(); ++x)
    if (g[x] == h[x])
      return false;
  return true;
}

KCliqueResult find_k_clique(const PermGroup &group, std::size_t k, const Budgets &budgets) {
  KCliqueResult r;
  const std::size_t n = group.degree();
  if (k <= 1) {
    r.found = Verdict::yes;
    r.clique = CliqueCertificate{{Permutation::identity(n)}};
    return r;
  }
  if (k > n) {
    // two clique members never agree at point 0, so a clique has at most n members
    r.found = Verdict::no;
    return r;
  }
  Candidates c = derangement_candidates(group, budgets);
  r.sampled = c.sampled;
  auto graph = detail::agreement_graph(c.verts, true);
  auto s = detail::max_clique_bitset(graph, {}, k - 1, budgets.nodes);
  r.nodes = s.nodes;
  if (s.reached_target) {
    r.found = Verdict::yes;
    r.clique = rooted_clique(n, c.verts, s.best);
  } else if (s.closed && !c.sampled) {
    r.found = Verdict::no;
  }
  return r;
}

MaxCliqueResult max_clique(const PermGroup &group, const Budgets &budgets) {
  MaxCliqueResult r;
  const std::size_t n = group.degree();
  Candidates c = derangement_candidates(group, budgets);
  r.sampled = c.sampled;
  auto graph = detail::agreement_graph(c.verts, true);
  auto s = detail::max_clique_bitset(graph, {}, n - 1, budgets.nodes);
  r.nodes = s.nodes;
  r.clique = rooted_clique(n, c.verts, s.best);
  r.optimal = s.reached_target || (s.closed && !c.sampled);
  return r;
}

MaxCocliqueResult max_intersecting_family(const PermGroup &group, const Budgets &budgets,
                                          std::size_t clique_size) {
  MaxCocliqueResult r;
  const std::size_t n = group.degree();
  // non-identity elements that fix a point; the family always contains the identity
  std::vector<Permutation> verts;
  group.for_each_element(budgets.elements, [&](const Permutation &g) {
    if (!is_derangement(g) && !g.is_identity())
      verts.push_back(g);
  });
  std::sort(verts.begin(), verts.end());

  std::vector<std::uint32_t> seed;
  for (std::uint32_t i = 0; i < verts.size(); ++i)
    if (verts[i][0] == 0)
      seed.push_back(i);

  r.upper_bound = clique_size > 0 ? group.order() / clique_size : group.order();
  std::vector<std::uint32_t> best = seed;
  if (seed.size() + 1 >= r.upper_bound) {
    r.optimal = true;
  } else if (verts.size() <= kMaxGraphVertices) {
    auto graph = detail::agreement_graph(verts, false);
    auto s = detail::max_clique_bitset(graph, seed, r.upper_bound - 1, budgets.nodes);
    r.nodes = s.nodes;
    best = s.best;
    r.optimal = s.closed || s.reached_target;
  }
  r.family.vertices.push_back(Permutation::identity(n));
  for (auto id : best)
    r.family.vertices.push_back(verts[id]);
  return r;
}

DensityReport density_bounds(const PermGroup &group, const Budgets &budgets) {
  if (!group.is_transitive())
    throw PreconditionError("density_bounds requires a transitive group");
  DensityReport d;
  d.degree = group.degree();
  d.order = group.order();
  d.stabilizer_order = d.order / d.degree;

  auto mc = max_clique(group, budgets);
  d.best_clique = mc.clique.size();
  d.clique_optimal = mc.optimal;
  d.clique_source = mc.sampled ? "sampled" : "search";
  d.nodes += mc.nodes;
  d.clique = mc.clique;

  if (d.order <= budgets.elements) {
    auto mf = max_intersecting_family(group, budgets, mc.clique.size());
    d.best_coclique = mf.family.size();
    d.coclique_optimal = mf.optimal;
    d.coclique_source = "search";
    d.nodes += mf.nodes;
    d.coclique = std::move(mf.family);
  } else {
    // the stabilizer of a point is intersecting by definition
    d.best_coclique = d.stabilizer_order;
    d.coclique_source = "point-stabilizer";
    d.coclique_optimal = d.best_clique * d.stabilizer_order == d.order;
  }
  if (d.best_clique * d.best_coclique > d.order)
    throw IntegrityError("clique and coclique sizes violate the clique-coclique bound");
  d.rho_lower = Rational(d.best_coclique, d.stabilizer_order);
  d.rho_upper = Rational(d.degree, d.best_clique);
  if (d.rho_upper < d.rho_lower)
    throw IntegrityError("density lower bound exceeds upper bound");
  return d;
}

namespace {

AuditResult check_members(const PermGroup &group, const std::vector<Permutation> &verts) {
  if (verts.empty())
    return {false, "certificate is empty"};
  std::set<Permutation> seen;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i].degree() != group.degree())
      return {false, "vertex " + std::to_string(i) + " has the wrong degree"};
    if (!group.contains(verts[i]))
      return {false, "vertex " + std::to_string(i) + " " + verts[i].to_cycle_string() + " is not in the group"};
    if (!seen.insert(verts[i]).second)
      return {false, "vertex " + std::to_string(i) + " is a duplicate"};
  }
  return {};
}

// pairwise test of whether g*h^-1 is a derangement, expecting `want`
AuditResult check_pairs(const std::vector<Permutation> &verts, bool want, const char *what) {
  std::vector<Permutation> inv;
  inv.reserve(verts.size());
  for (const auto &v : verts)
    inv.push_back(inverse(v));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (is_derangement(compose(verts[i], inv[j])) != want)
        return {false, std::string(what) + ": vertices " + std::to_string(i) + " and " + std::to_string(j) +
                           " (" + verts[i].to_cycle_string() + ", " + verts[j].to_cycle_string() + ")"};
  return {};
}

} // namespace

AuditResult verify_clique(const PermGroup &group, const CliqueCertificate &clique) {
  if (auto a = check_members(group, clique.vertices); !a)
    return a;
  if (std::none_of(clique.vertices.begin(), clique.vertices.end(),
                   [](const Permutation &p) { return p.is_identity(); }))
    return {false, "clique does not contain the identity"};
  return check_pairs(clique.vertices, true, "not adjacent");
}

AuditResult verify_coclique(const PermGroup &group, const CocliqueCertificate &family) {
  if (auto a = check_members(group, family.vertices); !a)
    return a;
  return check_pairs(family.vertices, false, "adjacent");
}

AuditResult clique_coclique_audit(const CliqueCertificate &clique, const CocliqueCertificate &family,
                                  const PermGroup &group) {
  if (auto a = verify_clique(group, clique); !a)
    return {false, "clique: " + a.message};
  if (auto a = verify_coclique(group, family); !a)
    return {false, "coclique: " + a.message};
  if (static_cast<unsigned __int128>(clique.size()) * family.size() > group.order())
    return {false, "clique size times coclique size exceeds |G|"};
  return {};
}

nlohmann::json to_json(const CliqueCertificate &c) {
  nlohmann::json j{{"kind", "clique"}, {"size", c.size()}, {"vertices", nlohmann::json::array()}};
  for (const auto &v : c.vertices)
    j["vertices"].push_back(std::vector<Point>(v.images().begin(), v.images().end()));
  return j;
}

nlohmann::json to_json(const CocliqueCertificate &c) {
  nlohmann::json j{{"kind", "coclique"}, {"size", c.size()}, {"vertices", nlohmann::json::array()}};
  for (const auto &v : c.vertices)
    j["vertices"].push_back(std::vector<Point>(v.images().begin(), v.images().end()));
  return j;
}

nlohmann::json to_json(const DensityReport &r) {
  nlohmann::json j{{"degree", r.degree},
                   {"order", r.order},
                   {"stabilizer_order", r.stabilizer_order},
                   {"best_clique", r.best_clique},
                   {"clique_optimal", r.clique_optimal},
                   {"clique_source", r.clique_source},
                   {"best_coclique", r.best_coclique},
                   {"coclique_optimal", r.coclique_optimal},
                   {"coclique_source", r.coclique_source},
                   {"rho_lower", r.rho_lower.str()},
                   {"rho_upper", r.rho_upper.str()},
                   {"search_nodes", r.nodes}};
  if (r.clique)
    j["clique"] = to_json(*r.clique);
  if (r.coclique)
    j["coclique"] = to_json(*r.coclique);
  return j;
}

} // namespace drg
