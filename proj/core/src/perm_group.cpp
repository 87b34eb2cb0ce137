#include "drg/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "drg/error.hpp"

namespace drg {

namespace {

bool is_identity_images(const std::vector<Point> &y) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] != i)
      return false;
  return true;
}

Point smallest_moved(const std::vector<Point> &y) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i] != i)
      return static_cast<Point>(i);
  return 0;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b)
    throw BudgetError("group order exceeds 64 bits");
  return a * b;
}

} // namespace

PermGroup::PermGroup(std::vector<Permutation> generators)
    : PermGroup(std::move(generators), {}) {}

PermGroup::PermGroup(std::vector<Permutation> generators, std::vector<Point> base_prefix)
    : generators_(std::move(generators)) {
  if (generators_.empty())
    throw InputError("group needs at least one generator");
  degree_ = generators_.front().degree();
  for (const auto &g : generators_)
    if (g.degree() != degree_)
      throw InputError("generator degree mismatch");
  for (Point b : base_prefix)
    if (b >= degree_)
      throw InputError("base point out of range");
  build(std::move(base_prefix));
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup({Permutation::identity(degree)});
}

void PermGroup::compute_orbit(Level &level) const {
  level.label.assign(degree_, -2);
  level.orbit.clear();
  level.label[level.base_point] = -1;
  level.orbit.push_back(level.base_point);
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point x = level.orbit[i];
    for (std::size_t s = 0; s < level.gens.size(); ++s) {
      Point y = level.gens[s][x];
      if (level.label[y] == -2) {
        level.label[y] = static_cast<int>(s);
        level.orbit.push_back(y);
      }
    }
  }
}

Permutation PermGroup::transversal(const Level &level, Point beta) const {
  std::vector<std::size_t> path;
  while (level.label[beta] >= 0) {
    auto s = static_cast<std::size_t>(level.label[beta]);
    path.push_back(s);
    beta = level.gens_inv[s][beta];
  }
  Permutation u = Permutation::identity(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = compose(u, level.gens[*it]);
  return u;
}

void PermGroup::strip_step(const Level &level, Point beta, std::vector<Point> &y) const {
  while (level.label[beta] >= 0) {
    const auto &inv = level.gens_inv[static_cast<std::size_t>(level.label[beta])];
    for (auto &v : y)
      v = inv[v];
    beta = inv[beta];
  }
}

std::size_t PermGroup::strip(std::vector<Point> &y, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const Level &level = levels_[l];
    Point beta = y[level.base_point];
    if (level.label[beta] == -2)
      return l;
    strip_step(level, beta, y);
  }
  return levels_.size();
}

void PermGroup::build(std::vector<Point> base_prefix) {
  std::vector<Permutation> strong;
  for (const auto &g : generators_)
    if (!g.is_identity())
      strong.push_back(g);

  auto fixes_base = [&](const Permutation &g, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      if (g[base_[i]] != base_[i])
        return false;
    return true;
  };

  for (Point b : base_prefix)
    if (std::find(base_.begin(), base_.end(), b) == base_.end())
      base_.push_back(b);
  for (const auto &g : strong) {
    if (fixes_base(g, base_.size())) {
      std::vector<Point> img(g.images().begin(), g.images().end());
      base_.push_back(smallest_moved(img));
    }
  }

  levels_.assign(base_.size(), Level{});
  for (std::size_t l = 0; l < base_.size(); ++l) {
    levels_[l].base_point = base_[l];
    for (const auto &g : strong)
      if (fixes_base(g, l)) {
        levels_[l].gens.push_back(g);
        levels_[l].gens_inv.push_back(inverse(g));
      }
    compute_orbit(levels_[l]);
  }

  // Holt's deterministic Schreier-Sims: a level is complete once every
  // Schreier generator sifts through the levels below it.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    Level &level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; oi < level.orbit.size() && !restarted; ++oi) {
      Point beta = level.orbit[oi];
      Permutation u_beta = transversal(level, beta);
      for (std::size_t s = 0; s < level.gens.size(); ++s) {
        const Permutation &gen = level.gens[s];
        Point gamma = gen[beta];
        // h = u_beta * gen * u_gamma^-1
        Permutation us = compose(u_beta, gen);
        std::vector<Point> y(us.images().begin(), us.images().end());
        strip_step(level, gamma, y);
        if (is_identity_images(y))
          continue;
        std::size_t j = strip(y, static_cast<std::size_t>(i) + 1);
        if (j == levels_.size() && is_identity_images(y))
          continue;
        Permutation residue{std::move(y)};
        if (j == levels_.size()) {
          std::vector<Point> img(residue.images().begin(), residue.images().end());
          base_.push_back(smallest_moved(img));
          Level fresh;
          fresh.base_point = base_.back();
          levels_.push_back(std::move(fresh));
        }
        Permutation residue_inv = inverse(residue);
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j && l < levels_.size(); ++l) {
          levels_[l].gens.push_back(residue);
          levels_[l].gens_inv.push_back(residue_inv);
          compute_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(std::min(j, levels_.size() - 1));
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }

  // drop trivial trailing levels (possible when a prefix point is fixed by G)
  std::vector<Level> kept;
  std::vector<Point> kept_base;
  for (auto &level : levels_) {
    if (level.orbit.size() == 1 && level.gens.empty())
      continue;
    kept_base.push_back(level.base_point);
    kept.push_back(std::move(level));
  }
  // a level with orbit length 1 but nonempty generators is kept only if a
  // deeper level needs its generators; orbit length 1 contributes factor 1.
  levels_ = std::move(kept);
  base_ = std::move(kept_base);

  order_ = 1;
  for (const auto &level : levels_)
    order_ = checked_mul(order_, level.orbit.size());
}

bool PermGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    throw InputError("membership: degree mismatch");
  std::vector<Point> y(p.images().begin(), p.images().end());
  std::size_t stop = strip(y, 0);
  return stop == levels_.size() && is_identity_images(y);
}

std::vector<Point> PermGroup::orbit(Point x) const {
  if (x >= degree_)
    throw InputError("orbit: point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orb{x};
  seen[x] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto &g : generators_) {
      Point y = g[orb[i]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x])
      continue;
    auto orb = orbit(x);
    for (Point y : orb)
      seen[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const { return orbit(0).size() == degree_; }

PermGroup PermGroup::stabilizer(Point x) const {
  if (x >= degree_)
    throw InputError("stabilizer: point out of range");
  PermGroup rebased(generators_, {x});
  if (rebased.levels_.empty() || rebased.base_.front() != x)
    return *this;  // x is fixed by the whole group
  if (rebased.levels_.size() < 2)
    return trivial(degree_);
  return PermGroup(rebased.levels_[1].gens);
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto &level : levels_)
    out.push_back(level.orbit.size());
  return out;
}

const std::vector<Permutation> &PermGroup::strong_generators(std::size_t level) const {
  static const std::vector<Permutation> empty;
  return level < levels_.size() ? levels_[level].gens : empty;
}

void PermGroup::for_each_element(std::uint64_t budget,
                                 const std::function<void(const Permutation &)> &visit) const {
  if (order_ > budget)
    throw BudgetError("group order " + std::to_string(order_) + " exceeds enumeration budget " +
                      std::to_string(budget));
  std::vector<std::vector<Permutation>> reps(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l)
    for (Point beta : levels_[l].orbit)
      reps[l].push_back(transversal(levels_[l], beta));

  // g = u_{k-1} * ... * u_0 with u_l in the level-l transversal
  std::function<void(std::size_t, const Permutation &)> rec = [&](std::size_t l,
                                                                   const Permutation &prefix) {
    if (l == 0) {
      for (const auto &u : reps[0])
        visit(compose(prefix, u));
      return;
    }
    for (const auto &u : reps[l])
      rec(l - 1, compose(prefix, u));
  };
  if (levels_.empty()) {
    visit(Permutation::identity(degree_));
    return;
  }
  rec(levels_.size() - 1, Permutation::identity(degree_));
}

std::vector<Permutation> PermGroup::elements(std::uint64_t budget) const {
  std::vector<Permutation> out;
  if (order_ <= budget)
    out.reserve(order_);
  for_each_element(budget, [&](const Permutation &g) { out.push_back(g); });
  std::sort(out.begin(), out.end());
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64 &rng) const {
  Permutation g = Permutation::identity(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[l].orbit.size() - 1);
    g = compose(g, transversal(levels_[l], levels_[l].orbit[pick(rng)]));
  }
  return g;
}

PermGroup PermGroup::with_ordered_base() const {
  std::vector<Point> all(degree_);
  std::iota(all.begin(), all.end(), Point{0});
  return PermGroup(generators_, std::move(all));
}

Permutation PermGroup::least_in_coset(const Permutation &g) const {
  if (g.degree() != degree_)
    throw InputError("least_in_coset: degree mismatch");
  for (std::size_t l = 0; l < base_.size(); ++l)
    if (base_[l] != l)
      throw PreconditionError("least_in_coset needs a chain on the base 0,1,2,...");
  // h = h' * s with h' in the current stabilizer; choose h[b_l] greedily.
  Permutation s = Permutation::identity(degree_);
  for (const auto &level : levels_) {
    Point best = level.orbit.front();
    for (Point gamma : level.orbit)
      if (g[s[gamma]] < g[s[best]])
        best = gamma;
    if (best != level.base_point)
      s = compose(transversal(level, best), s);
  }
  return compose(s, g);
}

} // namespace drg
