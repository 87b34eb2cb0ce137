#include "drg/semiregular.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "drg/error.hpp"

namespace drg {

namespace {

constexpr std::uint64_t kSampleSeed = 0x73656d69;
constexpr std::size_t kSampleDraws = 20000;

bool is_prime_small(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && prime_divisors(n).size() == 1; }

/// Elements of <gens>, or nullopt once more than `limit` are found.
std::optional<std::vector<Permutation>> enumerate_subgroup(const std::vector<Permutation> &gens,
                                                           std::uint64_t limit) {
  const std::size_t n = gens.front().degree();
  std::unordered_set<Permutation, PermutationHash> seen{Permutation::identity(n)};
  std::vector<Permutation> out{Permutation::identity(n)};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto &g : gens) {
      Permutation h = compose(out[i], g);
      if (seen.insert(h).second) {
        if (out.size() >= limit)
          return std::nullopt;
        out.push_back(std::move(h));
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// G's elements indexed in lexicographic order, with multiplication by lookup.
class ElementTable {
public:
  ElementTable(const PermGroup &group, std::uint64_t budget) : elems_(group.elements(budget)) {
    index_.reserve(elems_.size() * 2);
    for (std::uint32_t i = 0; i < elems_.size(); ++i)
      index_.emplace(elems_[i], i);
    identity_ = index_.at(Permutation::identity(group.degree()));
    inv_.resize(elems_.size());
    der_.resize(elems_.size());
    for (std::uint32_t i = 0; i < elems_.size(); ++i) {
      inv_[i] = index_.at(inverse(elems_[i]));
      der_[i] = is_derangement(elems_[i]);
    }
  }

  std::size_t size() const { return elems_.size(); }
  const Permutation &operator[](std::uint32_t i) const { return elems_[i]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return index_.at(compose(elems_[a], elems_[b])); }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  bool deranged(std::uint32_t a) const { return der_[a]; }
  std::uint32_t identity() const { return identity_; }

private:
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> inv_;
  std::vector<char> der_;
  std::uint32_t identity_ = 0;
};

struct Sub {
  std::vector<std::uint32_t> elems;  ///< sorted ids
  std::vector<std::uint32_t> gens;
};

class SemiregularSearch {
public:
  SemiregularSearch(const ElementTable &t, std::size_t degree, std::uint64_t target, std::uint64_t budget)
      : t_(t), n_(degree), target_(target), budget_(budget) {}

  std::vector<std::uint32_t> candidates;  ///< semiregular elements of prime-power order
  Sub best;
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool done = false;

  /// One representative per G-conjugacy class of cyclic subgroups.
  std::vector<Sub> roots() {
    std::set<std::vector<std::uint32_t>> covered;
    std::vector<Sub> out;
    for (auto x : candidates) {
      Sub r{cyclic(x), {x}};
      if (covered.count(r.elems))
        continue;
      for (std::uint32_t g = 0; g < t_.size(); ++g) {
        std::vector<std::uint32_t> conj;
        for (auto y : r.elems)
          conj.push_back(t_.mul(t_.mul(t_.inv(g), y), g));
        std::sort(conj.begin(), conj.end());
        covered.insert(std::move(conj));
      }
      out.push_back(std::move(r));
    }
    return out;
  }

  /// Depth-first extension; `normalizing_only` restricts to x normalizing H.
  void run(const std::vector<Sub> &starts, bool normalizing_only) {
    visited_.clear();
    for (const auto &r : starts) {
      if (done || aborted)
        return;
      if (!visited_.insert(r.elems).second)
        continue;
      record(r);
      extend(r, normalizing_only);
    }
  }

  void record(const Sub &s) {
    if (s.elems.size() > best.elems.size()) {
      best = s;
      if (best.elems.size() >= target_)
        done = true;
    }
  }

private:
  std::vector<std::uint32_t> cyclic(std::uint32_t x) const {
    std::vector<std::uint32_t> out{t_.identity()};
    for (std::uint32_t y = x; y != t_.identity(); y = t_.mul(y, x))
      out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool normalizes(std::uint32_t x, const Sub &h, const std::unordered_set<std::uint32_t> &hset) const {
    for (auto g : h.gens)
      if (!hset.count(t_.mul(t_.mul(t_.inv(x), g), x)))
        return false;
    return true;
  }

  // <H, x>, abandoned on the first non-identity element with a fixed point
  // or once it outgrows the degree (semiregular orders divide the degree)
  std::optional<Sub> join(const Sub &h, std::unordered_set<std::uint32_t> set, std::uint32_t x) const {
    Sub k{h.elems, h.gens};
    k.gens.push_back(x);
    for (std::size_t i = 0; i < k.elems.size(); ++i)
      for (auto s : k.gens) {
        auto z = t_.mul(k.elems[i], s);
        if (set.count(z))
          continue;
        if (!t_.deranged(z) || k.elems.size() >= n_)
          return std::nullopt;
        set.insert(z);
        k.elems.push_back(z);
      }
    if (n_ % k.elems.size() != 0)
      throw IntegrityError("semiregular subgroup order does not divide the degree");
    std::sort(k.elems.begin(), k.elems.end());
    return k;
  }

  void extend(const Sub &h, bool normalizing_only) {
    if (2 * h.elems.size() > n_)
      return;
    std::unordered_set<std::uint32_t> hset(h.elems.begin(), h.elems.end());
    for (auto x : candidates) {
      if (done || aborted)
        return;
      if (hset.count(x))
        continue;
      if (normalizing_only && !normalizes(x, h, hset))
        continue;
      if (++nodes > budget_) {
        aborted = true;
        return;
      }
      auto k = join(h, hset, x);
      if (!k || !visited_.insert(k->elems).second)
        continue;
      record(*k);
      extend(*k, normalizing_only);
    }
  }

  const ElementTable &t_;
  std::size_t n_;
  std::uint64_t target_;
  std::uint64_t budget_;
  std::set<std::vector<std::uint32_t>> visited_;
};

SemiregularWitness cyclic_witness(const Permutation &g, WitnessMethod m) {
  return SemiregularWitness{{g}, element_order(g), m};
}

} // namespace

const char *to_string(WitnessMethod m) {
  switch (m) {
  case WitnessMethod::order_coprime: return "order-coprime";
  case WitnessMethod::cyclic_scan: return "cyclic-scan";
  case WitnessMethod::backtrack: return "backtrack";
  case WitnessMethod::lifted: return "lifted";
  case WitnessMethod::catalog: return "catalog";
  }
  return "unknown";
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d)
      continue;
    out.push_back(d);
    while (n % d == 0)
      n /= d;
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

bool is_semiregular_element(const Permutation &p) {
  auto ct = cycle_type(p);
  return ct.front() == ct.back();
}

bool is_semiregular_subgroup(const std::vector<Permutation> &gens, std::uint64_t subgroup_budget) {
  if (gens.empty())
    return true;
  auto elems = enumerate_subgroup(gens, subgroup_budget);
  if (!elems)
    throw BudgetError("subgroup exceeds the subgroup budget of " + std::to_string(subgroup_budget));
  for (const auto &e : *elems)
    if (!e.is_identity() && !is_derangement(e))
      return false;
  return true;
}

std::vector<std::uint64_t> semiregular_primes(const PermGroup &group) {
  if (!group.is_transitive())
    throw PreconditionError("semiregular_primes requires a transitive group");
  std::uint64_t stab = group.order() / group.degree();
  std::vector<std::uint64_t> out;
  for (auto p : prime_divisors(group.order()))
    if (stab % p != 0)
      out.push_back(p);
  return out;
}

ElusivenessReport is_elusive(const PermGroup &group, const Budgets &budgets) {
  ElusivenessReport r;
  r.primes_checked = prime_divisors(group.order());
  std::optional<Permutation> best;
  auto consider = [&](const Permutation &x) {
    if (is_derangement(x) && (!best || x < *best))
      best = x;
  };
  if (group.order() <= budgets.elements) {
    group.for_each_element(budgets.elements, [&](const Permutation &g) {
      if (is_prime_small(element_order(g)))
        consider(g);
    });
    r.elusive = best ? Verdict::no : Verdict::yes;
  } else {
    std::mt19937_64 rng(kSampleSeed);
    for (std::size_t i = 0; i < kSampleDraws; ++i) {
      Permutation g = group.random_element(rng);
      auto o = element_order(g);
      for (auto p : prime_divisors(o))
        consider(power(g, static_cast<std::int64_t>(o / p)));
    }
    r.elusive = best ? Verdict::no : Verdict::unknown;
  }
  if (best) {
    r.witness_description = best->to_cycle_string();
    r.witness = std::move(best);
  }
  return r;
}

MaxSemiregularResult max_semiregular_order(const PermGroup &group, const Budgets &budgets, std::uint64_t target) {
  const std::size_t n = group.degree();
  if (target == 0 || target > n)
    target = n;
  MaxSemiregularResult r;
  r.witness = SemiregularWitness{{Permutation::identity(n)}, 1, WitnessMethod::cyclic_scan};
  auto take = [&](SemiregularWitness w) {
    if (w.order > r.witness.order)
      r.witness = std::move(w);
  };

  const bool enumerable = group.order() <= budgets.elements;
  std::vector<std::uint64_t> coprime;
  if (group.is_transitive())
    coprime = semiregular_primes(group);

  if (!enumerable) {
    std::mt19937_64 rng(kSampleSeed);
    for (std::size_t i = 0; i < kSampleDraws; ++i) {
      Permutation g = group.random_element(rng);
      if (!is_derangement(g) || !is_semiregular_element(g))
        continue;
      bool coprime_order = is_prime_small(element_order(g)) &&
                           std::count(coprime.begin(), coprime.end(), element_order(g));
      take(cyclic_witness(g, coprime_order ? WitnessMethod::order_coprime : WitnessMethod::cyclic_scan));
    }
    r.optimal = r.witness.order == n;
    return r;
  }

  ElementTable table(group, budgets.elements);
  // order-coprime primes: any element of that order is semiregular
  for (auto it = coprime.rbegin(); it != coprime.rend(); ++it) {
    for (std::uint32_t i = 0; i < table.size(); ++i)
      if (element_order(table[i]) == *it) {
        take(cyclic_witness(table[i], WitnessMethod::order_coprime));
        break;
      }
    if (r.witness.order > 1)
      break;
  }

  SemiregularSearch search(table, n, target, budgets.nodes);
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    if (!table.deranged(i) || !is_semiregular_element(table[i]))
      continue;
    auto o = element_order(table[i]);
    take(cyclic_witness(table[i], WitnessMethod::cyclic_scan));
    if (is_prime_power(o))
      search.candidates.push_back(i);
  }
  if (r.witness.order >= target) {
    r.optimal = r.witness.order == n;
    return r;
  }

  auto roots = search.roots();
  search.best = Sub{{table.identity()}, {}};
  search.run(roots, true);
  bool closed = false;
  if (!search.done && !search.aborted) {
    search.run(roots, false);
    closed = !search.aborted && !search.done;
  }
  r.nodes = search.nodes;
  if (search.best.elems.size() > r.witness.order) {
    SemiregularWitness w;
    for (auto g : search.best.gens)
      w.subgroup_generators.push_back(table[g]);
    w.order = search.best.elems.size();
    w.method = WitnessMethod::backtrack;
    take(std::move(w));
  }
  r.optimal = closed || r.witness.order == n;
  return r;
}

LiftResult lift_semiregular(const PermGroup &group, const BlockSystem &system,
                            const std::vector<Permutation> &block_gens, const Budgets &budgets) {
  if (system.degree != group.degree() || !is_block_system(group, system))
    throw InputError("lift_semiregular: not a block system of the group");
  LiftResult r;
  std::vector<Permutation> gens = block_gens;
  if (gens.empty())
    gens.push_back(Permutation::identity(system.num_blocks));
  for (const auto &g : gens)
    if (g.degree() != system.num_blocks)
      throw InputError("lift_semiregular: block permutation has the wrong degree");
  auto xbar = enumerate_subgroup(gens, budgets.subgroup);
  if (!xbar)
    throw BudgetError("block subgroup exceeds the subgroup budget");
  for (const auto &x : *xbar)
    if (!x.is_identity() && !is_derangement(x))
      throw PreconditionError("block subgroup is not semiregular on the blocks: " + x.to_cycle_string());
  r.block_subgroup_order = xbar->size();
  std::set<Permutation> xset(xbar->begin(), xbar->end());

  std::vector<Permutation> preimage;
  group.for_each_element(budgets.elements, [&](const Permutation &g) {
    auto ind = induced_on_blocks(g, system);
    if (ind.is_identity())
      ++r.kernel_order;
    if (xset.count(ind))
      preimage.push_back(g);
  });
  std::sort(preimage.begin(), preimage.end());

  r.semiregular = std::all_of(preimage.begin(), preimage.end(),
                              [](const Permutation &g) { return g.is_identity() || is_derangement(g); });
  // generators: add elements in order until they generate the whole preimage
  std::set<Permutation> generated{Permutation::identity(group.degree())};
  for (const auto &g : preimage) {
    if (generated.count(g))
      continue;
    r.witness.subgroup_generators.push_back(g);
    auto sub = enumerate_subgroup(r.witness.subgroup_generators, preimage.size() + 1);
    generated = std::set<Permutation>(sub->begin(), sub->end());
  }
  if (r.witness.subgroup_generators.empty())
    r.witness.subgroup_generators.push_back(Permutation::identity(group.degree()));
  r.witness.order = preimage.size();
  r.witness.method = WitnessMethod::lifted;
  r.message = r.semiregular ? "preimage is semiregular"
                            : "preimage has a non-identity element with a fixed point; the kernel is not semiregular";
  return r;
}

bool product_action_fpf(const std::vector<Permutation> &h, const Permutation &a) {
  const std::size_t k = a.degree();
  if (h.size() != k)
    throw InputError("product_action_fpf: need one base element per coordinate");
  for (const auto &x : h)
    if (x.degree() != h.front().degree())
      throw InputError("product_action_fpf: base elements of different degrees");
  std::vector<bool> seen(k, false);
  for (Point i = 0; i < k; ++i) {
    if (seen[i])
      continue;
    // ordered product h_i h_{i^a} h_{i^a^2} ... around the cycle of a through i
    Permutation c = Permutation::identity(h.front().degree());
    for (Point j = i; !seen[j]; j = a[j]) {
      seen[j] = true;
      c = compose(c, h[j]);
    }
    if (is_derangement(c))
      return true;
  }
  return false;
}

Permutation product_action_element(const std::vector<Permutation> &h, const Permutation &a) {
  const std::size_t k = a.degree();
  if (h.size() != k)
    throw InputError("product_action_element: need one base element per coordinate");
  const std::size_t m = h.front().degree();
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i)
    total *= m;
  std::vector<std::size_t> radix(k, 1);
  for (std::size_t i = 1; i < k; ++i)
    radix[i] = radix[i - 1] * m;
  std::vector<Point> img(total);
  for (std::size_t pt = 0; pt < total; ++pt) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t c = (pt / radix[i]) % m;
      out += h[i][static_cast<Point>(c)] * radix[a[static_cast<Point>(i)]];
    }
    img[pt] = static_cast<Point>(out);
  }
  return Permutation(std::move(img));
}

ElusivenessReport wreath_elusive_check(const PermGroup &base, const PermGroup &top, const Budgets &budgets) {
  const std::size_t k = top.degree();
  if (k > 4)
    throw InputError("wreath_elusive_check supports at most 4 coordinates");
  ElusivenessReport r;
  std::set<std::uint64_t> primes;
  for (auto p : prime_divisors(base.order()))
    primes.insert(p);
  for (auto p : prime_divisors(top.order()))
    primes.insert(p);
  r.primes_checked.assign(primes.begin(), primes.end());
  if (base.order() > budgets.elements) {
    r.elusive = Verdict::unknown;
    return r;
  }
  auto base_elems = base.elements(budgets.elements);
  auto top_elems = top.elements(budgets.elements);
  const std::size_t m = base.degree();
  const Permutation id_base = Permutation::identity(m);

  // A prime-order (h; a) is fixed-point-free iff some cycle product of a is
  // a derangement c with c^p = 1, so one c placed at the start of one cycle
  // covers every case.
  for (auto p : r.primes_checked) {
    auto pp = static_cast<std::int64_t>(p);
    std::vector<const Permutation *> cs;
    for (const auto &c : base_elems)
      if (!c.is_identity() && power(c, pp).is_identity())
        cs.push_back(&c);
    for (const auto &a : top_elems) {
      if (!power(a, pp).is_identity())
        continue;
      std::vector<bool> seen(k, false);
      for (Point start = 0; start < k; ++start) {
        if (seen[start])
          continue;
        for (Point j = start; !seen[j]; j = a[j])
          seen[j] = true;
        for (const Permutation *c : cs) {
          std::vector<Permutation> h(k, id_base);
          h[start] = *c;
          if (!product_action_fpf(h, a))
            continue;
          r.elusive = Verdict::no;
          r.witness_description = "prime " + std::to_string(p) + ": h_" + std::to_string(start) + " = " +
                                  c->to_cycle_string() + ", other coordinates identity, top " + a.to_cycle_string();
          std::uint64_t total = 1;
          for (std::size_t i = 0; i < k; ++i)
            total *= m;
          if (total <= budgets.coset_degree)
            r.witness = product_action_element(h, a);
          return r;
        }
      }
    }
  }
  r.elusive = Verdict::yes;
  return r;
}

AuditResult verify_semiregular_witness(const SemiregularWitness &w, const PermGroup &group,
                                       std::uint64_t subgroup_budget) {
  if (w.subgroup_generators.empty())
    return {false, "witness has no generators"};
  for (const auto &g : w.subgroup_generators)
    if (g.degree() != group.degree() || !group.contains(g))
      return {false, "generator " + g.to_cycle_string() + " is not in the group"};
  auto elems = enumerate_subgroup(w.subgroup_generators, subgroup_budget);
  if (!elems)
    return {false, "witness subgroup exceeds the subgroup budget"};
  if (elems->size() != w.order)
    return {false, "witness generates a subgroup of order " + std::to_string(elems->size()) + ", claimed " +
                       std::to_string(w.order)};
  for (const auto &e : *elems)
    if (!e.is_identity() && !is_derangement(e))
      return {false, "element " + e.to_cycle_string() + " has a fixed point"};
  return {};
}

nlohmann::json to_json(const SemiregularWitness &w) {
  nlohmann::json j{{"kind", "semiregular"}, {"order", w.order}, {"method", to_string(w.method)},
                   {"subgroup_generators", nlohmann::json::array()}};
  for (const auto &g : w.subgroup_generators)
    j["subgroup_generators"].push_back(std::vector<Point>(g.images().begin(), g.images().end()));
  return j;
}

nlohmann::json to_json(const ElusivenessReport &r) {
  nlohmann::json j{{"elusive", to_string(r.elusive)}, {"primes_checked", r.primes_checked}};
  if (r.witness)
    j["witness"] = std::vector<Point>(r.witness->images().begin(), r.witness->images().end());
  if (!r.witness_description.empty())
    j["witness_description"] = r.witness_description;
  return j;
}

} // namespace drg
