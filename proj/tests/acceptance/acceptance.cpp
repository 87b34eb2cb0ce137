// Acceptance run: every criterion end to end through the harness, cross-checked
// against the brute-force oracles in tests/unit/oracles.hpp, with its time limit.
// Prints one PASS/FAIL line per criterion; exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "drg/catalog.hpp"
#include "drg/coset_action.hpp"
#include "drg/derangement_graph.hpp"
#include "drg/harness.hpp"
#include "drg/number_theory.hpp"
#include "drg/semiregular.hpp"
#include "../unit/oracles.hpp"

using drg::Permutation;
using drg::PermGroup;

namespace {

struct Failure {
  std::string what;
};

void require(bool cond, const std::string &what) {
  if (!cond)
    throw Failure{what};
}

oracle::Img raw(const Permutation &p) { return {p.images().begin(), p.images().end()}; }

std::vector<oracle::Img> raw(const std::vector<Permutation> &v) {
  std::vector<oracle::Img> out;
  for (const auto &p : v)
    out.push_back(raw(p));
  return out;
}

std::size_t img_order(const oracle::Img &p) {
  std::size_t k = 1;
  for (oracle::Img q = p; q != oracle::ident(p.size()); q = oracle::mul(q, p))
    ++k;
  return k;
}

bool trial_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

const drg::Catalog &catalog() {
  static drg::Catalog cat(DRG_TEST_DATA_DIR);
  return cat;
}

// harness check must pass
void harness_pass(const std::string &id) {
  auto r = drg::run_check(id, {}, catalog());
  require(r.verdict == drg::CheckVerdict::pass, id + " verdict " + drg::to_string(r.verdict) + ": " + r.detail);
  require(drg::verify_certificate(r.certificate).ok, id + " certificate does not re-validate");
}

// pairwise ratios of the clique members are derangements, all members in the group
void oracle_clique(const std::vector<oracle::Img> &elems, const std::vector<Permutation> &clique) {
  std::set<oracle::Img> group(elems.begin(), elems.end());
  auto v = raw(clique);
  for (std::size_t i = 0; i < v.size(); ++i) {
    require(group.count(v[i]) == 1, "clique vertex outside the group");
    for (std::size_t j = i + 1; j < v.size(); ++j)
      require(oracle::deranged(oracle::mul(v[i], oracle::inv(v[j]))), "clique vertices agree somewhere");
  }
}

void oracle_semiregular(const std::vector<Permutation> &gens, std::uint64_t order) {
  auto c = oracle::semiregular_closure(raw(gens));
  require(!c.empty(), "witness subgroup has a non-identity element with a fixed point");
  require(c.size() == order, "witness subgroup has order " + std::to_string(c.size()));
}

// ---------------------------------------------------------------------------

void c1(std::vector<double> &) {
  harness_pass("m11-deg12-elusive");
  auto g = catalog().load("M11:12").group;
  auto elems = oracle::closure(raw(g.generators()));
  require(elems.size() == 7920, "closure of M11:12 has " + std::to_string(elems.size()) + " elements");
  for (const auto &e : elems)
    require(!(oracle::deranged(e) && trial_prime(img_order(e))), "prime-order derangement in M11:12");
}

void c2(std::vector<double> &items) {
  for (const char *name : {"A5:6", "A6:6", "PSU3(3):36", "M11:12"}) {
    auto t0 = std::chrono::steady_clock::now();
    auto g = catalog().load(name).group;
    auto k = drg::find_k_clique(g, 4);
    require(k.found == drg::Verdict::yes && k.clique && k.clique->size() >= 4, std::string(name) + ": no 4-clique");
    oracle_clique(oracle::closure(raw(g.generators())), k.clique->vertices);
    items.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  harness_pass("exceptional-4cliques");
}

void c3(std::vector<double> &items) {
  auto m = catalog().load("M11:11");
  for (auto [sub, want] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"11:5", 144}, {"6:2", 55}, {"A5a", 11}, {"A5b", 11}}) {
    auto t0 = std::chrono::steady_clock::now();
    auto ca = drg::coset_action(m.group, m.spec.subgroup(sub).generators);
    require(ca.group.degree() * (7920 / ca.group.degree()) == 7920, sub + ": coset degree");
    auto s = drg::max_semiregular_order(ca.group, {}, want);
    require(s.witness.order == want, sub + ": semiregular order " + std::to_string(s.witness.order));
    oracle_semiregular(s.witness.subgroup_generators, want);
    items.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  harness_pass("m11-coset-semireg-orders");
}

void c4(std::vector<double> &) {
  for (auto [name, cap] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"A5:6", 3}, {"A6:6", 3}, {"PSU3(3):36", 3}, {"M11:12", 1}}) {
    auto g = catalog().load(name).group;
    auto s = drg::max_semiregular_order(g);
    require(s.optimal, name + ": search did not close");
    require(s.witness.order <= cap, name + ": semiregular order " + std::to_string(s.witness.order));
    if (g.order() <= 720)
      require(s.witness.order == oracle::brute_max_semiregular(oracle::closure(raw(g.generators()))),
              name + ": disagrees with exhaustive search");
  }
  // a nontrivial semiregular subgroup of M11:12 would contain a prime-order derangement
  auto m = oracle::closure(raw(catalog().load("M11:12").group.generators()));
  for (const auto &e : m)
    require(!(oracle::deranged(e) && trial_prime(img_order(e))), "M11:12 has a prime-order derangement");
  harness_pass("exceptional-semireg-maxima");
}

void c5(std::vector<double> &) {
  auto g = catalog().load("A5:10").group;
  auto elems = oracle::closure(raw(g.generators()));
  std::size_t stab = 0;
  for (const auto &e : elems)
    stab += e[0] == 0;
  require(stab == 6, "A5:10 point stabilizer has order " + std::to_string(stab));
  auto d = drg::density_bounds(g);
  require(d.coclique && d.coclique->size() >= 12, "A5:10 family smaller than 12");
  auto fam = raw(d.coclique->vertices);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      require(oracle::agree_somewhere(fam[i], fam[j]), "A5:10 family members disagree everywhere");
  require(drg::Rational(2, 1) <= drg::Rational(fam.size(), stab), "A5:10 rho_lower below 2");
  harness_pass("density-bounds");
}

void c6(std::vector<double> &) { harness_pass("corpus-properties"); }

void c7(std::vector<double> &) {
  harness_pass("number-theory");
  // brute-force mod dominance: every prime p >= 5 up to 2m, not just p <= m
  std::set<std::pair<std::uint64_t, std::uint64_t>> brute;
  for (std::uint64_t m = 5; m <= 300; ++m)
    for (std::uint64_t l = 1; l < m; ++l) {
      bool ok = true;
      for (std::uint64_t p = 5; p <= 2 * m && ok; ++p)
        if (trial_prime(p) && l % p > m % p)
          ok = false;
      if (ok)
        brute.insert({m, l});
    }
  auto got = drg::mod_dominance_classify(300);
  require(std::set<std::pair<std::uint64_t, std::uint64_t>>(got.begin(), got.end()) == brute,
          "mod dominance disagrees with brute force");
  // ppd existence: strip from q^t - 1 every factor it shares with some q^i - 1, i < t
  using u128 = unsigned __int128;
  auto gcd = [](u128 a, u128 b) {
    while (b) {
      u128 r = a % b;
      a = b;
      b = r;
    }
    return a;
  };
  for (std::uint64_t q = 2; q <= 64; ++q)
    for (std::uint64_t t = 2; t <= 20; ++t) {
      std::vector<u128> pw{1};
      bool fits = true;
      for (std::uint64_t i = 1; i <= t && fits; ++i) {
        fits = pw.back() <= (~u128{0} >> 7);
        pw.push_back(pw.back() * q);
      }
      if (!fits)
        continue;
      u128 n = pw[t] - 1;
      for (std::uint64_t i = 1; i < t; ++i)
        for (u128 g = gcd(n, pw[i] - 1); g > 1; g = gcd(n, pw[i] - 1))
          n /= g;
      require(drg::has_primitive_prime_divisor(q, t) == (n > 1),
              "ppd existence at q=" + std::to_string(q) + " t=" + std::to_string(t));
      bool pattern = (t == 2 && ((q + 1) & q) == 0) || (t == 6 && q == 2);
      require((n == 1) == pattern, "Zsigmondy pattern at q=" + std::to_string(q) + " t=" + std::to_string(t));
    }
  require(drg::radical(24) == 6, "rad(24)");
  require(drg::phi_star(6, 2) == 1, "Phi_6*(2)");
}

void c8(std::vector<double> &) { harness_pass("matrix-invariants"); }

void c9(std::vector<double> &) {
  auto g = catalog().load("PSp4(3):36").group;
  auto s = drg::max_semiregular_order(g, {}, 9);
  require(s.witness.order >= 9, "PSp4(3):36 semiregular order " + std::to_string(s.witness.order));
  oracle_semiregular(s.witness.subgroup_generators, s.witness.order);
  harness_pass("psp43-semireg-9");
}

// fixed points of (h; a) on Delta^k by walking the tuples
bool brute_fpf(const std::vector<oracle::Img> &h, const oracle::Img &a, std::size_t m) {
  std::size_t k = a.size(), total = 1;
  for (std::size_t i = 0; i < k; ++i)
    total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> pt(k), out(k);
    for (std::size_t i = 0, c = code; i < k; ++i, c /= m)
      pt[i] = static_cast<std::uint32_t>(c % m);
    for (std::size_t i = 0; i < k; ++i)
      out[a[i]] = h[i][pt[i]];
    if (out == pt)
      return false;
  }
  return true;
}

void c10(std::vector<double> &) {
  std::mt19937_64 rng(7);
  std::size_t trials = 0;
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t k = 1; k <= 3; ++k)
      for (int t = 0; t < 70; ++t, ++trials) {
        std::vector<oracle::Img> h;
        std::vector<Permutation> hp;
        for (std::size_t i = 0; i < k; ++i) {
          auto x = oracle::ident(m);
          if (t % 4 != 0 || i > 0)
            std::shuffle(x.begin(), x.end(), rng);
          h.push_back(x);
          hp.emplace_back(std::vector<drg::Point>(x.begin(), x.end()));
        }
        auto a = oracle::ident(k);
        std::shuffle(a.begin(), a.end(), rng);
        Permutation ap(std::vector<drg::Point>(a.begin(), a.end()));
        require(drg::product_action_fpf(hp, ap) == brute_fpf(h, a, m), "product_action_fpf disagrees");
      }
  require(trials >= 1000, "fewer than 1000 wreath trials");
  harness_pass("wreath-machinery");
}

void c11(std::vector<double> &) {
  for (const auto &e : catalog().entries()) {
    if (e.order > 720 || !e.transitive)
      continue;
    auto g = catalog().load(e.name).group;
    auto elems = oracle::closure(raw(g.generators()));
    require(elems.size() == g.order(), e.name + ": chain order");
    std::vector<oracle::Img> ders, others;
    for (const auto &x : elems) {
      if (oracle::deranged(x))
        ders.push_back(x);
      else if (x != oracle::ident(x.size()))
        others.push_back(x);
    }
    auto disagree = [](const oracle::Img &a, const oracle::Img &b) { return !oracle::agree_somewhere(a, b); };
    std::size_t omega = 1 + oracle::cp_max_clique(ders, disagree, e.degree - 1);
    auto mc = drg::max_clique(g);
    require(mc.optimal && mc.clique.size() == omega, e.name + ": max_clique");
    auto mf = drg::max_intersecting_family(g, {}, mc.clique.size());
    std::size_t alpha = mf.family.size() * omega == g.order() ? mf.family.size()
                                                              : 1 + oracle::cp_max_clique(others, oracle::agree_somewhere, g.order());
    require(mf.optimal && mf.family.size() == alpha, e.name + ": max_intersecting_family");
    auto ms = drg::max_semiregular_order(g);
    require(ms.optimal && ms.witness.order == oracle::brute_max_semiregular(elems), e.name + ": max_semiregular_order");
  }
  harness_pass("oracle-equivalence");
}

struct Criterion {
  int number;
  const char *name;
  double limit;       ///< seconds for the whole criterion, 0 = none stated
  double item_limit;  ///< seconds per listed item, 0 = none stated
  void (*run)(std::vector<double> &);
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "M11 on 12 points is elusive", 5, 0, c1},
      {2, "4-cliques in Alt(5):6, Alt(6):6, PSU3(3):36, M11:12", 0, 60, c2},
      {3, "M11 coset actions have semiregular subgroups of order 144/55/11/11", 0, 120, c3},
      {4, "semiregular maxima <= 3, M11:12 = 1", 600, 0, c4},
      {5, "density bounds: Alt(5) on pairs and rho_upper <= n/3", 0, 0, c5},
      {6, "corpus Jordan, triangle and clique-coclique audits", 0, 0, c6},
      {7, "number theory suite", 60, 0, c7},
      {8, "matrix invariants", 30, 0, c8},
      {9, "PSp4(3) on 36 points has a semiregular subgroup of order 9", 120, 0, c9},
      {10, "wreath product machinery", 300, 0, c10},
      {11, "oracle equivalence on groups of order <= 720", 600, 0, c11},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    std::vector<double> items;
    std::string why;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(items);
    } catch (const Failure &f) {
      why = f.what;
    } catch (const std::exception &e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && c.limit > 0 && secs >= c.limit)
      why = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit) + " s";
    for (double s : items)
      if (why.empty() && c.item_limit > 0 && s >= c.item_limit)
        why = "an item took " + std::to_string(s) + " s, limit " + std::to_string(c.item_limit) + " s";
    std::string limit = c.limit > 0        ? "limit " + std::to_string(static_cast<int>(c.limit)) + " s"
                        : c.item_limit > 0 ? "limit " + std::to_string(static_cast<int>(c.item_limit)) + " s each"
                                           : "no limit";
    std::printf("%s  criterion %2d  %-68s %8.2f s (%s)%s%s\n", why.empty() ? "PASS" : "FAIL", c.number, c.name, secs,
                limit.c_str(), why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
    failures += !why.empty();
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
