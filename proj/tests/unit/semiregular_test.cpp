#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "drg/catalog.hpp"
#include "drg/coset_action.hpp"
#include "drg/error.hpp"
#include "drg/semiregular.hpp"
#include "oracles.hpp"

using drg::Permutation;
using drg::PermGroup;

namespace {

drg::Catalog &catalog() {
  static drg::Catalog cat(DRG_TEST_DATA_DIR);
  return cat;
}

std::vector<oracle::Img> raw(const std::vector<Permutation> &v) {
  std::vector<oracle::Img> out;
  for (const auto &p : v)
    out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

std::size_t img_order(const oracle::Img &p) {
  std::size_t k = 1;
  for (oracle::Img q = p; q != oracle::ident(p.size()); q = oracle::mul(q, p))
    ++k;
  return k;
}

bool small_prime(std::size_t n) {
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// image of a point of Delta^k, coordinates as a tuple
std::vector<std::uint32_t> act(const std::vector<std::uint32_t> &pt, const std::vector<oracle::Img> &h,
                               const oracle::Img &a) {
  std::vector<std::uint32_t> out(pt.size());
  for (std::size_t i = 0; i < pt.size(); ++i)
    out[a[i]] = h[i][pt[i]];
  return out;
}

bool brute_fpf(const std::vector<oracle::Img> &h, const oracle::Img &a, std::size_t m) {
  std::size_t k = a.size(), total = 1;
  for (std::size_t i = 0; i < k; ++i)
    total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> pt(k);
    for (std::size_t i = 0, c = code; i < k; ++i, c /= m)
      pt[i] = static_cast<std::uint32_t>(c % m);
    if (act(pt, h, a) == pt)
      return false;
  }
  return true;
}

oracle::Img random_perm(std::size_t n, std::mt19937_64 &rng) {
  auto p = oracle::ident(n);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

} // namespace

TEST(SemiregularElement, CycleShapes) {
  EXPECT_TRUE(drg::is_semiregular_element(Permutation::identity(4)));
  EXPECT_TRUE(drg::is_semiregular_element(Permutation::from_cycles(4, "(0,1)(2,3)")));
  EXPECT_FALSE(drg::is_semiregular_element(Permutation::from_cycles(4, "(0,1,2)")));
  EXPECT_FALSE(drg::is_semiregular_element(Permutation::from_cycles(6, "(0,1)(2,3,4,5)")));
}

TEST(SemiregularSubgroup, Basics) {
  EXPECT_TRUE(drg::is_semiregular_subgroup({Permutation::identity(5)}));
  EXPECT_TRUE(drg::is_semiregular_subgroup({Permutation::from_cycles(5, "(0,1,2,3,4)")}));
  auto m = catalog().load("M11:12").group;
  EXPECT_FALSE(drg::is_semiregular_subgroup(m.stabilizer(0).generators()));
  EXPECT_THROW(drg::is_semiregular_subgroup(m.generators(), 100), drg::BudgetError);
  // element test agrees with the subgroup test on M11
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto g = m.random_element(rng);
    EXPECT_EQ(drg::is_semiregular_element(g), drg::is_semiregular_subgroup({g}));
  }
}

TEST(SemiregularPrimes, Examples) {
  EXPECT_EQ(drg::semiregular_primes(catalog().load("M11:11").group), (std::vector<std::uint64_t>{11}));
  EXPECT_TRUE(drg::semiregular_primes(catalog().load("M11:12").group).empty());
  EXPECT_EQ(drg::semiregular_primes(catalog().load("C5:5").group), (std::vector<std::uint64_t>{5}));
  EXPECT_THROW(drg::semiregular_primes(PermGroup({Permutation::from_cycles(4, "(0,1)")})), drg::PreconditionError);
}

TEST(Elusive, CatalogExamples) {
  auto m12 = catalog().load("M11:12").group;
  auto r = drg::is_elusive(m12);
  EXPECT_EQ(r.elusive, drg::Verdict::yes);
  EXPECT_EQ(r.primes_checked, (std::vector<std::uint64_t>{2, 3, 5, 11}));
  // oracle: no element of prime order is a derangement
  for (const auto &e : oracle::closure(raw(m12.generators())))
    if (small_prime(img_order(e)))
      ASSERT_FALSE(oracle::deranged(e));

  auto m11 = drg::is_elusive(catalog().load("M11:11").group);
  ASSERT_EQ(m11.elusive, drg::Verdict::no);
  EXPECT_EQ(drg::cycle_type(*m11.witness), (std::vector<std::size_t>{11}));

  auto a5 = drg::is_elusive(catalog().load("A5:5").group);
  ASSERT_EQ(a5.elusive, drg::Verdict::no);
  EXPECT_EQ(drg::element_order(*a5.witness), 5u);
}

TEST(Elusive, LargeGroupsBySampling) {
  auto r = drg::is_elusive(catalog().load("A12:12").group);
  EXPECT_EQ(r.elusive, drg::Verdict::no);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(drg::is_derangement(*r.witness));
}

TEST(MaxSemiregular, PaperExamples) {
  auto a56 = drg::max_semiregular_order(catalog().load("A5:6").group);
  EXPECT_EQ(a56.witness.order, 3u);
  EXPECT_TRUE(a56.optimal);
  auto u = drg::max_semiregular_order(catalog().load("PSU3(3):36").group);
  EXPECT_LE(u.witness.order, 3u);
  EXPECT_TRUE(u.optimal);
  auto c5 = drg::max_semiregular_order(catalog().load("C5:5").group);
  EXPECT_EQ(c5.witness.order, 5u);
  EXPECT_TRUE(c5.optimal);
}

TEST(MaxSemiregular, OracleOnSmallGroups) {
  for (const auto &e : catalog().entries()) {
    if (e.order > 720 || !e.transitive)
      continue;
    SCOPED_TRACE(e.name);
    auto g = catalog().load(e.name).group;
    auto r = drg::max_semiregular_order(g);
    EXPECT_TRUE(r.optimal);
    EXPECT_EQ(r.witness.order, oracle::brute_max_semiregular(oracle::closure(raw(g.generators()))));
    EXPECT_TRUE(drg::verify_semiregular_witness(r.witness, g));
  }
}

TEST(Lift, CyclicSixOverThreeBlocks) {
  PermGroup c6({Permutation::from_cycles(6, "(0,1,2,3,4,5)")});
  auto sys = drg::make_block_system({0, 1, 2, 0, 1, 2});
  auto r = drg::lift_semiregular(c6, sys, {Permutation::from_cycles(3, "(0,1,2)")});
  EXPECT_TRUE(r.semiregular);
  EXPECT_EQ(r.kernel_order, 2u);
  EXPECT_EQ(r.witness.order, 6u);
  EXPECT_EQ(r.witness.order, r.block_subgroup_order * r.kernel_order);
  EXPECT_TRUE(drg::verify_semiregular_witness(r.witness, c6));

  auto k = drg::lift_semiregular(c6, sys, {});
  EXPECT_EQ(k.witness.order, 2u);
  EXPECT_TRUE(k.semiregular);

  // singleton blocks give the same subgroup back
  auto fine = drg::make_block_system({0, 1, 2, 3, 4, 5});
  auto same = drg::lift_semiregular(c6, fine, {Permutation::from_cycles(6, "(0,2,4)(1,3,5)")});
  EXPECT_EQ(same.witness.order, 3u);

  // a block subgroup with a fixed block is refused
  EXPECT_THROW(drg::lift_semiregular(c6, sys, {Permutation::from_cycles(3, "(0,1)")}), drg::PreconditionError);
}

TEST(Lift, M11OverFrobeniusBlocks) {
  // M11 on the 720 cosets of C11; the cosets of 11:5 form 144 blocks of size 5
  auto m = catalog().load("M11:11");
  const auto &frob = m.spec.subgroup("11:5").generators;
  std::vector<Permutation> c11;
  for (const auto &x : frob)
    if (drg::element_order(x) == 11)
      c11.push_back(x);
  ASSERT_EQ(c11.size(), 1u);
  auto big = drg::coset_action(m.group, c11);
  ASSERT_EQ(big.group.degree(), 720u);
  // point of the coset C11*y for y in 11:5 outside C11
  Permutation y = frob[0].is_identity() || drg::element_order(frob[0]) == 11 ? frob[1] : frob[0];
  drg::Point a = 0;
  for (drg::Point i = 0; i < 720; ++i) {
    PermGroup c(c11);
    if (c.contains(drg::compose(big.coset_reps[i], drg::inverse(y)))) {
      a = i;
      break;
    }
  }
  ASSERT_NE(a, 0u);
  auto sys = drg::minimal_block_system(big.group, a);
  ASSERT_EQ(sys.num_blocks, 144u);

  std::vector<Permutation> block_gens;
  for (const auto &g : big.group.generators())
    block_gens.push_back(drg::induced_on_blocks(g, sys));
  PermGroup blocks(block_gens);
  auto xbar = drg::max_semiregular_order(blocks, {}, 9);
  ASSERT_GE(xbar.witness.order, 9u);
  auto r = drg::lift_semiregular(big.group, sys, xbar.witness.subgroup_generators);
  EXPECT_TRUE(r.semiregular);
  EXPECT_EQ(r.kernel_order, 1u);
  EXPECT_EQ(r.witness.order, xbar.witness.order);
  EXPECT_TRUE(drg::verify_semiregular_witness(r.witness, big.group));
}

TEST(ProductAction, Examples) {
  auto id5 = Permutation::identity(5);
  auto h = Permutation::from_cycles(5, "(0,1,2,3,4)");
  EXPECT_FALSE(drg::product_action_fpf({id5, id5}, Permutation::identity(2)));
  auto swap = Permutation::from_cycles(2, "(0,1)");
  EXPECT_FALSE(drg::product_action_fpf({h, drg::inverse(h)}, swap));
  EXPECT_TRUE(drg::product_action_fpf({h, id5}, Permutation::identity(2)));
  EXPECT_THROW(drg::product_action_fpf({h}, swap), drg::InputError);
}

TEST(ProductAction, AgreesWithBruteForce) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t k = 1; k <= 3; ++k)
      for (int trial = 0; trial < 80; ++trial, ++checked) {
        std::vector<oracle::Img> h;
        std::vector<Permutation> hp;
        for (std::size_t i = 0; i < k; ++i) {
          // bias towards derangement-rich and identity entries
          oracle::Img x = trial % 5 == 0 ? oracle::ident(m) : random_perm(m, rng);
          h.push_back(x);
          hp.emplace_back(std::vector<drg::Point>(x.begin(), x.end()));
        }
        auto a = random_perm(k, rng);
        Permutation ap(std::vector<drg::Point>(a.begin(), a.end()));
        ASSERT_EQ(drg::product_action_fpf(hp, ap), brute_fpf(h, a, m));
        auto mat = drg::product_action_element(hp, ap);
        ASSERT_EQ(drg::is_derangement(mat), brute_fpf(h, a, m));
      }
  EXPECT_GE(checked, 1000);
}

TEST(WreathElusive, M11AndAlt5) {
  auto c2 = PermGroup({Permutation::from_cycles(2, "(0,1)")});
  auto m = drg::wreath_elusive_check(catalog().load("M11:12").group, c2);
  EXPECT_EQ(m.elusive, drg::Verdict::yes);

  auto a5 = catalog().load("A5:5").group;
  auto r = drg::wreath_elusive_check(a5, c2);
  ASSERT_EQ(r.elusive, drg::Verdict::no);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(drg::is_derangement(*r.witness));
  EXPECT_TRUE(small_prime(drg::element_order(*r.witness)));

  // oracle: the materialized A5 wr C2 on 25 points has a prime-order derangement
  auto w = catalog().load("A5wrC2:25").group;
  bool found = false;
  for (const auto &e : oracle::closure(raw(w.generators())))
    found = found || (small_prime(img_order(e)) && oracle::deranged(e));
  EXPECT_TRUE(found);
  EXPECT_TRUE(w.contains(*r.witness));
}

TEST(Witness, VerificationCatchesLies) {
  auto c6 = PermGroup({Permutation::from_cycles(6, "(0,1,2,3,4,5)")});
  drg::SemiregularWitness w{{Permutation::from_cycles(6, "(0,1,2,3,4,5)")}, 6, drg::WitnessMethod::catalog};
  EXPECT_TRUE(drg::verify_semiregular_witness(w, c6));
  w.order = 12;
  EXPECT_FALSE(drg::verify_semiregular_witness(w, c6));
  drg::SemiregularWitness bad{{Permutation::from_cycles(6, "(0,1)")}, 2, drg::WitnessMethod::catalog};
  EXPECT_FALSE(drg::verify_semiregular_witness(bad, c6));
}
