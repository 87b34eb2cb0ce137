#include <gtest/gtest.h>

#include <chrono>
#include <functional>
#include <random>

#include "drg/catalog.hpp"
#include "drg/derangement_graph.hpp"
#include "drg/error.hpp"
#include "oracles.hpp"

using drg::Permutation;
using drg::PermGroup;

namespace {

std::vector<oracle::Img> raw(const std::vector<Permutation> &v) {
  std::vector<oracle::Img> out;
  for (const auto &p : v)
    out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

PermGroup sym(std::size_t n) {
  std::string cyc = "(";
  for (std::size_t i = 0; i < n; ++i)
    cyc += (i ? "," : "") + std::to_string(i);
  cyc += ")";
  return PermGroup({Permutation::from_cycles(n, "(0,1)"), Permutation::from_cycles(n, cyc)});
}

drg::Catalog &catalog() {
  static drg::Catalog cat(DRG_TEST_DATA_DIR);
  return cat;
}

} // namespace

TEST(DerangementSet, SmallSymmetricGroups) {
  EXPECT_EQ(drg::derangement_set(sym(2)).count(), 1u);
  EXPECT_EQ(drg::derangement_set(sym(3)).count(), 2u);
  EXPECT_EQ(drg::derangement_set(sym(4)).count(), 9u);  // subfactorial !4
}

TEST(DerangementSet, M11OnTwelveMatchesFilter) {
  auto g = catalog().load("M11:12").group;
  auto d = drg::derangement_set(g);
  std::size_t expected = 0;
  for (const auto &x : oracle::closure(raw(g.generators())))
    expected += oracle::deranged(x);
  EXPECT_EQ(d.count(), expected);
  EXPECT_GT(d.count(), 0u);
  for (const auto &x : d.members)
    EXPECT_TRUE(drg::is_derangement(x));
}

TEST(Adjacency, BasicFacts) {
  auto g = Permutation::from_cycles(4, "(0,1,2,3)");
  auto h = Permutation::from_cycles(4, "(0,1)");
  EXPECT_FALSE(drg::are_adjacent(g, g));
  EXPECT_TRUE(drg::are_adjacent(Permutation::identity(4), g));
  EXPECT_FALSE(drg::are_adjacent(Permutation::identity(4), h));
  EXPECT_THROW(drg::are_adjacent(g, Permutation::identity(5)), drg::InputError);
  std::mt19937_64 rng(3);
  auto m = catalog().load("M11:12").group;
  for (int i = 0; i < 200; ++i) {
    auto a = m.random_element(rng), b = m.random_element(rng);
    EXPECT_EQ(drg::are_adjacent(a, b), drg::are_adjacent(b, a));
    EXPECT_EQ(drg::are_adjacent(a, b), drg::is_derangement(drg::compose(a, drg::inverse(b))));
  }
}

TEST(Adjacency, GraphIsRegular) {
  auto m = catalog().load("M11:12").group;
  auto d = drg::derangement_set(m);
  auto elems = m.elements(10000);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto &v = elems[rng() % elems.size()];
    std::size_t deg = 0;
    for (const auto &u : elems)
      deg += drg::are_adjacent(v, u);
    EXPECT_EQ(deg, d.count());
  }
}

TEST(Clique, SmallExact) {
  auto c5 = PermGroup({Permutation::from_cycles(5, "(0,1,2,3,4)")});
  auto r = drg::max_clique(c5);
  EXPECT_EQ(r.clique.size(), 5u);
  EXPECT_TRUE(r.optimal);
  auto s3 = drg::max_clique(sym(3));
  EXPECT_EQ(s3.clique.size(), 3u);
  EXPECT_TRUE(s3.optimal);
  EXPECT_TRUE(drg::verify_clique(sym(3), s3.clique));
}

TEST(Clique, KCliqueVerdicts) {
  auto a56 = catalog().load("A5:6").group;
  auto r = drg::find_k_clique(a56, 4);
  ASSERT_EQ(r.found, drg::Verdict::yes);
  EXPECT_GE(r.clique->size(), 4u);
  EXPECT_TRUE(drg::verify_clique(a56, *r.clique));
  // a clique never exceeds the degree
  EXPECT_EQ(drg::find_k_clique(a56, 7).found, drg::Verdict::no);
  // D8 on 4 points: the derangements are the 4-cycles and double transpositions
  auto d8 = catalog().load("D8:4").group;
  EXPECT_EQ(drg::find_k_clique(d8, 4).found, drg::Verdict::yes);
  // tiny budget gives unknown, not no
  auto m = catalog().load("M11:12").group;
  drg::Budgets tiny;
  tiny.nodes = 1;
  auto u = drg::find_k_clique(m, 12, tiny);
  EXPECT_NE(u.found, drg::Verdict::no);
}

TEST(Clique, SampledLargeGroups) {
  auto a12 = catalog().load("A12:12").group;
  auto r = drg::find_k_clique(a12, 3);
  ASSERT_EQ(r.found, drg::Verdict::yes);
  EXPECT_TRUE(r.sampled);
  EXPECT_TRUE(drg::verify_clique(a12, *r.clique));
}

TEST(Coclique, KnownFamilies) {
  auto r = drg::max_intersecting_family(sym(3), {}, 3);
  EXPECT_EQ(r.family.size(), 2u);
  EXPECT_TRUE(r.optimal);
  auto t = drg::max_intersecting_family(PermGroup::trivial(1));
  EXPECT_EQ(t.family.size(), 1u);

  auto a510 = catalog().load("A5:10").group;
  auto f = drg::max_intersecting_family(a510);
  EXPECT_GE(f.family.size(), 12u);
  EXPECT_TRUE(drg::verify_coclique(a510, f.family));
}

TEST(Density, Alt5OnPairs) {
  auto a510 = catalog().load("A5:10").group;
  auto d = drg::density_bounds(a510);
  EXPECT_EQ(d.stabilizer_order, 6u);
  EXPECT_GE(d.best_coclique, 12u);
  EXPECT_FALSE(d.rho_lower < drg::Rational(2, 1));
  EXPECT_TRUE(d.rho_lower <= d.rho_upper);
}

TEST(Density, RegularGroupHasDensityOne) {
  auto d = drg::density_bounds(PermGroup({Permutation::from_cycles(5, "(0,1,2,3,4)")}));
  EXPECT_EQ(d.rho_lower, drg::Rational(1, 1));
  EXPECT_EQ(d.rho_upper, drg::Rational(1, 1));
}

TEST(Audit, DetectsCorruption) {
  auto s3 = sym(3);
  auto c = drg::max_clique(s3).clique;
  auto f = drg::max_intersecting_family(s3, {}, 3).family;
  EXPECT_TRUE(drg::clique_coclique_audit(c, f, s3));
  auto bad = c;
  bad.vertices.push_back(bad.vertices.back());
  auto a = drg::clique_coclique_audit(bad, f, s3);
  EXPECT_FALSE(a.ok);
  EXPECT_NE(a.message.find("duplicate"), std::string::npos);
  drg::CliqueCertificate pair{{Permutation::identity(3), Permutation::from_cycles(3, "(0,1,2)")}};
  drg::CocliqueCertificate one{{Permutation::identity(3)}};
  EXPECT_TRUE(drg::clique_coclique_audit(pair, one, s3));
  drg::CliqueCertificate nonadj{{Permutation::identity(3), Permutation::from_cycles(3, "(0,1)")}};
  EXPECT_FALSE(drg::verify_clique(s3, nonadj));
}

// groups of order <= 720: the search agrees with exhaustive computation
TEST(Oracle, SmallCatalogGroups) {
  for (const auto &e : catalog().entries()) {
    if (e.order > 720 || !e.transitive)
      continue;
    SCOPED_TRACE(e.name);
    auto g = catalog().load(e.name).group;
    auto elems = oracle::closure(raw(g.generators()));
    ASSERT_EQ(elems.size(), g.order());

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
    EXPECT_TRUE(mc.optimal);
    EXPECT_EQ(mc.clique.size(), omega);
    EXPECT_TRUE(drg::verify_clique(g, mc.clique));

    auto mf = drg::max_intersecting_family(g, {}, mc.clique.size());
    EXPECT_TRUE(drg::verify_coclique(g, mf.family));
    std::size_t alpha;
    if (mf.family.size() * omega == g.order())
      alpha = mf.family.size();  // meets the clique-coclique bound
    else
      alpha = 1 + oracle::cp_max_clique(others, oracle::agree_somewhere, g.order());
    EXPECT_TRUE(mf.optimal);
    EXPECT_EQ(mf.family.size(), alpha);
    std::printf("%-14s |G|=%-4zu |D|=%-4zu omega=%zu alpha=%zu\n", e.name.c_str(), elems.size(), ders.size(),
                omega, alpha);
  }
}
