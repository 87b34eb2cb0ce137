#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "drg/blocks.hpp"
#include "drg/catalog.hpp"
#include "drg/error.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;

namespace {

fs::path data_dir() { return DRG_TEST_DATA_DIR; }

std::vector<oracle::Img> raw(const std::vector<drg::Permutation> &v) {
  std::vector<oracle::Img> out;
  for (const auto &p : v)
    out.emplace_back(p.images().begin(), p.images().end());
  return out;
}

} // namespace

TEST(Catalog, EveryGroupReverifies) {
  drg::Catalog cat(data_dir());
  ASSERT_GE(cat.entries().size(), 30u);
  for (const auto &e : cat.entries()) {
    SCOPED_TRACE(e.name);
    auto g = cat.load(e.name);
    EXPECT_EQ(g.group.order(), e.order);
    if (e.order <= 200000)
      EXPECT_EQ(oracle::closure(raw(g.group.generators())).size(), e.order);
  }
}

TEST(Catalog, KnownGroups) {
  drg::Catalog cat(data_dir());
  auto m = cat.load("M11:12").group;
  EXPECT_EQ(m.degree(), 12u);
  EXPECT_EQ(m.order(), 7920u);
  EXPECT_EQ(m.orbit(0).size(), 12u);
  EXPECT_TRUE(drg::blocks_and_primitivity(m).is_primitive);

  auto a = cat.load("A5:6").group;
  EXPECT_EQ(a.stabilizer(0).order(), 10u);

  auto u = cat.load("PSU3(3):36").group;
  EXPECT_EQ(u.order(), 6048u);
  EXPECT_TRUE(drg::blocks_and_primitivity(u).is_primitive);
}

TEST(Catalog, M11SubgroupOrders) {
  drg::Catalog cat(data_dir());
  auto m = cat.load("M11:11");
  const std::pair<const char *, std::uint64_t> expected[] = {
      {"L2(11)", 660}, {"11:5", 55}, {"6:2", 12}, {"A5a", 60}, {"A5b", 60}, {"M9:2", 144}};
  for (auto [name, order] : expected) {
    const auto &sub = m.spec.subgroup(name);
    drg::PermGroup h(sub.generators);
    EXPECT_EQ(h.order(), order) << name;
    for (const auto &x : sub.generators)
      EXPECT_TRUE(m.group.contains(x)) << name;
  }
  // the two Alt(5) classes have different orbit structures on 11 points
  auto lens = [](const drg::PermGroup &h) {
    std::vector<std::size_t> l;
    for (const auto &o : h.orbits())
      l.push_back(o.size());
    std::sort(l.begin(), l.end());
    return l;
  };
  EXPECT_EQ(lens(drg::PermGroup(m.spec.subgroup("A5a").generators)), (std::vector<std::size_t>{1, 10}));
  EXPECT_EQ(lens(drg::PermGroup(m.spec.subgroup("A5b").generators)), (std::vector<std::size_t>{5, 6}));
}

TEST(Catalog, UnknownNameAndCorruption) {
  drg::Catalog cat(data_dir());
  EXPECT_THROW(cat.load("Nope:3"), drg::InputError);

  fs::path tmp = fs::temp_directory_path() / "drg_catalog_corrupt";
  fs::remove_all(tmp);
  fs::create_directories(tmp / "catalog");
  fs::copy_file(data_dir() / "catalog" / "index.json", tmp / "catalog" / "index.json");
  // S4 generators replaced by a 4-cycle alone: order 4, not 24
  std::ofstream(tmp / "catalog" / "S4_4.json")
      << R"({"name":"S4:4","degree":4,"one_based":false,"generators":[[1,2,3,0]]})";
  std::ofstream(tmp / "catalog" / "S3_3.json") << R"({"name":"S3:3","degree":3,"generators":[[0,0,1]]})";
  drg::Catalog bad(tmp);
  EXPECT_THROW(bad.load("S4:4"), drg::IntegrityError);
  EXPECT_THROW(bad.load("S3:3"), drg::IntegrityError);
  fs::remove_all(tmp);
}

TEST(GroupIo, ParsesBothGeneratorForms) {
  auto doc = nlohmann::json::parse(R"J({"name":"t","degree":4,"one_based":true,
    "generators":["(1,2,3,4)",[2,1,3,4]]})J");
  auto spec = drg::parse_group_spec(doc);
  EXPECT_EQ(spec.group().order(), 24u);
  auto round = drg::parse_group_spec(drg::to_json(spec));
  EXPECT_EQ(round.generators, spec.generators);
}

TEST(GroupIo, RejectsBadSpecs) {
  using nlohmann::json;
  EXPECT_THROW(drg::parse_group_spec(json::parse(R"({"degree":3,"generators":[]})")), drg::InputError);
  EXPECT_THROW(drg::parse_group_spec(json::parse(R"({"degree":3,"generators":[[0,1]]})")), drg::InputError);
  EXPECT_THROW(drg::parse_group_spec(json::parse(R"({"degree":0,"generators":[[0]]})")), drg::InputError);
  EXPECT_THROW(drg::parse_group_spec(json::parse(R"({"degree":3,"generators":[[0,1,1]]})")), drg::InputError);
}

TEST(GroupIo, SyntaxErrorNamesLine) {
  fs::path tmp = fs::temp_directory_path() / "drg_bad_spec.json";
  std::ofstream(tmp) << "{\n\"degree\": 3,\n\"generators\": [[1,2,0]\n}";
  try {
    drg::load_group_spec(tmp);
    FAIL() << "no exception";
  } catch (const drg::InputError &e) {
    EXPECT_NE(std::string(e.what()).find(":4:"), std::string::npos) << e.what();
  }
  fs::remove(tmp);
}
