#include <gtest/gtest.h>

#include <random>

#include "steiner/catalog.hpp"
#include "steiner/design.hpp"

using namespace steiner;

namespace {

ExpandedEntry mills() { return expand_entry(catalog_lookup("S266-Z48-two-orbit-01")); }

std::map<std::size_t, std::size_t> orbit_profile(const BaseBlockSystem& sys) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& b : sys.base) ++out[sys.scenario->block_orbit(b).size()];
  return out;
}

}  // namespace

TEST(Expand, MillsZ48) {
  auto x = mills();
  EXPECT_EQ(x.design.b(), 304u);
  EXPECT_EQ(x.system.base.size(), 8u);
  auto rep = verify_steiner(x.design);
  EXPECT_TRUE(rep.pass);
  EXPECT_EQ(rep.b, 304u);
  ASSERT_TRUE(rep.r.has_value());
  EXPECT_EQ(*rep.r, 19u);
}

TEST(Expand, Z55ThreeOrbitItem1) {
  auto x = expand_entry(catalog_lookup("S266-Z55-three-orbit-01"));
  EXPECT_EQ(x.system.base.size(), 9u);
  EXPECT_EQ(x.design.b(), 407u);
  EXPECT_TRUE(verify_steiner(x.design).pass);
}

TEST(Expand, Z155Item1OrbitProfile) {
  auto x = expand_entry(catalog_lookup("S266-Z155-rot-01"));
  EXPECT_EQ(x.design.b(), 806u);
  EXPECT_EQ(orbit_profile(x.system), (std::map<std::size_t, std::size_t>{{31, 1}, {155, 5}}));
}

TEST(Expand, Idempotent) {
  auto x = mills();
  auto reps = orbit_representatives(x.design, *x.system.scenario);
  EXPECT_EQ(reps.size(), 8u);
  EXPECT_EQ(expand(BaseBlockSystem{x.system.scenario, reps}), x.design);
}

TEST(Expand, TranslatedBaseBlocksGiveSameDesign) {
  auto x = mills();
  std::mt19937 rng(3);
  auto sys = x.system;
  for (auto& b : sys.base) b = sys.scenario->apply_block(Element(rng() % 48), b);
  EXPECT_EQ(expand(sys), x.design);
}

TEST(Expand, OrbitCollisionNamesBothBlocks) {
  auto x = mills();
  auto sys = x.system;
  sys.base.push_back(sys.scenario->apply_block(5, sys.base[2]));
  try {
    expand(sys);
    FAIL() << "expected a collision error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("base blocks 2 and 8"), std::string::npos) << e.what();
  }
}

TEST(Verify, DeletedBlockLeavesFifteenPairs) {
  auto x = mills();
  auto blocks = x.design.blocks();
  blocks.erase(blocks.begin() + 17);
  auto rep = verify_steiner(Design::make(96, 6, blocks));
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.uncovered.size(), 15u);
  EXPECT_TRUE(rep.multiply_covered.empty());
}

TEST(Verify, DuplicatedBlockRejectedAtConstruction) {
  auto blocks = mills().design.blocks();
  blocks.push_back(blocks[3]);
  EXPECT_THROW(Design::make(96, 6, blocks), Error);
}

TEST(Verify, CountingIdentities) {
  for (const char* id : {"S266-Z48-two-orbit-01", "S266-Z53-two-orbit-07", "S266-Z55-three-orbit-04",
                         "S266-F57-four-orbit-02", "S266-Z155-rot-09"}) {
    auto d = expand_entry(catalog_lookup(id)).design;
    const std::size_t v = d.v(), k = d.k();
    EXPECT_EQ(d.b() * k * (k - 1) / 2, v * (v - 1) / 2) << id;
    std::vector<std::size_t> deg(v, 0);
    for (const auto& b : d.blocks())
      for (Point p : b) ++deg[p];
    for (auto r : deg) EXPECT_EQ(r, (v - 1) / (k - 1)) << id;
  }
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(admissible(96, 6));
  EXPECT_FALSE(admissible(100, 6));
  EXPECT_TRUE(admissible(7, 3));
  EXPECT_FALSE(admissible(5, 3));
  EXPECT_FALSE(admissible(6, 3));
  EXPECT_TRUE(admissible(120, 8));
}

TEST(ResolveNumbering, Z48ResolvesToCyclic) {
  auto base = catalog_lookup("S266-Z48-two-orbit-01").base_blocks();
  auto res = resolve_numbering({GroupSpec::cyclic(48)}, ScenarioKind::CyclicTwoOrbit, base);
  ASSERT_TRUE(res.ok());
  EXPECT_EQ(*res.chosen, 0u);
  EXPECT_EQ(res.design->b(), 304u);
}

TEST(ResolveNumbering, Z155ExactlyOneCandidate) {
  const std::vector<GroupSpec> cands{GroupSpec::cyclic(155),
                                     GroupSpec::direct(GroupSpec::cyclic(5), GroupSpec::cyclic(31))};
  for (const auto* e : catalog_family("S266-Z155-rot")) {
    std::size_t verified = 0;
    for (const auto& c : cands) verified += resolve_numbering({c}, ScenarioKind::RegularPlusFixed, e->base_blocks()).ok();
    EXPECT_EQ(verified, 1u) << e->id;
    auto res = resolve_numbering(cands, ScenarioKind::RegularPlusFixed, e->base_blocks());
    ASSERT_TRUE(res.ok());
    EXPECT_EQ(*res.chosen, 0u) << e->id;
  }
}

TEST(ResolveNumbering, SpecialLinearProbeFails) {
  const auto& e = catalog_lookup("S266-SL25-rot-01");
  auto res = resolve_numbering({GroupSpec::sl25()}, ScenarioKind::RegularPlusFixed, e.base_blocks());
  EXPECT_FALSE(res.ok());
  ASSERT_EQ(res.attempts.size(), 1u);
  EXPECT_FALSE(res.attempts[0].verified);
  EXPECT_TRUE(import_required(e));
}

TEST(ResolveNumbering, EmptyCandidateList) {
  EXPECT_THROW(resolve_numbering({}, ScenarioKind::CyclicTwoOrbit, {}), Error);
}
