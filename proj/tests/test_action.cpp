#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "steiner/action.hpp"
#include "steiner/notation.hpp"

using namespace steiner;

namespace {

ActionScenario make(ScenarioKind kind, const char* group) { return build_scenario(kind, build_group(GroupSpec::parse(group))); }

Block parse_one(const ActionScenario& s, const char* text) { return parse_blocks(text, s.space()).blocks.at(0); }

void expect_action_axioms(const ActionScenario& s) {
  const auto& G = s.group();
  const std::size_t n = G.order(), v = s.v();
  for (std::size_t p = 0; p < v; ++p) ASSERT_EQ(s(0, Point(p)), p);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) {
      const Element gh = G.op(Element(g), Element(h));
      for (std::size_t p = 0; p < v; ++p) ASSERT_EQ(s(Element(g), s(Element(h), Point(p))), s(gh, Point(p)));
    }
  // Each labeled orbit is a single transitive orbit; fixed points are fixed.
  for (const auto& o : s.space().orbits()) {
    std::vector<char> seen(v, 0);
    for (std::size_t g = 0; g < n; ++g) seen[s(Element(g), Point(o.offset))] = 1;
    for (std::size_t p = 0; p < v; ++p) ASSERT_EQ(bool(seen[p]), p >= o.offset && p < o.offset + o.size);
  }
}

}  // namespace

TEST(BuildScenario, RegularPlusFixedZ155) {
  auto s = make(ScenarioKind::RegularPlusFixed, "Cyclic(155)");
  EXPECT_EQ(s.v(), 156u);
  EXPECT_EQ(s.space().label(155), "∞");
  EXPECT_EQ(s.space().fixed_point(), 155);
}

TEST(BuildScenario, CyclicTwoOrbitZ53Labels) {
  auto s = make(ScenarioKind::CyclicTwoOrbit, "Cyclic(53)");
  EXPECT_EQ(s.v(), 106u);
  EXPECT_EQ(s.space().label(0), "0");
  EXPECT_EQ(s.space().label(52), "52");
  EXPECT_EQ(s.space().label(53), "0'");
  EXPECT_EQ(s.space().label(105), "52'");
}

TEST(BuildScenario, FrobeniusOrbitSizes) {
  auto s = make(ScenarioKind::Frobenius57_19_19_1, "Semidirect(19,3,7)");
  EXPECT_EQ(s.v(), 96u);
  std::vector<std::size_t> sizes;
  for (const auto& o : s.space().orbits()) sizes.push_back(o.size);
  EXPECT_EQ(sizes, (std::vector<std::size_t>{57, 19, 19, 1}));
  EXPECT_EQ(s.space().label(76), "0''");
}

TEST(BuildScenario, KindGroupMismatch) {
  EXPECT_THROW(make(ScenarioKind::CyclicTwoOrbit, "Semidirect(19,3,7)"), Error);
  EXPECT_THROW(make(ScenarioKind::Frobenius57_19_19_1, "Cyclic(57)"), Error);
  EXPECT_THROW(make(ScenarioKind::CyclicTwoOrbit, "Direct(Cyclic(3),Cyclic(5))"), Error);
}

TEST(Apply, Examples) {
  auto fixed = make(ScenarioKind::RegularPlusFixed, "Semidirect(19,3,7)");
  for (std::size_t g = 0; g < 57; ++g) EXPECT_EQ(fixed.apply(g, 57), 57);

  auto two = make(ScenarioKind::CyclicTwoOrbit, "Cyclic(53)");
  EXPECT_EQ(two.space().label(two.apply(5, two.space().parse_label("10'"))), "15'");

  auto frob = make(ScenarioKind::Frobenius57_19_19_1, "Semidirect(19,3,7)");
  EXPECT_EQ(frob.space().label(frob.apply(20, frob.space().parse_label("3'"))), "15'");
  EXPECT_EQ(frob.space().label(frob.apply(20, frob.space().parse_label("3''"))), "15''");

  EXPECT_THROW(two.apply(53, 0), Error);
  EXPECT_THROW(two.apply(0, 106), Error);
}

TEST(Apply, AxiomsExhaustiveForSmallGroups) {
  const std::vector<std::pair<ScenarioKind, const char*>> cases{
      {ScenarioKind::Regular, "Semidirect(7,3,2)"},
      {ScenarioKind::RegularPlusFixed, "Cyclic(30)"},
      {ScenarioKind::RegularPlusFixed, "Semidirect(15,2,14)"},
      {ScenarioKind::RegularPlusFixed, "Direct(Cyclic(5),Semidirect(3,2,2))"},
      {ScenarioKind::RegularPlusFixed, "Direct(Cyclic(3),Semidirect(5,2,4))"},
      {ScenarioKind::RegularPlusFixed, "Heisenberg(3)"},
      {ScenarioKind::CyclicTwoOrbit, "Cyclic(48)"},
      {ScenarioKind::CyclicTwoOrbit, "Cyclic(53)"},
      {ScenarioKind::CyclicTwoOrbitPlusFixed, "Cyclic(55)"},
      {ScenarioKind::Frobenius57_19_19_1, "Semidirect(19,3,7)"},
  };
  for (auto [kind, group] : cases) {
    SCOPED_TRACE(group);
    expect_action_axioms(make(kind, group));
  }
}

TEST(BlockOrbit, Examples) {
  auto three = make(ScenarioKind::CyclicTwoOrbitPlusFixed, "Cyclic(55)");
  EXPECT_EQ(three.block_orbit(parse_one(three, "[0, 11, 22, 33, 44, inf]")).size(), 11u);

  auto two = make(ScenarioKind::CyclicTwoOrbit, "Cyclic(48)");
  EXPECT_EQ(two.block_orbit(parse_one(two, "[0', 8', 16', 24', 32', 40']")).size(), 8u);
  EXPECT_EQ(two.stabilizer(parse_one(two, "[0', 8', 16', 24', 32', 40']")).size(), 6u);
  EXPECT_EQ(two.block_orbit(parse_one(two, "[0, 1, 3, 13, 28, 0']")).size(), 48u);
}

TEST(BlockOrbit, OrbitStabilizerProduct) {
  auto s = make(ScenarioKind::RegularPlusFixed, "Semidirect(19,3,7)");
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Point> all(s.v());
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    Block b(all.begin(), all.begin() + 3 + trial % 4);
    auto orbit = s.block_orbit(b).size();
    EXPECT_EQ(orbit * s.stabilizer(b).size(), s.group_order());
  }
  // A coset of the order-3 subgroup generated by element 19.
  Block coset{0, 19, 38};
  EXPECT_EQ(s.block_orbit(coset).size(), 19u);
}

TEST(PairClasses, Counts) {
  auto z155 = make(ScenarioKind::RegularPlusFixed, "Cyclic(155)");
  EXPECT_EQ(pair_classes(z155).count(), 78u);
  auto z48 = make(ScenarioKind::CyclicTwoOrbit, "Cyclic(48)");
  EXPECT_EQ(pair_classes(z48).count(), 96u);
}

TEST(PairClasses, PartitionAndInvariance) {
  for (auto [kind, group] : std::vector<std::pair<ScenarioKind, const char*>>{
           {ScenarioKind::CyclicTwoOrbit, "Cyclic(48)"},
           {ScenarioKind::CyclicTwoOrbitPlusFixed, "Cyclic(55)"},
           {ScenarioKind::Frobenius57_19_19_1, "Semidirect(19,3,7)"},
           {ScenarioKind::Regular, "SL(2,5)"}}) {
    auto s = make(kind, group);
    auto pc = pair_classes(s);
    const std::size_t v = s.v();
    EXPECT_EQ(std::accumulate(pc.size.begin(), pc.size.end(), std::size_t(0)), v * (v - 1) / 2);
    for (std::size_t p = 0; p < v; ++p)
      for (std::size_t q = p + 1; q < v; ++q) {
        const auto c = pc(Point(p), Point(q));
        ASSERT_NE(c, PairClasses::kNone);
        ASSERT_EQ(c, pc(Point(q), Point(p)));
        for (std::size_t g = 0; g < s.group_order(); g += 7)
          ASSERT_EQ(pc(s(Element(g), Point(p)), s(Element(g), Point(q))), c);
      }
  }
}
