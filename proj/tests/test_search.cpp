#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "steiner/catalog.hpp"
#include "steiner/search.hpp"

using namespace steiner;

namespace {

std::shared_ptr<const ActionScenario> scenario(ScenarioKind kind, const GroupSpec& g) {
  return std::make_shared<const ActionScenario>(build_scenario(kind, build_group(g)));
}

SearchConfig config(ScenarioKind kind, const GroupSpec& g, std::size_t k) {
  SearchConfig cfg;
  cfg.scenario = scenario(kind, g);
  cfg.k = k;
  return cfg;
}

std::string temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("steiner_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove(p);
  return p.string();
}

struct Instance {
  const char* name;
  ScenarioKind kind;
  GroupSpec group;
  std::size_t k;
};

std::ostream& operator<<(std::ostream& os, const Instance& in) { return os << in.name; }

// Small instances where the naive enumeration finishes in well under a
// second; several have hundreds of systems, several have none.
const std::vector<Instance>& oracle_instances() {
  static const std::vector<Instance> list = {
      {"Z8_fixed_k3", ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(8), 3},
      {"Z12_fixed_k3", ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(12), 3},
      {"Z12_fixed_k4", ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(12), 4},
      {"Z14_fixed_k3", ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(14), 3},
      {"Z20_fixed_k3", ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(20), 3},
      {"Z2xZ4_fixed_k3", ScenarioKind::RegularPlusFixed, GroupSpec::direct(GroupSpec::cyclic(2), GroupSpec::cyclic(4)), 3},
      {"Z13_k3", ScenarioKind::Regular, GroupSpec::cyclic(13), 3},
      {"Z13_k4", ScenarioKind::Regular, GroupSpec::cyclic(13), 4},
      {"Z15_k3", ScenarioKind::Regular, GroupSpec::cyclic(15), 3},
      {"Z21_k5", ScenarioKind::Regular, GroupSpec::cyclic(21), 5},
      {"Z7xZ3_k3", ScenarioKind::Regular, GroupSpec::semidirect(7, 3, 2), 3},
      {"Z8_two_orbit_k4", ScenarioKind::CyclicTwoOrbit, GroupSpec::cyclic(8), 4},
      {"Z14_two_orbit_k4", ScenarioKind::CyclicTwoOrbit, GroupSpec::cyclic(14), 4},
      {"Z8_two_orbit_k6", ScenarioKind::CyclicTwoOrbit, GroupSpec::cyclic(8), 6},
      {"Z6_two_orbit_fixed_k3", ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(6), 3},
      {"Z7_two_orbit_fixed_k3", ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(7), 3},
      {"Z9_two_orbit_fixed_k3", ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(9), 3},
      {"Z6_two_orbit_fixed_k4", ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(6), 4},
      {"Z12_two_orbit_fixed_k4", ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(12), 4},
      {"Z10_two_orbit_fixed_k5", ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(10), 5},
      {"Z12_two_orbit_fixed_k5", ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(12), 5},
      {"Z10_two_orbit_fixed_k6", ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(10), 6},
  };
  return list;
}

class OracleEquivalence : public ::testing::TestWithParam<Instance> {};

}  // namespace

TEST_P(OracleEquivalence, MatchesNaiveEnumeration) {
  const auto& in = GetParam();
  auto cfg = config(in.kind, in.group, in.k);
  const auto expected = brute_force_oracle(*cfg.scenario, in.k);
  const bool matching = detail::TwoOrbitSearch::applicable(*cfg.scenario, in.k, {});
  for (auto strategy : {SearchStrategy::PairClasses, SearchStrategy::DifferenceMatching}) {
    if (strategy == SearchStrategy::DifferenceMatching && !matching) continue;
    for (bool sym : {false, true}) {
      cfg.strategy = strategy;
      cfg.use_symmetry = sym;
      const auto r = enumerate_designs(cfg);
      EXPECT_TRUE(r.exhaustive);
      EXPECT_EQ(r.systems, expected) << "strategy " << int(strategy) << " symmetry " << sym;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Small, OracleEquivalence, ::testing::ValuesIn(oracle_instances()),
                         [](const auto& info) { return std::string(info.param.name); });

// Counts from the naive enumeration, pinned so that a regression in both
// engines at once is still caught.
TEST(Search, PinnedCounts) {
  struct Case {
    ScenarioKind kind;
    std::size_t n, k, count;
  };
  for (auto c : std::vector<Case>{{ScenarioKind::RegularPlusFixed, 8, 3, 2},
                                  {ScenarioKind::CyclicTwoOrbit, 8, 4, 16},
                                  {ScenarioKind::CyclicTwoOrbitPlusFixed, 12, 4, 48},
                                  {ScenarioKind::CyclicTwoOrbitPlusFixed, 12, 5, 24},
                                  {ScenarioKind::CyclicTwoOrbitPlusFixed, 18, 4, 432}}) {
    const auto r = enumerate_designs(config(c.kind, GroupSpec::cyclic(c.n), c.k));
    EXPECT_EQ(r.systems.size(), c.count) << to_string(c.kind) << " Z" << c.n << " k=" << c.k;
  }
}

TEST(Search, EveryResultVerifies) {
  auto cfg = config(ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(8), 3);
  const auto r = enumerate_designs(cfg);
  ASSERT_FALSE(r.systems.empty());
  for (const auto& sys : r.base_block_systems(cfg.scenario)) {
    const Design d = expand(sys);
    EXPECT_EQ(d.v(), 9u);
    EXPECT_TRUE(verify_steiner(d).pass);
  }
}

TEST(Search, StrategiesAgreeBeyondOracleCap) {
  auto cfg = config(ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(18), 4);
  cfg.strategy = SearchStrategy::PairClasses;
  const auto a = enumerate_designs(cfg);
  cfg.strategy = SearchStrategy::DifferenceMatching;
  const auto b = enumerate_designs(cfg);
  cfg.use_symmetry = false;
  const auto c = enumerate_designs(cfg);
  EXPECT_EQ(a.systems, b.systems);
  EXPECT_EQ(b.systems, c.systems);
}

TEST(Search, BranchPartitionUnionEqualsFullRun) {
  for (auto strategy : {SearchStrategy::PairClasses, SearchStrategy::DifferenceMatching}) {
    auto cfg = config(ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(12), 4);
    cfg.strategy = strategy;
    const auto full = enumerate_designs(cfg);
    ASSERT_GE(full.stats.branches_total, 3u);
    std::set<std::vector<Block>> merged;
    std::size_t selected = 0;
    cfg.branch_count = 3;
    for (std::size_t i = 0; i < 3; ++i) {
      cfg.branch_index = i;
      const auto part = enumerate_designs(cfg);
      selected += part.stats.branches_selected;
      merged.insert(part.systems.begin(), part.systems.end());
    }
    EXPECT_EQ(selected, full.stats.branches_total);
    EXPECT_EQ(std::vector<std::vector<Block>>(merged.begin(), merged.end()), full.systems);
  }
}

TEST(Search, CheckpointResumeReproducesSingleRun) {
  for (auto strategy : {SearchStrategy::PairClasses, SearchStrategy::DifferenceMatching}) {
    auto cfg = config(ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(12), 4);
    cfg.strategy = strategy;
    const auto full = enumerate_designs(cfg);

    const std::string path = temp_path("ckpt");
    auto first = cfg;
    first.checkpoint = path;
    first.branch_count = 2;
    first.branch_index = 0;
    const auto half = enumerate_designs(first);
    EXPECT_EQ(half.stats.branches_resumed, 0u);

    auto resume = cfg;
    resume.checkpoint = path;
    const auto rest = enumerate_designs(resume);
    EXPECT_EQ(rest.stats.branches_resumed, half.stats.branches_selected);
    EXPECT_EQ(rest.systems, full.systems);

    // Everything is now recorded; a third run only replays the file.
    const auto replay = enumerate_designs(resume);
    EXPECT_EQ(replay.stats.branches_resumed, full.stats.branches_total);
    EXPECT_EQ(replay.systems, full.systems);

    // Resumed systems are attributed to their branches.
    auto other = cfg;
    other.checkpoint = path;
    other.branch_count = 2;
    other.branch_index = 1;
    auto fresh = cfg;
    fresh.branch_count = 2;
    fresh.branch_index = 1;
    EXPECT_EQ(enumerate_designs(other).systems, enumerate_designs(fresh).systems);
    std::filesystem::remove(path);
  }
}

TEST(Search, InterruptedBranchIsRedone) {
  auto cfg = config(ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(8), 3);
  const auto full = enumerate_designs(cfg);
  ASSERT_GE(full.systems.size(), 2u);
  const std::string path = temp_path("ckpt_cut");
  {
    // A system line whose branch never completed, and a comment.
    std::ofstream out(path);
    out << "# partial\nsystem " << detail::blocks_key(full.systems.front()) << "\n";
  }
  auto resume = cfg;
  resume.checkpoint = path;
  const auto r = enumerate_designs(resume);
  EXPECT_EQ(r.stats.branches_resumed, 0u);
  EXPECT_EQ(r.systems, full.systems);
  std::filesystem::remove(path);
}

TEST(Search, CheckpointRejectsGarbage) {
  const std::string path = temp_path("ckpt_bad");
  {
    std::ofstream out(path);
    out << "nonsense line\n";
  }
  auto cfg = config(ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(8), 3);
  cfg.checkpoint = path;
  EXPECT_THROW(enumerate_designs(cfg), Error);
  std::filesystem::remove(path);
}

TEST(Search, WorkerCountDoesNotChangeResult) {
  for (auto strategy : {SearchStrategy::PairClasses, SearchStrategy::DifferenceMatching}) {
    auto cfg = config(ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(12), 4);
    cfg.strategy = strategy;
    const auto one = enumerate_designs(cfg);
    cfg.workers = 3;
    const auto three = enumerate_designs(cfg);
    EXPECT_EQ(one.systems, three.systems);
  }
}

TEST(Search, RepeatedRunsAreIdentical) {
  auto cfg = config(ScenarioKind::Regular, GroupSpec::cyclic(21), 5);
  EXPECT_EQ(enumerate_designs(cfg).systems, enumerate_designs(cfg).systems);
}

TEST(Search, LimitAndSampleMarkIncomplete) {
  auto cfg = config(ScenarioKind::CyclicTwoOrbitPlusFixed, GroupSpec::cyclic(12), 4);
  cfg.limit = 1;
  const auto limited = enumerate_designs(cfg);
  EXPECT_FALSE(limited.exhaustive);
  EXPECT_EQ(limited.systems.size(), 1u);
  cfg.limit.reset();
  cfg.sample = 1;
  const auto sampled = enumerate_designs(cfg);
  EXPECT_FALSE(sampled.exhaustive);
  EXPECT_EQ(sampled.stats.branches_selected, 1u);
}

TEST(Search, ForcedBlocksAreKept) {
  auto cfg = config(ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(8), 3);
  const auto all = enumerate_designs(cfg);
  ASSERT_FALSE(all.systems.empty());
  const Block forced = all.systems.front().front();
  cfg.forced = {forced};
  const auto r = enumerate_designs(cfg);
  std::vector<std::vector<Block>> expected;
  for (const auto& sys : all.systems)
    if (std::find(sys.begin(), sys.end(), forced) != sys.end()) expected.push_back(sys);
  EXPECT_EQ(r.systems, expected);
}

TEST(Search, RejectsInadmissibleParameters) {
  try {
    enumerate_designs(config(ScenarioKind::CyclicTwoOrbit, GroupSpec::cyclic(3), 3));
    FAIL() << "v=6, k=3 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Inadmissible);
  }
  try {
    enumerate_designs(config(ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(4), 3));
    FAIL() << "v=5, k=3 accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Inadmissible);
  }
}

TEST(Search, RejectsBadSelectorsAndStrategy) {
  auto cfg = config(ScenarioKind::RegularPlusFixed, GroupSpec::cyclic(8), 3);
  cfg.branch_index = 2;
  cfg.branch_count = 2;
  EXPECT_THROW(enumerate_designs(cfg), Error);
  cfg.branch_index = 0;
  cfg.workers = 0;
  EXPECT_THROW(enumerate_designs(cfg), Error);
  cfg.workers = 1;
  cfg.strategy = SearchStrategy::DifferenceMatching;
  EXPECT_THROW(enumerate_designs(cfg), Error);
}

TEST(Search, OneRotationalOrderThirtyAndZ35Empty) {
  const std::vector<GroupSpec> groups = {
      GroupSpec::cyclic(30),
      GroupSpec::semidirect(15, 2, 14),
      GroupSpec::direct(GroupSpec::cyclic(5), GroupSpec::semidirect(3, 2, 2)),
      GroupSpec::direct(GroupSpec::cyclic(3), GroupSpec::semidirect(5, 2, 4)),
      GroupSpec::cyclic(35),
  };
  for (const auto& g : groups) {
    const auto r = enumerate_designs(config(ScenarioKind::RegularPlusFixed, g, 6));
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.systems.empty()) << g.to_string();
  }
}

TEST(Oracle, RefusesLargeInstances) {
  auto s = scenario(ScenarioKind::CyclicTwoOrbit, GroupSpec::cyclic(48));
  try {
    brute_force_oracle(*s, 6);
    FAIL() << "no cap";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(IsomorphismClasses, CatalogFamiliesAreDistinct) {
  std::vector<Design> z55;
  for (const auto* e : catalog_family("S266-Z55-three-orbit")) z55.push_back(expand_entry(*e).design);
  ASSERT_EQ(z55.size(), 4u);
  EXPECT_EQ(isomorphism_classes(z55).size(), 4u);

  // Duplicates, relabeled or not, join existing classes.
  auto with_copies = z55;
  std::vector<Point> rev(z55[0].v());
  for (std::size_t p = 0; p < rev.size(); ++p) rev[p] = Point(rev.size() - 1 - p);
  with_copies.push_back(z55[2].relabeled(rev));
  with_copies.push_back(z55[0]);
  const auto cls = isomorphism_classes(with_copies, 2);
  ASSERT_EQ(cls.size(), 4u);
  for (const auto& c : cls) {
    if (c.representative == 0) {
      EXPECT_EQ(c.members, (std::vector<std::size_t>{0, 5}));
    } else if (c.representative == 2) {
      EXPECT_EQ(c.members, (std::vector<std::size_t>{2, 4}));
    }
  }
}

TEST(IsomorphismClasses, RejectsMixedParameters) {
  std::vector<Design> mixed = {expand_entry(catalog_lookup("S266-Z48-two-orbit-01")).design,
                               expand_entry(catalog_lookup("S266-Z55-three-orbit-01")).design};
  EXPECT_THROW(isomorphism_classes(mixed), Error);
  EXPECT_TRUE(isomorphism_classes({}).empty());
}

TEST(DifferencePackings, PlanarDifferenceSetsModThirteen) {
  // (13,4,1) difference sets up to translation: the 12 multiples of
  // {0,1,3,9} fall into 4 translation classes (the multiplier 3 fixes it).
  detail::CyclicResidues z(13);
  detail::ResidueMask classes = 0;
  for (std::size_t d = 1; d <= 6; ++d) classes |= detail::ResidueMask(1) << d;
  std::set<detail::Packing> seen;
  std::size_t emitted = 0;
  detail::difference_packings(z, classes, {4}, [&](const detail::Packing& p) {
    ++emitted;
    seen.insert(p);
  });
  EXPECT_EQ(emitted, 4u);
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_TRUE(seen.count({z.canonical({0, 1, 3, 9})}));
}

TEST(DifferencePackings, WrongTotalGivesNothing) {
  detail::CyclicResidues z(13);
  std::size_t emitted = 0;
  detail::difference_packings(z, 0b1111110, {3}, [&](const detail::Packing&) { ++emitted; });
  EXPECT_EQ(emitted, 0u);
}

TEST(MixedTiler, DominoTilingsOfZ6) {
  // Three translates of {0,1} tile Z6 in 2 ways as sets, 12 as labeled
  // placements; pinning block 0 at offset 0 leaves 2.
  detail::CyclicResidues z(6);
  const std::vector<detail::ResidueMask> sets(3, 0b11);
  std::vector<detail::ResidueMask> rot(6);
  for (std::size_t t = 0; t < 6; ++t) rot[t] = z.rotate(0b11, t);
  const std::vector<const detail::ResidueMask*> rots(3, rot.data());
  for (bool pin : {false, true}) {
    detail::MixedTiler tiler(z);
    std::size_t count = 0;
    tiler.run(sets, rots, z.full(), pin, [&](const std::vector<std::size_t>& off) {
      detail::ResidueMask cover = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_FALSE(cover & rot[off[i]]);
        cover |= rot[off[i]];
      }
      EXPECT_EQ(cover, z.full());
      if (pin) {
        EXPECT_EQ(off[0], 0u);
      }
      ++count;
      return true;
    });
    EXPECT_EQ(count, pin ? 2u : 12u);
  }
}
