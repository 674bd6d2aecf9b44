#include <gtest/gtest.h>

#include "steiner/catalog.hpp"
#include "steiner/notation.hpp"

using namespace steiner;

TEST(ParseBlocks, MillsPair) {
  auto space = scenario_space(ScenarioKind::CyclicTwoOrbit, 48);
  auto parsed = parse_blocks("[[0, 1, 3, 13, 28, 0'], [0, 18, 11', 28', 33', 39']]", space);
  ASSERT_EQ(parsed.blocks.size(), 2u);
  EXPECT_EQ(parsed.blocks[0], (Block{0, 1, 3, 13, 28, 48}));
  EXPECT_EQ(parsed.blocks[1], (Block{0, 18, 59, 76, 81, 87}));
}

TEST(ParseBlocks, FixedPointSpellings) {
  auto space = scenario_space(ScenarioKind::RegularPlusFixed, 155);
  for (const char* text : {"[0, 15, 21, 37, 73, ∞]", "[0, 15, 21, 37, 73, inf]", "[0, 15, 21, 37, 73, $\\infty$]"}) {
    auto parsed = parse_blocks(text, space);
    ASSERT_EQ(parsed.blocks.size(), 1u) << text;
    EXPECT_EQ(parsed.blocks[0].back(), 155) << text;
  }
}

TEST(ParseBlocks, Errors) {
  auto frob = scenario_space(ScenarioKind::Frobenius57_19_19_1, 57);
  try {
    parse_blocks("[0, 3''']", frob);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("prime depth 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_blocks("[0, 19']", frob), Error);
  EXPECT_THROW(parse_blocks("[0, 1, 1]", frob), Error);
  EXPECT_THROW(parse_blocks("[0, x]", frob), Error);
  EXPECT_THROW(parse_blocks("[[0, 1], [2, 3]", frob), Error);
  auto cyc = scenario_space(ScenarioKind::CyclicTwoOrbit, 48);
  EXPECT_THROW(parse_blocks("[0, inf]", cyc), Error);
}

TEST(ParseBlocks, WrongSizeWarnsUnlessStrict) {
  auto space = scenario_space(ScenarioKind::CyclicTwoOrbit, 48);
  ParseOptions opt;
  opt.block_size = 6;
  auto parsed = parse_blocks("[[0, 1, 2]]", space, opt);
  EXPECT_EQ(parsed.warnings.size(), 1u);
  opt.strict = true;
  EXPECT_THROW(parse_blocks("[[0, 1, 2]]", space, opt), Error);
}

TEST(ParseBlocks, StrictRejectsTypesettingResidue) {
  auto space = scenario_space(ScenarioKind::CyclicTwoOrbit, 48);
  ParseOptions strict;
  strict.strict = true;
  EXPECT_THROW(parse_blocks("[[0, 1], \\newline [2, 3]]", space, strict), Error);
  EXPECT_EQ(parse_blocks("[[0, 1], \\newline [2, 3]]", space).blocks.size(), 2u);
}

TEST(EmitBlocks, Examples) {
  auto space = scenario_space(ScenarioKind::RegularPlusFixed, 10);
  EXPECT_EQ(emit_blocks({{10, 0}}, space), "[[0, ∞]]");
  EXPECT_EQ(emit_block({10, 0}, space), "[0, ∞]");
  EXPECT_EQ(emit_blocks({}, space), "[]");
  EXPECT_TRUE(parse_blocks("[]", space).blocks.empty());
}

TEST(EmitBlocks, CatalogRoundTrip) {
  for (const auto& e : catalog()) {
    auto space = e.space();
    auto blocks = e.base_blocks();
    ASSERT_FALSE(blocks.empty()) << e.id;
    auto text = emit_blocks(blocks, space);
    ParseOptions strict;
    strict.strict = true;
    strict.block_size = e.k;
    auto again = parse_blocks(text, space, strict).blocks;
    EXPECT_EQ(again, blocks) << e.id;
    EXPECT_EQ(emit_blocks(again, space), text) << e.id;
  }
}
