#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "steiner/catalog.hpp"
#include "steiner/invariants.hpp"

using namespace steiner;

namespace {

Design fano() { return Design::make(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}}); }

Design affine_plane_3() {
  std::vector<Block> lines;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Block l;
      for (int x = 0; x < 3; ++x) l.push_back(Point(3 * x + (a * x + b) % 3));
      lines.push_back(l);
    }
  for (int c = 0; c < 3; ++c) lines.push_back({Point(3 * c), Point(3 * c + 1), Point(3 * c + 2)});
  return Design::make(9, 3, lines);
}

Design cyclic_design(std::size_t n, std::vector<Block> base) {
  auto s = std::make_shared<const ActionScenario>(build_scenario(ScenarioKind::Regular, build_group(GroupSpec::cyclic(n))));
  return expand(BaseBlockSystem{s, std::move(base)});
}

std::vector<Point> random_permutation(std::size_t v, std::mt19937& rng) {
  std::vector<Point> p(v);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Design design_of(const char* id) { return expand_entry(catalog_lookup(id)).design; }

}  // namespace

TEST(Fingerprint, MillsMatchesPrintedBuckets) {
  const auto& e = catalog_lookup("S266-Z48-two-orbit-01");
  auto f = fingerprint(expand_entry(e).design);
  EXPECT_EQ(f.total(), 3283200u);
  EXPECT_EQ(f.total(), fingerprint_total(96, 6, 304));
  EXPECT_EQ(e.printed().total(), 3283200u);
  EXPECT_EQ(f.to_string(), "{1=37632, 2=492192, 3=1475136, 4=1278240}");
}

TEST(Fingerprint, KeysWithinRange) {
  auto f = fingerprint(design_of("S266-Z53-two-orbit-02"));
  for (auto [key, count] : f.histogram) EXPECT_LE(key, 4u);
  EXPECT_EQ(f.total(), 4452000u);
}

TEST(Fingerprint, RelabelInvariant) {
  auto d = design_of("S266-Z55-three-orbit-01");
  std::mt19937 rng(11);
  auto f = fingerprint(d);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(fingerprint(d.relabeled(random_permutation(d.v(), rng))), f);
}

TEST(Fingerprint, TextRoundTrip) {
  auto f = Fingerprint::parse("{0=530, 1=41128, 2=521202, 3=1957396, 4=1931744}");
  EXPECT_EQ(f.histogram.size(), 5u);
  EXPECT_EQ(f.to_string(), "{0=530, 1=41128, 2=521202, 3=1957396, 4=1931744}");
  EXPECT_EQ(Fingerprint::parse("\\{1=2\\}").to_string(), "{1=2}");
  EXPECT_THROW(Fingerprint::parse("{1:2}"), Error);
}

TEST(Fingerprint, RejectsNonSteiner) {
  auto blocks = fano().blocks();
  blocks.pop_back();
  EXPECT_THROW(fingerprint(Design::make(7, 3, blocks)), Error);
}

TEST(Automorphisms, ClassicalPlanes) {
  EXPECT_EQ(automorphism_count(fano()), 168u);
  EXPECT_EQ(automorphism_count(affine_plane_3()), 432u);
  EXPECT_EQ(automorphism_count(cyclic_design(13, {{0, 1, 4}, {0, 2, 7}})), 39u);
  EXPECT_EQ(automorphism_count(cyclic_design(21, {{0, 1, 4, 14, 16}})), 120960u);
  EXPECT_EQ(automorphism_count(cyclic_design(31, {{0, 1, 3, 8, 12, 18}})), 372000u);
}

TEST(Automorphisms, GeneratorsPreserveBlocks) {
  auto d = cyclic_design(21, {{0, 1, 4, 14, 16}});
  for (const auto& g : automorphism_generators(d)) EXPECT_EQ(d.relabeled(g), d);
}

TEST(Automorphisms, GroupOrderDividesCount) {
  for (const char* id : {"S266-Z155-rot-01", "S266-Z48-two-orbit-01", "S266-F57-four-orbit-03"}) {
    auto x = expand_entry(catalog_lookup(id));
    const auto& s = *x.system.scenario;
    // The action is faithful and preserves the block set.
    for (std::size_t g = 1; g < s.group_order(); ++g) {
      std::vector<Point> perm(s.permutation(Element(g)), s.permutation(Element(g)) + s.v());
      EXPECT_EQ(x.design.relabeled(perm), x.design);
      bool identity = true;
      for (std::size_t p = 0; p < s.v(); ++p) identity = identity && perm[p] == p;
      EXPECT_FALSE(identity);
    }
    EXPECT_EQ(automorphism_count(x.design) % s.group_order(), 0u) << id;
  }
}

TEST(Automorphisms, RelabelInvariant) {
  auto d = design_of("S266-F57-four-orbit-01");
  std::mt19937 rng(5);
  auto a = automorphism_count(d);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(automorphism_count(d.relabeled(random_permutation(d.v(), rng))), a);
}

TEST(Certificate, FanoRelabelings) {
  auto d = fano();
  auto c = canonical_certificate(d);
  std::mt19937 rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(canonical_certificate(d.relabeled(random_permutation(7, rng))), c);
  EXPECT_EQ(d.relabeled(c.relabeling), c.canonical);
}

TEST(Certificate, Deterministic) {
  auto d = design_of("S266-Z53-two-orbit-05");
  auto a = canonical_certificate(d), b = canonical_certificate(d);
  EXPECT_EQ(a.canonical, b.canonical);
  EXPECT_EQ(a.relabeling, b.relabeling);
}

TEST(Certificate, FourOrbitDesignsDistinct) {
  std::vector<CanonicalCertificate> certs;
  for (const auto* e : catalog_family("S266-F57-four-orbit")) certs.push_back(canonical_certificate(expand_entry(*e).design));
  ASSERT_EQ(certs.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) EXPECT_FALSE(certs[i] == certs[j]);
}

TEST(Isomorphism, ShuffledCopy) {
  auto d = design_of("S266-Z48-two-orbit-01");
  std::mt19937 rng(9);
  auto e = d.relabeled(random_permutation(d.v(), rng));
  auto res = are_isomorphic(d, e);
  ASSERT_TRUE(res.isomorphic);
  EXPECT_EQ(d.relabeled(*res.map), e);
  auto back = are_isomorphic(e, d);
  ASSERT_TRUE(back.isomorphic);
  EXPECT_EQ(e.relabeled(*back.map), d);
}

TEST(Isomorphism, DistinctZ53Designs) {
  auto res = are_isomorphic(design_of("S266-Z53-two-orbit-01"), design_of("S266-Z53-two-orbit-02"));
  EXPECT_FALSE(res.isomorphic);
}

TEST(Isomorphism, ParameterMismatch) {
  auto res = are_isomorphic(fano(), affine_plane_3());
  EXPECT_FALSE(res.isomorphic);
  EXPECT_EQ(res.reason, "parameter mismatch");
}
