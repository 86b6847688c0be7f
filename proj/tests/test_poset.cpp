#include <gtest/gtest.h>

#include "lexcount/poset.hpp"
#include "oracles.hpp"

using namespace lexcount;

TEST(Poset, DetectsCycles) {
  EXPECT_THROW(Poset(3, {{1, 2}, {2, 3}, {3, 1}}), std::invalid_argument);
  EXPECT_THROW(Poset(2, {{1, 1}}), std::invalid_argument);
  const Poset p(3, {{1, 2}, {2, 3}});
  EXPECT_TRUE(p.must_precede(1, 3));
  EXPECT_FALSE(p.must_precede(3, 1));
  EXPECT_TRUE(p.is_linear_extension(Permutation{1, 2, 3}));
  EXPECT_FALSE(p.is_linear_extension(Permutation{2, 1, 3}));
}

TEST(GridPoset, LabelsMatchEveryFamily) {
  for (Family f : kAllFamilies)
    for (int s = 1; s <= 4; ++s)
      for (int t = 1; t <= 4; ++t) {
        const GridPoset g = GridPoset::build(f, s, t);
        for (int i = 1; i <= s; ++i)
          for (int j = 1; j <= t; ++j) {
            const int l = g.label({i, j});
            EXPECT_EQ(l, oracle::label(std::string(to_string(f)), s, t, i, j));
            EXPECT_EQ(g.tooth_of(l), i);
            EXPECT_EQ(g.spine_of(l), j);
          }
      }
}

TEST(GridPoset, PrecedenceIsCoordinateDominance) {
  for (Family f : kAllFamilies) {
    const GridPoset g = GridPoset::build(f, 3, 4);
    const Poset p = g.to_poset();
    for (int a = 1; a <= 12; ++a)
      for (int b = 1; b <= 12; ++b) {
        const auto ca = g.coord(a), cb = g.coord(b);
        const bool want = a != b && ca.tooth >= cb.tooth && ca.spine >= cb.spine;
        EXPECT_EQ(g.must_precede(a, b), want);
        EXPECT_EQ(p.must_precede(a, b), want);
      }
  }
}

TEST(GridPoset, FirstElementsAreFixedByFamily) {
  // EN_{4,3} starts from label 10 as in the worked tableau example.
  const GridPoset en = GridPoset::build(Family::EN, 4, 3);
  EXPECT_TRUE(en.to_poset().is_linear_extension(parse_permutation("10,7,11,4,1,8,12,5,2,9,6,3")));
  EXPECT_EQ(GridPoset::build(Family::SW, 2, 4).label({2, 1}), 4);
  EXPECT_THROW(GridPoset::build(Family::EN, 0, 3), std::invalid_argument);
}

TEST(GridPoset, SawAndZipAreAcyclic) {
  for (int s = 1; s * 1 <= 30; ++s)
    for (int t = 1; s * t <= 30; ++t) {
      EXPECT_NO_THROW(saw_poset(s, t).to_poset());
      EXPECT_NO_THROW(zip_poset(s, t).to_poset());
    }
  EXPECT_EQ(saw_poset(0, 3).size(), 0);
  EXPECT_EQ(saw_poset(3, 3).extra_before().size(), 2u);
  EXPECT_EQ(zip_poset(4, 2).extra_before().size(), 2u);
}

TEST(GridPoset, WithExtraRejectsCycles) {
  const GridPoset g = GridPoset::build(Family::EN, 2, 2);
  // 3 precedes every other element.
  EXPECT_THROW(g.with_extra({{1, 3}}), std::invalid_argument);
}

TEST(PosetSpec, ParsesAndRoundTrips) {
  const auto p = parse_poset_spec("EN:4x3+saw");
  EXPECT_EQ(p.family, Family::EN);
  EXPECT_EQ(p.s, 4);
  EXPECT_EQ(p.t, 3);
  EXPECT_EQ(p.augment, Augment::Saw);
  EXPECT_EQ(to_string(p), "EN:4x3+saw");
  EXPECT_EQ(to_string(parse_poset_spec("SW:2x5")), "SW:2x5");
  for (const char* bad : {"EN4x3", "EN:4by3", "XY:2x2", "NE:2x2+saw", "EN:0x2", "EN:2x2+foo", "EN:x3"})
    EXPECT_THROW(parse_poset_spec(bad), std::invalid_argument) << bad;
}

TEST(Canonicalize, MapsToEnOrNe) {
  const PatternSet p{parse_permutation("132")};
  const auto c = canonicalize(Family::ES, 2, 3, p);
  EXPECT_EQ(c.family, Family::EN);
  EXPECT_EQ(c.s, 3);
  EXPECT_EQ(c.t, 2);
  EXPECT_EQ(to_string(c.patterns), "{231}");
  EXPECT_EQ(canonicalize(Family::NW, 2, 5, p).family, Family::NE);
}
