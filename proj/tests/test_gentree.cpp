#include <gtest/gtest.h>

#include <map>

#include "lexcount/closed_forms.hpp"
#include "lexcount/extensions.hpp"
#include "lexcount/gentree.hpp"

using namespace lexcount;

TEST(GenTree, Rule) {
  EXPECT_EQ(children_labels(0, 3), (std::vector<int>{2}));
  EXPECT_EQ(children_labels(2, 3), (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(children_labels(3, 2), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_THROW(children_labels(-1, 2), std::invalid_argument);
}

TEST(GenTree, LevelCounts) {
  const std::vector<int> want{1, 1, 3, 12, 55};
  for (int d = 0; d <= 4; ++d) EXPECT_EQ(count_at_depth(3, d), want[d]);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(count_at_depth(2, n), catalan(n));
  for (int t = 1; t <= 6; ++t) EXPECT_EQ(count_at_depth(t, 0), 1);
}

TEST(GenTree, SawLabels) {
  EXPECT_EQ(saw_label(parse_permutation("10,11,7,12,8,9,4,5,1,6,2,3"), 4, 3), 3);
  for (int t = 1; t <= 5; ++t) EXPECT_EQ(saw_label(Permutation::identity(t), 1, t), t - 1);
  EXPECT_THROW(saw_label(parse_permutation("321"), 1, 3), std::invalid_argument);
}

TEST(GenTree, LabelsFollowTheRule) {
  for (int t = 1; t <= 4; ++t)
    for (int s = 1; s * t <= 12; ++s) {
      std::map<int, BigInt> seen;
      for (const auto& p : linear_extensions(saw_poset(s, t))) seen[saw_label(p, s, t)] += 1;
      EXPECT_EQ(seen, label_profile(t, s).counts) << s << "x" << t;
      for (const auto& p : linear_extensions(saw_poset(s, t))) {
        std::vector<int> kids;
        for (const auto& c : saw_children(p, t)) kids.push_back(saw_label(c, s + 1, t));
        EXPECT_EQ(kids, children_labels(saw_label(p, s, t), t));
      }
    }
}

TEST(GenTree, GrowsAllSawExtensions) {
  EXPECT_EQ(grow_extensions(0, 4), std::set<Permutation>{Permutation()});
  EXPECT_EQ(grow_extensions(4, 3).size(), 55u);
  for (int s = 1; s <= 12; ++s)
    for (int t = 1; s * t <= 12; ++t) {
      const auto want = linear_extensions(saw_poset(s, t)).collect();
      EXPECT_EQ(grow_extensions(s, t), std::set<Permutation>(want.begin(), want.end())) << s << "x" << t;
    }
}
