// Randomized property checks with fixed seeds.

#include <gtest/gtest.h>

#include <random>

#include "lexcount/closed_forms.hpp"
#include "lexcount/extensions.hpp"
#include "lexcount/paths.hpp"
#include "lexcount/qstats.hpp"
#include "lexcount/transfer_matrix.hpp"
#include "oracles.hpp"

using namespace lexcount;

namespace {

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

// Random acyclic poset: pairs always point from a smaller to a larger rank.
Poset random_poset(std::mt19937& rng, int n) {
  const Permutation rank = random_perm(rng, n);
  std::vector<std::pair<int, int>> rel;
  std::bernoulli_distribution coin(0.25);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) rel.emplace_back(rank[i], rank[j]);
  return Poset(n, rel);
}

PatternSet random_patterns(std::mt19937& rng) {
  std::vector<Permutation> v;
  const int k = 1 + static_cast<int>(rng() % 2);
  for (int i = 0; i < k; ++i) v.push_back(random_perm(rng, 3 + static_cast<int>(rng() % 2)));
  return PatternSet(std::move(v));
}

}  // namespace

TEST(Properties, StreamYieldsValidDistinctSortedAvoiders) {
  std::mt19937 rng(2024);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Poset p = random_poset(rng, n);
    const PatternSet ps = random_patterns(rng);
    const auto got = avoiders(p, ps).collect();
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_TRUE(p.is_linear_extension(got[i]));
      EXPECT_TRUE(avoids_all(got[i], ps));
      if (i) EXPECT_LT(got[i - 1], got[i]);
    }
    std::size_t brute = 0;
    Permutation q = Permutation::identity(n);
    std::vector<int> v(q.entries().begin(), q.entries().end());
    do {
      const Permutation w(v);
      brute += p.is_linear_extension(w) && avoids_all(w, ps);
    } while (std::next_permutation(v.begin(), v.end()));
    EXPECT_EQ(got.size(), brute);
    EXPECT_EQ(count_avoiders(p, ps), brute);
  }
}

TEST(Properties, IdealCountMatchesStream) {
  std::mt19937 rng(77);
  for (int round = 0; round < 60; ++round) {
    const Poset p = random_poset(rng, 1 + static_cast<int>(rng() % 12));
    EXPECT_EQ(count_extensions(p), linear_extensions(p).collect().size());
  }
}

TEST(Properties, EvaluationAtOneIsTheCount) {
  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    const Family f = kAllFamilies[rng() % 8];
    const int s = 1 + static_cast<int>(rng() % 4), t = 1 + static_cast<int>(rng() % 3);
    const PatternSet ps = random_patterns(rng);
    const auto g = GridPoset::build(f, s, t);
    for (Stat st : {Stat::Inv, Stat::Maj}) {
      const auto gf = stat_gf(g, ps, st);
      EXPECT_EQ(eval_at_one(gf), count_avoiders(g, ps));
      for (const auto& c : gf.coeffs()) EXPECT_GE(c, 0);
    }
  }
}

TEST(Properties, FamilyReductionPreservesCounts) {
  std::mt19937 rng(99);
  for (int round = 0; round < 80; ++round) {
    const Family f = kAllFamilies[rng() % 8];
    const int s = 1 + static_cast<int>(rng() % 4), t = 1 + static_cast<int>(rng() % 4);
    if (s * t > 10) continue;
    const PatternSet ps = random_patterns(rng);
    const auto c = canonicalize(f, s, t, ps);
    EXPECT_EQ(count_avoiders(GridPoset::build(f, s, t), ps), count_avoiders(GridPoset::build(c.family, c.s, c.t), c.patterns));
    const PatternSet rc = ps.transformed([](const Permutation& p) { return reverse_complement(p); });
    EXPECT_EQ(count_avoiders(GridPoset::build(f, s, t), ps), count_avoiders(GridPoset::build(f, s, t), rc));
  }
}

TEST(Properties, RandomFussCatalanPathsRoundTrip) {
  std::mt19937 rng(31);
  for (int round = 0; round < 300; ++round) {
    const int s = 1 + static_cast<int>(rng() % 6), t = 1 + static_cast<int>(rng() % 5);
    // Random walk that never drops below the line; E only when allowed.
    LatticeWord w;
    int es = 0, ns = 0;
    while (es < s || ns < (t - 1) * s) {
      const bool can_e = es < s && ns >= (t - 1) * (es + 1);
      const bool can_n = ns < (t - 1) * s;
      const bool take_e = can_e && (!can_n || rng() % 2);
      w.letters.push_back(take_e ? LatticeWord::E : LatticeWord::N);
      (take_e ? es : ns) += 1;
    }
    ASSERT_TRUE(is_fuss_catalan(w, t));
    const Permutation pi = fcpath_to_ext(w, s, t);
    EXPECT_TRUE(saw_poset(s, t).to_poset().is_linear_extension(pi));
    EXPECT_EQ(ext_to_fcpath(pi, s, t), w);
  }
}

TEST(Properties, RandomTableauxRoundTrip) {
  std::mt19937 rng(8);
  for (int round = 0; round < 300; ++round) {
    const int s = 1 + static_cast<int>(rng() % 5), t = 1 + static_cast<int>(rng() % 5);
    // Random standard tableau: place 1..st in a random available corner.
    StandardTableau tab{std::vector<std::vector<int>>(s, std::vector<int>(t))};
    std::vector<int> len(s, 0);
    for (int v = 1; v <= s * t; ++v) {
      std::vector<int> rows;
      for (int r = 0; r < s; ++r)
        if (len[r] < t && (r == 0 || len[r - 1] > len[r])) rows.push_back(r);
      const int r = rows[rng() % rows.size()];
      tab.rows[r][len[r]++] = v;
    }
    ASSERT_TRUE(is_standard(tab));
    const Permutation pi = tableau_to_ext(tab);
    EXPECT_EQ(ext_to_tableau(pi, s, t), tab);
  }
}

TEST(Properties, BMatrixRowSumsAreTailCounts) {
  for (int t = 1; t <= 8; ++t)
    for (int s = 2; s <= 6; ++s) {
      const auto a = a_vector(t, s), prev = a_vector(t, s - 1);
      const auto b = b_matrix(t);
      for (int k = 1; k <= t; ++k) {
        BigInt sum = 0;
        for (int j = 1; j <= t; ++j) sum += b.at(j, k) * prev.counts[j - 1];
        EXPECT_EQ(a.counts[k - 1], sum);
      }
    }
}
