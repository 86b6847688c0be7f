#include <gtest/gtest.h>

#include "lexcount/closed_forms.hpp"
#include "lexcount/extensions.hpp"
#include "lexcount/paths.hpp"
#include "lexcount/transfer_matrix.hpp"
#include "oracles.hpp"

using namespace lexcount;

namespace {

std::vector<std::vector<BigInt>> rows(std::initializer_list<std::initializer_list<int>> r) {
  std::vector<std::vector<BigInt>> out;
  for (auto& row : r) out.emplace_back(row.begin(), row.end());
  return out;
}

std::vector<BigInt> seq(std::initializer_list<long long> v) { return std::vector<BigInt>(v.begin(), v.end()); }

}  // namespace

TEST(BMatrix, SmallCases) {
  EXPECT_EQ(b_matrix(1).entries, rows({{1}}));
  EXPECT_EQ(b_matrix(3).entries, rows({{1, 1, 1}, {2, 2, 1}, {2, 2, 1}}));
  EXPECT_EQ(b_matrix(4).entries, rows({{1, 1, 1, 1}, {3, 3, 2, 1}, {5, 5, 3, 1}, {5, 5, 3, 1}}));
  EXPECT_THROW(b_matrix(0), std::invalid_argument);
}

TEST(BMatrix, StructuralInvariants) {
  for (int n = 2; n <= 10; ++n) {
    const auto b = b_matrix(n);
    EXPECT_EQ(b.entries[n - 1], b.entries[n - 2]);
    for (int k = 1; k <= n; ++k) EXPECT_EQ(b.at(1, k), 1);
    for (int j = 1; j <= n; ++j) EXPECT_EQ(b.at(j, n), 1);
  }
}

TEST(TailVector, Sums) {
  EXPECT_EQ(a_vector(3, 3).total(), 21);
  for (int t = 1; t <= 6; ++t) EXPECT_EQ(a_vector(t, 1).total(), 1);
  for (int s = 1; s <= 12; ++s) EXPECT_EQ(a_vector(2, s).total(), pow_int(2, s - 1));
  for (int t = 1; t <= 8; ++t) EXPECT_EQ(a_vector(t, 2).total(), catalan(t));
}

TEST(Count2143, PrintedValues) {
  EXPECT_EQ(count_2143(4, 4), 1094);
  EXPECT_EQ(count_2143(6, 5), 5057369);
  EXPECT_EQ(count_2143(5, 4), 9841);
  EXPECT_EQ(count_2143(9, 1), 1);
  for (int s = 1; s <= 12; ++s) {
    EXPECT_EQ(count_2143(s, 3), BigInt(oracle::fibonacci(3 * s - 1)));
    EXPECT_EQ(count_2143(s, 4), (3 * pow_int(9, s - 1) + (s % 2 ? -1 : 1)) / 2);
  }
}

TEST(Count2143, ThreeWayAgreement) {
  for (int s = 1; s <= 20; ++s)
    for (int t = 1; s * t <= 16; ++t) {
      const BigInt e = count_avoiders(GridPoset::build(Family::EN, s, t), PatternSet{parse_permutation("2143")});
      EXPECT_EQ(count_2143(s, t), e) << s << "x" << t;
      EXPECT_EQ(count_extensions(zip_poset(s, t).to_poset()), e) << s << "x" << t;
    }
}

TEST(CharPoly, Values) {
  EXPECT_EQ(char_poly(1), (Polynomial{1, -1}));
  EXPECT_EQ(char_poly(2), (Polynomial{1, -2}));
  EXPECT_EQ(char_poly(3), (Polynomial{1, -4, -1}));
  EXPECT_EQ(char_poly(4), (Polynomial{1, -8, -9}));
  EXPECT_EQ(char_poly(3).pretty('x'), "1 - 4x - x^2");
}

TEST(CharPoly, MatchesLeibniz) {
  for (int t = 1; t <= 7; ++t) {
    const auto b = b_matrix(t);
    std::vector<std::vector<oracle::Big>> m(t, std::vector<oracle::Big>(t));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) m[i][j] = oracle::Big(b.entries[i][j]);
    const auto want = oracle::leibniz_charpoly(m);
    EXPECT_EQ(char_poly(t), Polynomial(std::vector<BigInt>(want.begin(), want.end()))) << t;
  }
}

TEST(Recurrence, Extend) {
  EXPECT_EQ(recurrence_extend(seq({1, 5, 21}), char_poly(3), 3), seq({1, 5, 21, 89, 377, 1597}));
  EXPECT_EQ(recurrence_extend(seq({1, 14, 121}), char_poly(4), 3), seq({1, 14, 121, 1094, 9841, 88574}));
  EXPECT_EQ(recurrence_extend(seq({7}), Polynomial{1, -1}, 4), seq({7, 7, 7, 7, 7}));
  EXPECT_THROW(recurrence_extend(seq({1}), char_poly(3), 2), std::invalid_argument);
  EXPECT_THROW(recurrence_extend(seq({1, 2}), Polynomial{2, 1}, 2), std::invalid_argument);
}

TEST(Recurrence, ColumnsFollowTheirCharacteristicPolynomial) {
  for (int t = 1; t <= 7; ++t) {
    std::vector<BigInt> col;
    for (int s = 1; s <= 14; ++s) col.push_back(count_2143(s, t));
    const auto cp = char_poly(t);
    // The first term can precede the recurrence's range when B_t is singular.
    const std::vector<BigInt> tail(col.begin() + 1, col.end());
    const std::vector<BigInt> seed(tail.begin(), tail.begin() + cp.degree());
    EXPECT_EQ(recurrence_extend(seed, cp, static_cast<int>(tail.size()) - cp.degree()), tail) << t;
  }
}

TEST(Polynomial, ExactDivision) {
  const Polynomial a{1, 2, 1}, b{1, 1};
  EXPECT_EQ(exact_divide(a, b), b);
  EXPECT_THROW(exact_divide(Polynomial{1, 0, 1}, b), std::domain_error);
  EXPECT_EQ((Polynomial{0, 0, 3}).pretty('x'), "3x^2");
  EXPECT_EQ(Polynomial().pretty('x'), "0");
}
