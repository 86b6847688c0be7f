#pragma once

#include <stdexcept>
#include <vector>

#include "lexcount/bigint.hpp"
#include "lexcount/polynomial.hpp"

namespace lexcount {

using IntPolynomial = Polynomial;

/// Entry (j, k), 1-based, is b_{j,k}(n): the number of j,k-Catalan paths
/// with n East steps.
struct BMatrix {
  int n = 0;
  std::vector<std::vector<BigInt>> entries;

  const BigInt& at(int j, int k) const { return entries.at(j - 1).at(k - 1); }
  friend bool operator==(const BMatrix&, const BMatrix&) = default;
};

/// b_{1,k}(n) = b_{j,n}(n) = 1, otherwise b_{j,k}(n) = b_{j,k}(n-1) + b_{j-1,k}(n),
/// with entries outside the (n-1)x(n-1) block of B_{n-1} read as 0.
inline BMatrix b_matrix(int n) {
  if (n < 1) throw std::invalid_argument("b_matrix needs n >= 1");
  BMatrix prev{1, {{BigInt(1)}}};
  for (int m = 2; m <= n; ++m) {
    BMatrix cur{m, std::vector<std::vector<BigInt>>(m, std::vector<BigInt>(m))};
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        BigInt& e = cur.entries[j - 1][k - 1];
        if (j == 1 || k == m) {
          e = 1;
          continue;
        }
        e = cur.entries[j - 2][k - 1];
        if (j <= m - 1) e += prev.at(j, k);
      }
    }
    prev = std::move(cur);
  }
  return prev;
}

/// a_{t,k}(s) for k = 1..t: zippers of dimension s whose tail is
/// N_{s-1} N_s^k.
struct TailVector {
  int t = 0;
  int s = 0;
  std::vector<BigInt> counts;

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
  }
};

inline TailVector a_vector_with(const BMatrix& b, int s) {
  const int t = b.n;
  TailVector v{t, 1, std::vector<BigInt>(t)};
  v.counts[t - 1] = 1;
  for (int step = 2; step <= s; ++step) {
    std::vector<BigInt> next(t);
    for (int k = 1; k <= t; ++k)
      for (int j = 1; j <= t; ++j) next[k - 1] += b.at(j, k) * v.counts[j - 1];
    v.counts = std::move(next);
    v.s = step;
  }
  return v;
}

inline TailVector a_vector(int t, int s) {
  if (t < 1 || s < 1) throw std::invalid_argument("a_vector needs t, s >= 1");
  return a_vector_with(b_matrix(t), s);
}

inline BigInt count_2143(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("count_2143 needs s, t >= 1");
  if (t == 1) return 1;
  return a_vector(t, s).total();
}

/// det(I - xB_t) by Bareiss elimination over Z[x]. Every leading principal
/// minor of I - xB has constant term 1, so no pivot is ever zero.
inline IntPolynomial char_poly(int t) {
  if (t < 1) throw std::invalid_argument("char_poly needs t >= 1");
  const BMatrix b = b_matrix(t);
  std::vector<std::vector<Polynomial>> m(t, std::vector<Polynomial>(t));
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      std::vector<BigInt> cs{BigInt(i == j ? 1 : 0), BigInt(-b.entries[i][j])};
      m[i][j] = Polynomial(std::move(cs));
    }
  Polynomial prev{1};
  for (int k = 0; k + 1 < t; ++k) {
    for (int i = k + 1; i < t; ++i)
      for (int j = k + 1; j < t; ++j) m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return m[t - 1][t - 1];
}

/// Extends `seed` by `how_many` terms of a_n = -sum_{i>=1} c_i a_{n-i}.
inline std::vector<BigInt> recurrence_extend(std::vector<BigInt> seed, const IntPolynomial& charpoly, int how_many) {
  if (charpoly[0] != 1) throw std::invalid_argument("characteristic polynomial must have constant term 1");
  const int d = charpoly.degree();
  if (static_cast<int>(seed.size()) < d) throw std::invalid_argument("not enough seed terms for the recurrence");
  if (how_many < 0) throw std::invalid_argument("negative extension length");
  for (int step = 0; step < how_many; ++step) {
    const std::size_t n = seed.size();
    BigInt next = 0;
    for (int i = 1; i <= d; ++i) next -= charpoly[i] * seed[n - i];
    seed.push_back(std::move(next));
  }
  return seed;
}

}  // namespace lexcount
