#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexcount/bigint.hpp"
#include "lexcount/closed_forms.hpp"
#include "lexcount/extensions.hpp"
#include "lexcount/polynomial.hpp"

namespace lexcount {

using QPoly = Polynomial;

inline QPoly add(const QPoly& a, const QPoly& b) { return a + b; }
inline QPoly mul(const QPoly& a, const QPoly& b) { return a * b; }

inline QPoly shift(const QPoly& a, int k) {
  if (k < 0) throw std::invalid_argument("shift needs k >= 0");
  if (a.is_zero()) return a;
  std::vector<BigInt> cs(k, BigInt(0));
  cs.insert(cs.end(), a.coeffs().begin(), a.coeffs().end());
  return QPoly(std::move(cs));
}

/// q^d a(1/q).
inline QPoly reverse_on_degree(const QPoly& a, int d) {
  if (d < 0 || d < a.degree()) throw std::invalid_argument("reversal degree is below the polynomial degree");
  std::vector<BigInt> cs(d + 1);
  for (int k = 0; k <= a.degree(); ++k) cs[d - k] = a[k];
  return QPoly(std::move(cs));
}

inline BigInt eval_at_one(const QPoly& a) { return a.eval(1); }

inline QPoly q_pow(const QPoly& a, int e) {
  QPoly r{1};
  for (int i = 0; i < e; ++i) r *= a;
  return r;
}

inline QPoly q_int(int n) {
  if (n < 1) throw std::invalid_argument("q_int needs n >= 1");
  return QPoly(std::vector<BigInt>(n, BigInt(1)));
}

inline bool is_unimodal(const QPoly& a) {
  int k = 0;
  const int d = a.degree();
  while (k < d && a[k] <= a[k + 1]) ++k;
  while (k < d && a[k] >= a[k + 1]) ++k;
  return k >= d;
}

/// C_n(q) = sum_k q^{k(n-k)} C_{k-1}(q) C_{n-k}(q).
inline QPoly q_catalan(int n) {
  if (n < 0) throw std::invalid_argument("q_catalan needs n >= 0");
  std::vector<QPoly> c{QPoly{1}};
  for (int m = 1; m <= n; ++m) {
    QPoly sum;
    for (int k = 1; k <= m; ++k) sum += shift(c[k - 1] * c[m - k], k * (m - k));
    c.push_back(sum);
  }
  return c[n];
}

/// C~_n(q) = sum_k q^{k-1} C~_{k-1}(q) C~_{n-k}(q).
inline QPoly q_catalan_tilde(int n) {
  if (n < 0) throw std::invalid_argument("q_catalan_tilde needs n >= 0");
  std::vector<QPoly> c{QPoly{1}};
  for (int m = 1; m <= n; ++m) {
    QPoly sum;
    for (int k = 1; k <= m; ++k) sum += shift(c[k - 1] * c[m - k], k - 1);
    c.push_back(sum);
  }
  return c[n];
}

namespace detail {

// Catalan words of length 2n: 0/1 words whose prefixes never have more 1s than 0s.
template <class F>
void for_each_catalan_word(int n, F&& f) {
  std::vector<int> w;
  w.reserve(2 * n);
  auto rec = [&](auto&& self, int zeros, int ones) -> void {
    if (zeros == n && ones == n) {
      f(std::span<const int>(w));
      return;
    }
    if (zeros < n) {
      w.push_back(0);
      self(self, zeros + 1, ones);
      w.pop_back();
    }
    if (ones < zeros) {
      w.push_back(1);
      self(self, zeros, ones + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
}

inline QPoly from_histogram(const std::map<long long, std::uint64_t>& h) {
  if (h.empty()) return {};
  std::vector<BigInt> cs(h.rbegin()->first + 1);
  for (const auto& [k, c] : h) cs[k] = c;
  return QPoly(std::move(cs));
}

}  // namespace detail

/// Word-sum form of C_n(q): inversions over Catalan words.
inline QPoly q_catalan_words(int n) {
  if (n < 0) throw std::invalid_argument("q_catalan_words needs n >= 0");
  std::map<long long, std::uint64_t> h;
  detail::for_each_catalan_word(n, [&](std::span<const int> w) { ++h[inv(w)]; });
  return detail::from_histogram(h);
}

/// c_n(q): major index over Catalan words.
inline QPoly maj_q_catalan(int n) {
  if (n < 0) throw std::invalid_argument("maj_q_catalan needs n >= 0");
  std::map<long long, std::uint64_t> h;
  detail::for_each_catalan_word(n, [&](std::span<const int> w) { ++h[maj(w)]; });
  return detail::from_histogram(h);
}

enum class Stat { Inv, Maj };

inline std::string_view to_string(Stat s) { return s == Stat::Inv ? "inv" : "maj"; }

inline Stat parse_stat(std::string_view text) {
  if (text == "inv") return Stat::Inv;
  if (text == "maj") return Stat::Maj;
  throw std::invalid_argument("statistic must be inv or maj");
}

inline QPoly stat_gf(const Poset& poset, const PatternSet& patterns, Stat stat) {
  std::map<long long, std::uint64_t> h;
  for_each_avoider(poset, patterns, [&](std::span<const int> w) { ++h[stat == Stat::Inv ? inv(w) : maj(w)]; });
  return detail::from_histogram(h);
}

inline QPoly stat_gf(const GridPoset& poset, const PatternSet& patterns, Stat stat) {
  return stat_gf(poset.to_poset(), patterns, stat);
}

enum class Thm61Case { I, II, III, IV };

inline QPoly thm61_rhs(Thm61Case which, int size) {
  if (size < 1) throw std::invalid_argument("thm61_rhs needs size >= 1");
  const int n = size;
  switch (which) {
    case Thm61Case::I: return shift(q_catalan_tilde(n), n * (n + 1) / 2);
    case Thm61Case::II: return shift(q_catalan(n), 3 * (n * (n - 1) / 2));
    case Thm61Case::III: return shift(q_catalan(n), n * (3 * n - 1) / 2);
    case Thm61Case::IV: return shift(q_catalan_tilde(n), n * (3 * n - 1) / 2);
  }
  throw std::invalid_argument("unknown case");
}

inline QPoly thm62_rhs(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("thm62_rhs needs s, t >= 1");
  const long long e = static_cast<long long>(s) * t * (t - 1) / 2 + static_cast<long long>(t) * s * (s - 1) / 2 +
                      static_cast<long long>(s - 1) * (t - 1) * (static_cast<long long>(s) * t - 2) / 2;
  return shift(q_pow(q_int(t), s - 1), static_cast<int>(e));
}

/// F_0 = F_1 = 1, F_s = (1 + q + 2q^2) F_{s-1} + q^3 F_{s-2}.
inline QPoly F_poly(int s) {
  if (s < 0) throw std::invalid_argument("F_poly needs s >= 0");
  QPoly a{1}, b{1};
  const QPoly step{1, 1, 2};
  for (int k = 2; k <= s; ++k) {
    QPoly c = step * b + shift(a, 3);
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

/// q^{9 C(s,2)} F_s(1/q).
inline QPoly F_conjecture_rhs(int s) {
  const QPoly f = F_poly(s);
  return shift(reverse_on_degree(f, f.degree()), 9 * (s * (s - 1) / 2) - f.degree());
}

struct ConjectureLimits {
  int en2_max_s = 6;
  int en3_max_s = 5;
  int en1243_max_t = 3;
  int fpoly_max_s = 10;
  int maj_max_size = 6;
  int maj_double_max_st = 12;
};

struct CheckLine {
  std::string claim;
  std::string instance;
  bool consistent = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckLine> lines;
  std::map<std::string, std::vector<BigInt>> sequences;

  bool all_consistent() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.consistent; });
  }
  int counterexamples() const {
    return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const CheckLine& l) { return !l.consistent; }));
  }
};

namespace detail {

inline void compare(CheckReport& r, std::string claim, std::string instance, const QPoly& got, const QPoly& want) {
  const bool ok = got == want;
  r.lines.push_back({std::move(claim), std::move(instance), ok,
                     ok ? got.pretty('q') : "observed " + got.pretty('q') + " expected " + want.pretty('q')});
}

inline void check_value(CheckReport& r, std::string claim, std::string instance, const BigInt& got,
                        const BigInt& want) {
  const bool ok = got == want;
  r.lines.push_back({std::move(claim), std::move(instance), ok,
                     ok ? got.str() : "observed " + got.str() + " expected " + want.str()});
}

inline std::string st_label(int s, int t) { return "s=" + std::to_string(s) + " t=" + std::to_string(t); }

}  // namespace detail

inline CheckReport conjecture_suite(const ConjectureLimits& lim = {}) {
  CheckReport r;
  const PatternSet p2143{{parse_permutation("2143")}};
  const PatternSet p1243{{parse_permutation("1243")}};
  const PatternSet p321{{parse_permutation("321")}};
  const PatternSet p123{{parse_permutation("123")}};

  for (int t = 1; t <= lim.en1243_max_t; ++t) {
    const auto got = stat_gf(GridPoset::build(Family::EN, 3, 2 * t - 1), p1243, Stat::Inv);
    const auto want = shift(q_int(2 * t - 1) * q_int(4 * t - 1), 3 * (t * t - t + 1));
    detail::compare(r, "EN(3,2t-1)(1243) inv = q^{3(t^2-t+1)}[2t-1][4t-1]", "t=" + std::to_string(t), got, want);
  }

  for (int s = 1; s <= lim.en2_max_s; ++s) {
    const auto got = stat_gf(GridPoset::build(Family::EN, s, 2), p2143, Stat::Inv);
    const auto want = shift(q_pow(QPoly{1, 1}, s - 1), (2 * s - 1) * (s - 1));
    detail::compare(r, "EN(s,2)(2143) inv = q^{(2s-1)(s-1)}(1+q)^{s-1}", "s=" + std::to_string(s), got, want);
  }

  for (int s = 1; s <= lim.en3_max_s; ++s) {
    const auto got = stat_gf(GridPoset::build(Family::EN, s, 3), p2143, Stat::Inv);
    detail::compare(r, "EN(s,3)(2143) inv = q^{9C(s,2)}F_s(1/q)", "s=" + std::to_string(s), got, F_conjecture_rhs(s));
  }

  for (int s = 0; s <= lim.fpoly_max_s; ++s) {
    const QPoly f = F_poly(s);
    const std::string at = "s=" + std::to_string(s);
    detail::check_value(r, "F_s(1) = fibonacci(3s-1)", at, eval_at_one(f), s == 0 ? BigInt(1) : fibonacci(3 * s - 1));
    r.lines.push_back({"F_s coefficients unimodal", at, is_unimodal(f), f.pretty('q')});
    if (s < 2) continue;
    detail::check_value(r, "deg F_s = 2s-1", at, f.degree(), 2 * s - 1);
    detail::check_value(r, "leading coefficient of F_s = 2^{s-2}", at, f[2 * s - 1], pow_int(2, s - 2));
    detail::check_value(r, "constant term of F_s = 1", at, f[0], 1);
    detail::check_value(r, "q coefficient of F_s = s-1", at, f[1], s - 1);
    detail::check_value(r, "q^2 coefficient of F_s = s(s+3)/2", at, f[2], s * (s + 3) / 2);
    detail::check_value(r, "q^{s+1} coefficient of F_s = C(2s+1,s-1)", at, f[s + 1], binomial(2 * s + 1, s - 1));
    r.sequences["F_s [q^3] (A098156)"].push_back(f[3]);
    r.sequences["F_s [q^{2s-2}] (A134465)"].push_back(f[2 * s - 2]);
    r.sequences["F_s [q^{s+2}] (A127531)"].push_back(f[s + 2]);
    r.sequences["F_s [q^s] (A072547)"].push_back(f[s]);
    r.sequences["F_s [q^{s-1}] (A116914)"].push_back(f[s - 1]);
  }

  for (int n = 1; n <= lim.maj_max_size; ++n) {
    const QPoly c = maj_q_catalan(n);
    const std::string at = "n=" + std::to_string(n);
    detail::compare(r, "EN(2,t)(321) maj = q^t c_t", at, stat_gf(GridPoset::build(Family::EN, 2, n), p321, Stat::Maj),
                    shift(c, n));
    detail::compare(r, "EN(s,2)(123) maj = q^{2C(s,2)} c_s", at,
                    stat_gf(GridPoset::build(Family::EN, n, 2), p123, Stat::Maj), shift(c, n * (n - 1)));
    detail::compare(r, "NE(s,2)(123) maj = q^{s^2} c_s", at, stat_gf(GridPoset::build(Family::NE, n, 2), p123, Stat::Maj),
                    shift(c, n * n));
    detail::compare(r, "NE(2,t)(123) maj = q^{t^2} c_t", at, stat_gf(GridPoset::build(Family::NE, 2, n), p123, Stat::Maj),
                    shift(c, n * n));
  }

  for (int s = 1; s <= lim.maj_double_max_st; ++s) {
    for (int t = 1; s * t <= lim.maj_double_max_st; ++t) {
      const QPoly g = stat_gf(GridPoset::build(Family::EN, s, t), p1243, Stat::Maj);
      const long long lo = g.min_degree(), hi = g.degree();
      r.lines.push_back({"EN(s,t)(1243) max maj = 2 min maj", detail::st_label(s, t), hi == 2 * lo,
                         "min " + std::to_string(lo) + " max " + std::to_string(hi)});
    }
  }
  return r;
}

}  // namespace lexcount
