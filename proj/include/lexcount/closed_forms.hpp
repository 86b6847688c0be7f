#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lexcount/bigint.hpp"
#include "lexcount/permutation.hpp"
#include "lexcount/poset.hpp"

namespace lexcount {

/// Standard tableaux of shape t^s by the hook-length product,
/// (st)! * prod_{j=1..t} (j-1)! / (s+t-j)!.
inline BigInt hook_count(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("hook_count needs s, t >= 1");
  BigInt num = factorial(s * t), den = 1;
  for (int j = 1; j <= t; ++j) {
    num *= factorial(j - 1);
    den *= factorial(s + t - j);
  }
  return num / den;
}

inline BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan of a negative index");
  return binomial(2 * n, n) / (n + 1);
}

/// F_0 = 0, F_1 = 1.
inline BigInt fibonacci(int n) {
  if (n < 0) throw std::invalid_argument("fibonacci of a negative index");
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = std::move(b);
    b = std::move(c);
  }
  return a;
}

inline BigInt fuss_catalan(int s, int t) {
  if (s < 0 || t < 1) throw std::invalid_argument("fuss_catalan needs s >= 0, t >= 1");
  return binomial(static_cast<long long>(s) * t, s) / (static_cast<long long>(t - 1) * s + 1);
}

struct FormulaResult {
  BigInt value;
  std::string provenance;
};

namespace detail {

inline PatternSet pattern_set(std::initializer_list<const char*> words) {
  std::vector<Permutation> v;
  for (const char* w : words) v.push_back(parse_permutation(w));
  return PatternSet(std::move(v));
}

}  // namespace detail

/// Closed-form count for a canonical problem, or nullopt when none of the
/// implemented cases applies. The pattern set is matched up to
/// reverse-complement, which preserves avoider counts on every grid.
inline std::optional<FormulaResult> count_formula(const CanonicalProblem& problem) {
  const int s = problem.s, t = problem.t;
  if (s < 1 || t < 1) return std::nullopt;
  const PatternSet& ps = problem.patterns;
  const PatternSet ps_rc = ps.transformed([](const Permutation& p) { return reverse_complement(p); });
  auto is = [&](std::initializer_list<const char*> words) {
    const PatternSet target = detail::pattern_set(words);
    return ps == target || ps_rc == target;
  };
  auto result = [](BigInt v, const char* why) { return std::optional<FormulaResult>(FormulaResult{std::move(v), why}); };

  if (ps.empty()) return result(hook_count(s, t), "Prop2.2");

  if (problem.family == Family::EN) {
    if (is({"213"})) return result(1, "Thm3.1");
    if (is({"231"})) return result((s == 1 || t == 1) ? 1 : 0, "Thm3.2");
    if (is({"321"})) return result(s == 1 ? BigInt(1) : s == 2 ? catalan(t) : BigInt(0), "Thm3.3");
    if (is({"123"})) return result(t == 1 ? BigInt(1) : t == 2 ? catalan(s) : BigInt(0), "Thm3.4");
    if (is({"1243"})) return result(fuss_catalan(s, t), "Cor4.6");
    if (is({"2143"})) {
      switch (t) {
        case 1: return result(1, "Thm5.9i");
        case 2: return result(pow_int(2, s - 1), "Thm5.9ii");
        case 3: return result(fibonacci(3 * s - 1), "Thm5.9iii");
        case 4: {
          BigInt v = 3 * pow_int(9, s - 1) + (s % 2 == 0 ? 1 : -1);
          return result(v / 2, "Thm5.9iv");
        }
        default: return std::nullopt;
      }
    }
    return std::nullopt;
  }

  if (is({"213"})) return result(pow_int(t, s - 1), "Thm3.5");
  if (is({"213", "123"})) return result(pow_int(t, s - 1), "Cor3.6");
  if (is({"213", "132"})) return result(t == 1 ? BigInt(1) : pow_int(2, s - 1), "Cor3.7");
  if (is({"312"})) return result(1, "Thm3.8");
  if (is({"123"})) {
    if (s == 1 || t == 1) return result(1, "NE123.exercise");
    if (t == 2) return result(catalan(s), "NE123.exercise");
    if (s == 2) return result(catalan(t), "NE123.exercise");
  }
  return std::nullopt;
}

/// Minimum and maximum inversion number over EN_{s,t}(1243).
inline std::pair<long long, long long> inv_bounds_1243(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("inv_bounds_1243 needs s, t >= 1");
  const long long pairs = static_cast<long long>(s) * (s - 1) / 2;
  const long long tt = t;
  return {(tt * tt - tt + 1) * pairs, tt * tt * pairs};
}

}  // namespace lexcount
