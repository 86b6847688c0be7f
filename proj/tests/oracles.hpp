#pragma once

// Slow reference implementations written straight from the definitions.
// They share no code with the library beyond the BigInt type.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Word = std::vector<int>;

inline bool order_isomorphic(const Word& a, const Word& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] < a[j]) != (b[i] < b[j])) return false;
  return true;
}

/// Tries every set of |sigma| positions.
inline bool contains(const Word& pi, const Word& sigma) {
  const int n = static_cast<int>(pi.size()), k = static_cast<int>(sigma.size());
  if (k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    Word sub(k);
    for (int i = 0; i < k; ++i) sub[i] = pi[idx[i]];
    if (order_isomorphic(sub, sigma)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool avoids(const Word& pi, const std::vector<Word>& patterns) {
  for (const auto& p : patterns)
    if (contains(pi, p)) return false;
  return true;
}

inline Word parse(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

/// Label of the element on tooth i (1..s) and spine j (1..t) for each
/// family, written out directly from the corner each family starts at.
inline int label(const std::string& fam, int s, int t, int i, int j) {
  if (fam == "EN") return i * t - j + 1;
  if (fam == "NE") return (i - 1) * t + j;
  if (fam == "WN") return j * s - i + 1;
  if (fam == "NW") return (j - 1) * s + i;
  if (fam == "WS") return (s - i) * t + j;
  if (fam == "SW") return (s - i + 1) * t - j + 1;
  if (fam == "ES") return (t - j) * s + i;
  if (fam == "SE") return (t - j + 1) * s - i + 1;
  return -1;
}

/// Every linear extension: element (i, j) may be placed once all (i', j')
/// with i' >= i and j' >= j are placed. `extra` lists further a-before-b pairs.
inline std::vector<Word> extensions(const std::string& fam, int s, int t,
                                    const std::vector<std::pair<int, int>>& extra = {}) {
  const int n = s * t;
  std::vector<std::vector<int>> preds(n + 1);
  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= t; ++j)
      for (int i2 = i; i2 <= s; ++i2)
        for (int j2 = j; j2 <= t; ++j2)
          if (i2 != i || j2 != j) preds[label(fam, s, t, i, j)].push_back(label(fam, s, t, i2, j2));
  for (auto [a, b] : extra) preds[b].push_back(a);
  std::vector<Word> out;
  Word cur;
  std::vector<char> used(n + 1, 0);
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int x = 1; x <= n; ++x) {
      if (used[x]) continue;
      bool ready = true;
      for (int p : preds[x]) ready = ready && used[p];
      if (!ready) continue;
      used[x] = 1;
      cur.push_back(x);
      rec();
      cur.pop_back();
      used[x] = 0;
    }
  };
  rec();
  return out;
}

inline Big count_avoiders(const std::string& fam, int s, int t, const std::vector<Word>& patterns,
                          const std::vector<std::pair<int, int>>& extra = {}) {
  Big c = 0;
  for (const auto& e : extensions(fam, s, t, extra))
    if (avoids(e, patterns)) ++c;
  return c;
}

inline Big factorial(int n) {
  Big f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// n! over the product of hook lengths of the s x t rectangle.
inline Big hook_length_formula(int s, int t) {
  Big den = 1;
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < t; ++c) den *= (t - c) + (s - r) - 1;
  return factorial(s * t) / den;
}

/// Standard tableaux of shape t^s, filled one number at a time.
inline std::vector<std::vector<std::vector<int>>> tableaux(int s, int t) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> tab(s, std::vector<int>(t, 0));
  std::vector<int> len(s, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v > s * t) {
      out.push_back(tab);
      return;
    }
    for (int r = 0; r < s; ++r) {
      if (len[r] == t || (r > 0 && len[r - 1] <= len[r])) continue;
      tab[r][len[r]++] = v;
      rec(v + 1);
      tab[r][--len[r]] = 0;
    }
  };
  rec(1);
  return out;
}

inline Big binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

inline Big catalan(int n) { return binom(2 * n, n) / (n + 1); }

inline Big fibonacci(int n) {
  std::vector<Big> f{0, 1};
  while (static_cast<int>(f.size()) <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f[n];
}

/// All words with `ones` 1s and `zeros` 0s.
inline std::vector<Word> binary_words(int ones, int zeros) {
  Word w(ones + zeros, 0);
  std::fill(w.begin() + zeros, w.end(), 1);
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// Catalan words: n 0s and n 1s, every prefix with at least as many 0s as 1s.
inline std::vector<Word> catalan_words(int n) {
  std::vector<Word> out;
  for (auto& w : binary_words(n, n)) {
    int h = 0;
    bool ok = true;
    for (int x : w) {
      h += x == 0 ? 1 : -1;
      ok = ok && h >= 0;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

inline long long inversions(const Word& w) {
  long long c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

inline long long major_index(const Word& w) {
  long long c = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) c += static_cast<long long>(i) + 1;
  return c;
}

/// Coefficient list (index = power of q) of sum q^{stat(w)}.
inline std::vector<Big> distribution(const std::vector<Word>& ws, const std::function<long long(const Word&)>& stat) {
  std::map<long long, Big> h;
  for (const auto& w : ws) h[stat(w)] += 1;
  std::vector<Big> out;
  if (h.empty()) return out;
  out.resize(h.rbegin()->first + 1);
  for (auto& [k, v] : h) out[k] = v;
  return out;
}

/// t-Fuss-Catalan paths as N=1/E=0 words: s Es and (t-1)s Ns, never below
/// the line y = (t-1)x.
inline std::vector<Word> fuss_catalan_paths(int s, int t) {
  std::vector<Word> out;
  for (auto& w : binary_words((t - 1) * s, s)) {
    long long x = 0, y = 0;
    bool ok = true;
    for (int l : w) {
      (l == 1 ? y : x) += 1;
      ok = ok && y >= static_cast<long long>(t - 1) * x;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

/// j,k-Catalan paths with N=1/E=0.
inline Big jk_paths(int n, int j, int k) {
  Big c = 0;
  for (auto& w : binary_words(j, n)) {
    Word full(n - j, 1);
    full.insert(full.end(), w.begin(), w.end());
    int h = 0;
    bool ok = true;
    for (int l : full) {
      h += l == 1 ? 1 : -1;
      ok = ok && h >= 0;
    }
    if (!ok) continue;
    const int len = static_cast<int>(w.size());
    bool tail = len >= k + 1 && w[len - k - 1] == 1;
    for (int i = len - k; tail && i < len; ++i) tail = w[i] == 0;
    bool all_e = j == 0 && k == n;
    if (tail || all_e) ++c;
  }
  return c;
}

using Poly = std::vector<Big>;

inline Poly trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return trim(c);
}

inline Poly padd(Poly a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return trim(a);
}

/// det(I - xM) by summing over all permutations.
inline Poly leibniz_charpoly(const std::vector<std::vector<Big>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  Poly det;
  do {
    int sign = 1;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly term{Big(sign)};
    for (int i = 0; i < n; ++i) term = pmul(term, Poly{Big(i == perm[i] ? 1 : 0), Big(-m[i][perm[i]])});
    det = padd(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace oracle
