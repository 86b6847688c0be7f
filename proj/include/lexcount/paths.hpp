#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "lexcount/bigint.hpp"
#include "lexcount/permutation.hpp"
#include "lexcount/poset.hpp"

namespace lexcount {

/// Word over step letters. E is 0 and N_j is j; a plain N is N_1.
struct LatticeWord {
  static constexpr int E = 0;
  static constexpr int N = 1;

  std::vector<int> letters;

  int size() const { return static_cast<int>(letters.size()); }
  int count(int letter) const { return static_cast<int>(std::count(letters.begin(), letters.end(), letter)); }
  friend auto operator<=>(const LatticeWord&, const LatticeWord&) = default;
  friend bool operator==(const LatticeWord&, const LatticeWord&) = default;
};

/// "NNENE" form; only N/E letters are allowed.
inline LatticeWord parse_ne(std::string_view text) {
  LatticeWord w;
  for (char c : text) {
    if (c == 'N') w.letters.push_back(LatticeWord::N);
    else if (c == 'E') w.letters.push_back(LatticeWord::E);
    else throw std::invalid_argument("path letters must be N or E");
  }
  return w;
}

inline std::string format_ne(const LatticeWord& w) {
  std::string out;
  for (int l : w.letters) {
    if (l == LatticeWord::N) out += 'N';
    else if (l == LatticeWord::E) out += 'E';
    else throw std::invalid_argument("not an N/E word");
  }
  return out;
}

/// Space separated tokens "N1 N2 E".
inline LatticeWord parse_indexed(std::string_view text) {
  LatticeWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == 'E') {
      w.letters.push_back(LatticeWord::E);
      ++i;
      continue;
    }
    if (text[i] != 'N') throw std::invalid_argument("bad step letter");
    ++i;
    int v = 0, digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i++] - '0');
      ++digits;
    }
    if (digits == 0 || v < 1) throw std::invalid_argument("N letters need a positive index");
    w.letters.push_back(v);
  }
  return w;
}

inline std::string format_indexed(const LatticeWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += w.letters[i] == LatticeWord::E ? std::string("E") : "N" + std::to_string(w.letters[i]);
  }
  return out;
}

/// Every prefix has at least `ratio` times as many `up` letters as `down`
/// letters; other letters are ignored.
inline bool dominates(const std::vector<int>& letters, int up, int down, long long ratio) {
  long long u = 0, d = 0;
  for (int l : letters) {
    if (l == up) ++u;
    else if (l == down) ++d;
    else continue;
    if (u < ratio * d) return false;
  }
  return true;
}

inline bool is_fuss_catalan(const LatticeWord& w, int t) {
  if (t < 1) return false;
  for (int l : w.letters)
    if (l != LatticeWord::N && l != LatticeWord::E) return false;
  const int es = w.count(LatticeWord::E), ns = w.count(LatticeWord::N);
  if (ns != (t - 1) * es) return false;
  return dominates(w.letters, LatticeWord::N, LatticeWord::E, t - 1);
}

/// Roots are the elements of the last spine, (i-1)t+1. Reading the
/// extension right to left, roots become E and everything else N.
inline LatticeWord ext_to_fcpath(const Permutation& pi, int s, int t) {
  if (s < 0 || t < 1 || pi.size() != s * t) throw std::invalid_argument("ext_to_fcpath: size mismatch");
  if (s > 0 && !saw_poset(s, t).to_poset().is_linear_extension(pi))
    throw std::invalid_argument("ext_to_fcpath: not a linear extension of the sawblade poset");
  LatticeWord w;
  for (int k = pi.size() - 1; k >= 0; --k)
    w.letters.push_back((pi[k] - 1) % t == 0 ? LatticeWord::E : LatticeWord::N);
  return w;
}

inline Permutation fcpath_to_ext(const LatticeWord& w, int s, int t) {
  if (s < 0 || t < 1 || w.size() != s * t || w.count(LatticeWord::E) != s || !is_fuss_catalan(w, t))
    throw std::invalid_argument("fcpath_to_ext: not a t-Fuss-Catalan path of semilength s");
  const int n = s * t;
  std::vector<char> is_root(n, 0);
  for (int k = 0; k < n; ++k)
    if (w.letters[k] == LatticeWord::E) is_root[n - 1 - k] = 1;
  std::vector<int> roots, others;
  for (int tooth = s; tooth >= 1; --tooth) {
    roots.push_back((tooth - 1) * t + 1);
    for (int v = (tooth - 1) * t + 2; v <= tooth * t; ++v) others.push_back(v);
  }
  std::vector<int> e(n);
  std::size_t r = 0, o = 0;
  for (int p = 0; p < n; ++p) e[p] = is_root[p] ? roots[r++] : others[o++];
  return Permutation(std::move(e));
}

struct StandardTableau {
  std::vector<std::vector<int>> rows;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
  friend auto operator<=>(const StandardTableau&, const StandardTableau&) = default;
};

inline bool is_standard(const StandardTableau& tab) {
  const int s = static_cast<int>(tab.rows.size());
  if (s == 0) return false;
  const int t = static_cast<int>(tab.rows[0].size());
  if (t == 0) return false;
  std::vector<char> seen(s * t + 1, 0);
  for (int r = 0; r < s; ++r) {
    if (static_cast<int>(tab.rows[r].size()) != t) return false;
    for (int c = 0; c < t; ++c) {
      const int v = tab.rows[r][c];
      if (v < 1 || v > s * t || seen[v]) return false;
      seen[v] = 1;
      if (c > 0 && tab.rows[r][c - 1] >= v) return false;
      if (r > 0 && tab.rows[r - 1][c] >= v) return false;
    }
  }
  return true;
}

/// Row r holds the positions of tooth s-r, in increasing label order.
inline StandardTableau ext_to_tableau(const Permutation& pi, int s, int t) {
  if (s < 1 || t < 1 || pi.size() != s * t) throw std::invalid_argument("ext_to_tableau: size mismatch");
  if (!GridPoset::build(Family::EN, s, t).to_poset().is_linear_extension(pi))
    throw std::invalid_argument("ext_to_tableau: not a linear extension of EN_{s,t}");
  std::vector<int> pos(s * t + 1);
  for (int p = 0; p < pi.size(); ++p) pos[pi[p]] = p + 1;
  StandardTableau tab{std::vector<std::vector<int>>(s, std::vector<int>(t))};
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < t; ++c) tab.rows[r][c] = pos[(s - r - 1) * t + c + 1];
  return tab;
}

inline Permutation tableau_to_ext(const StandardTableau& tab) {
  if (!is_standard(tab)) throw std::invalid_argument("tableau_to_ext: not a standard rectangular tableau");
  const int s = static_cast<int>(tab.rows.size());
  const int t = static_cast<int>(tab.rows[0].size());
  std::vector<int> e(s * t);
  for (int r = 0; r < s; ++r)
    for (int c = 0; c < t; ++c) e[tab.rows[r][c] - 1] = (s - r - 1) * t + c + 1;
  return Permutation(std::move(e));
}

inline bool is_zipper(const LatticeWord& w, int s, int t) {
  if (s < 1 || t < 1 || w.size() != s * t) return false;
  std::vector<int> count(s + 1, 0), first(s + 1, -1), last(s + 1, -1);
  for (int i = 0; i < w.size(); ++i) {
    const int l = w.letters[i];
    if (l < 1 || l > s) return false;
    ++count[l];
    if (first[l] < 0) first[l] = i;
    last[l] = i;
  }
  for (int j = 1; j <= s; ++j)
    if (count[j] != t) return false;
  for (int j = 1; j + 1 <= s; ++j)
    if (!dominates(w.letters, j, j + 1, 1)) return false;
  for (int j = 1; j + 2 <= s; ++j)
    if (last[j] > first[j + 2]) return false;
  return true;
}

/// Entry a becomes N_{s+1-tooth(a)}.
inline LatticeWord ext_to_zipper(const Permutation& pi, int s, int t) {
  if (s < 1 || t < 1 || pi.size() != s * t) throw std::invalid_argument("ext_to_zipper: size mismatch");
  if (!zip_poset(s, t).to_poset().is_linear_extension(pi))
    throw std::invalid_argument("ext_to_zipper: not a 2143-avoiding extension of EN_{s,t}");
  LatticeWord w;
  for (int v : pi.entries()) w.letters.push_back(s + 1 - ((v - 1) / t + 1));
  return w;
}

inline Permutation zipper_to_ext(const LatticeWord& w, int s, int t) {
  if (!is_zipper(w, s, t)) throw std::invalid_argument("zipper_to_ext: not a Catalan zipper");
  std::vector<int> seen(s + 1, 0);
  std::vector<int> e;
  for (int l : w.letters) {
    const int tooth = s + 1 - l;
    e.push_back((tooth - 1) * t + ++seen[l]);
  }
  return Permutation(std::move(e));
}

/// j Ns and n Es; N^{n-j} w is a Catalan path; w ends in N E^k, or k = n
/// and w = E^n.
inline bool is_jk_catalan(const LatticeWord& w, int n, int j, int k) {
  if (n < 1 || j < 0 || j > n || k < 1 || k > n) return false;
  if (w.count(LatticeWord::N) != j || w.count(LatticeWord::E) != n || w.size() != j + n) return false;
  long long height = n - j;
  for (int l : w.letters) {
    height += l == LatticeWord::N ? 1 : -1;
    if (height < 0) return false;
  }
  const int len = w.size();
  bool tail = len >= k + 1 && w.letters[len - k - 1] == LatticeWord::N;
  for (int i = len - k; tail && i < len; ++i) tail = w.letters[i] == LatticeWord::E;
  return tail || (k == n && j == 0);
}

/// Counts j,k-Catalan paths by listing every word with j Ns and n Es.
inline BigInt enumerate_jk(int n, int j, int k) {
  if (n < 1 || j < 0 || j > n || k < 1 || k > n) return 0;
  const int len = j + n;
  std::vector<int> letters(len, LatticeWord::E);
  std::fill(letters.begin(), letters.begin() + j, LatticeWord::N);  // sorted descending: N=1 > E=0
  std::sort(letters.begin(), letters.end());
  long long count = 0;
  do {
    if (is_jk_catalan(LatticeWord{letters}, n, j, k)) ++count;
  } while (std::next_permutation(letters.begin(), letters.end()));
  return count;
}

/// s N_1s, s N_2s and (t-2)s Es. The N_1/N_2 subsequence is a Catalan
/// path; the N_2/E subsequence, read right to left with E as the up step,
/// is a (t-1)-Fuss-Catalan path.
inline bool is_12354_path(const LatticeWord& w, int s, int t) {
  if (s < 0 || t < 2) return false;
  if (w.size() != s * t || w.count(1) != s || w.count(2) != s || w.count(LatticeWord::E) != (t - 2) * s) return false;
  if (!dominates(w.letters, 1, 2, 1)) return false;
  std::vector<int> rev(w.letters.rbegin(), w.letters.rend());
  return dominates(rev, LatticeWord::E, 2, t - 2);
}

/// Prefix-count dynamic program; every prefix boundary also fixes the
/// complementary suffix counts, so both path conditions are local.
inline BigInt enumerate_12354_paths(int s, int t) {
  if (s < 0 || t < 2) throw std::invalid_argument("12354 paths need s >= 0, t >= 2");
  const long long es = static_cast<long long>(t - 2) * s;
  auto ok = [&](long long a, long long b, long long c) {
    return a >= b && (es - c) >= static_cast<long long>(t - 2) * (s - b);
  };
  std::map<std::tuple<long long, long long, long long>, BigInt> level{{{0, 0, 0}, BigInt(1)}};
  for (long long step = 0; step < static_cast<long long>(s) * t; ++step) {
    std::map<std::tuple<long long, long long, long long>, BigInt> next;
    for (const auto& [key, ways] : level) {
      auto [a, b, c] = key;
      if (a < s && ok(a + 1, b, c)) next[{a + 1, b, c}] += ways;
      if (b < s && ok(a, b + 1, c)) next[{a, b + 1, c}] += ways;
      if (c < es && ok(a, b, c + 1)) next[{a, b, c + 1}] += ways;
    }
    level = std::move(next);
  }
  return level.empty() ? BigInt(0) : level.begin()->second;
}

}  // namespace lexcount
