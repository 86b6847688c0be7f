#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexcount {

/// A permutation of [n] in one-line notation. Values are 1-based; positions
/// are 0-based in the C++ API and 1-based in everything user-facing.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int v : entries_) {
      if (v < 1 || v > n || seen[v])
        throw std::invalid_argument("not a permutation of [" + std::to_string(n) + "]");
      seen[v] = 1;
    }
  }

  Permutation(std::initializer_list<int> entries)
      : Permutation(std::vector<int>(entries)) {}

  static Permutation identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
  }

  static Permutation decreasing(int n) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = n - i;
    return Permutation(std::move(e));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int operator[](int pos) const { return entries_[pos]; }
  std::span<const int> entries() const { return entries_; }

  /// 0-based position of value v.
  int position_of(int v) const {
    auto it = std::find(entries_.begin(), entries_.end(), v);
    if (it == entries_.end()) throw std::out_of_range("value not in permutation");
    return static_cast<int>(it - entries_.begin());
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Digit string for n <= 9 ("1243"), comma-separated otherwise ("10,7,11,4").
inline std::string to_string(const Permutation& p) {
  std::string out;
  const bool compact = p.size() <= 9;
  for (int i = 0; i < p.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> e;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(start, end - start);
      if (tok.empty()) throw std::invalid_argument("empty entry in permutation");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad permutation entry");
        v = v * 10 + (c - '0');
      }
      e.push_back(v);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad permutation digit");
      e.push_back(c - '0');
    }
  }
  return Permutation(std::move(e));
}

inline Permutation reverse(const Permutation& p) {
  std::vector<int> e(p.entries().rbegin(), p.entries().rend());
  return Permutation(std::move(e));
}

inline Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> e(p.entries().begin(), p.entries().end());
  for (int& v : e) v = n + 1 - v;
  return Permutation(std::move(e));
}

inline Permutation reverse_complement(const Permutation& p) { return complement(reverse(p)); }

inline long long inv(std::span<const int> w) {
  long long count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++count;
  return count;
}
inline long long inv(const Permutation& p) { return inv(p.entries()); }

/// Descent positions, 1-based.
inline std::vector<int> descents(std::span<const int> w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}
inline std::vector<int> descents(const Permutation& p) { return descents(p.entries()); }

inline long long maj(std::span<const int> w) {
  long long m = 0;
  for (int d : descents(w)) m += d;
  return m;
}
inline long long maj(const Permutation& p) { return maj(p.entries()); }

/// Pattern compiled for right-to-left matching. Occurrences are searched with
/// the last pattern entry pinned, so a search can be restricted to
/// occurrences ending at a given text position.
class PatternMatcher {
 public:
  explicit PatternMatcher(const Permutation& pattern)
      : pattern_(pattern.entries().begin(), pattern.entries().end()) {
    const int k = static_cast<int>(pattern_.size());
    lower_.assign(k, -1);
    upper_.assign(k, -1);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (pattern_[j] < pattern_[i] && (lower_[i] < 0 || pattern_[j] > pattern_[lower_[i]])) lower_[i] = j;
        if (pattern_[j] > pattern_[i] && (upper_[i] < 0 || pattern_[j] < pattern_[upper_[i]])) upper_[i] = j;
      }
    }
  }

  int length() const { return static_cast<int>(pattern_.size()); }

  /// True iff w has an occurrence whose last entry sits at position `end`.
  bool occurs_ending_at(std::span<const int> w, int end) const {
    const int k = length();
    if (k == 0) return true;
    if (end < k - 1) return false;
    int pos[kMaxPattern];
    if (k > kMaxPattern) throw std::invalid_argument("pattern too long");
    pos[k - 1] = end;
    return extend(w, k - 2, pos);
  }

  bool occurs_in(std::span<const int> w) const {
    const int k = length();
    if (k == 0) return true;
    for (int end = static_cast<int>(w.size()) - 1; end >= k - 1; --end)
      if (occurs_ending_at(w, end)) return true;
    return false;
  }

 private:
  static constexpr int kMaxPattern = 32;

  bool extend(std::span<const int> w, int i, int* pos) const {
    if (i < 0) return true;
    const int lo = lower_[i] < 0 ? 0 : w[pos[lower_[i]]];
    const int hi = upper_[i] < 0 ? INT32_MAX : w[pos[upper_[i]]];
    for (int p = pos[i + 1] - 1; p >= i; --p) {
      const int v = w[p];
      if (v > lo && v < hi) {
        pos[i] = p;
        if (extend(w, i - 1, pos)) return true;
      }
    }
    return false;
  }

  std::vector<int> pattern_;
  std::vector<int> lower_;
  std::vector<int> upper_;
};

inline bool contains(const Permutation& pi, const Permutation& sigma) {
  if (sigma.size() > pi.size()) return false;
  return PatternMatcher(sigma).occurs_in(pi.entries());
}

/// A finite set of forbidden patterns, kept sorted and duplicate-free.
class PatternSet {
 public:
  PatternSet() = default;
  PatternSet(std::initializer_list<Permutation> ps) : PatternSet(std::vector<Permutation>(ps)) {}
  explicit PatternSet(std::vector<Permutation> ps) : patterns_(std::move(ps)) {
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  }

  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }
  const std::vector<Permutation>& patterns() const { return patterns_; }

  template <class F>
  PatternSet transformed(F&& f) const {
    std::vector<Permutation> out;
    out.reserve(patterns_.size());
    for (const auto& p : patterns_) out.push_back(f(p));
    return PatternSet(std::move(out));
  }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Permutation> patterns_;
};

inline bool avoids_all(const Permutation& pi, const PatternSet& ps) {
  return std::none_of(ps.begin(), ps.end(), [&](const Permutation& s) { return contains(pi, s); });
}

inline std::string to_string(const PatternSet& ps) {
  std::string out = "{";
  bool first = true;
  for (const auto& p : ps) {
    if (!first) out += ",";
    out += to_string(p);
    first = false;
  }
  return out + "}";
}

}  // namespace lexcount
