#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lexcount/bigint.hpp"
#include "lexcount/permutation.hpp"
#include "lexcount/poset.hpp"

namespace lexcount {

namespace detail {

inline std::vector<PatternMatcher> compile(const PatternSet& ps) {
  std::vector<PatternMatcher> out;
  for (const auto& p : ps) out.emplace_back(p);
  return out;
}

inline bool has_empty_pattern(const PatternSet& ps) {
  for (const auto& p : ps)
    if (p.empty()) return true;
  return false;
}

// Occurrences are only checked with their last entry at the newest
// position: anything else was already rejected when it was placed.
inline bool closes_occurrence(const std::vector<PatternMatcher>& ms, std::span<const int> prefix) {
  const int end = static_cast<int>(prefix.size()) - 1;
  for (const auto& m : ms)
    if (m.occurs_ending_at(prefix, end)) return true;
  return false;
}

template <class F>
void for_each_rec(const Poset& poset, const std::vector<PatternMatcher>& ms, std::vector<int>& prefix,
                  std::uint64_t placed, F& f) {
  const int n = poset.size();
  const int depth = static_cast<int>(prefix.size());
  if (depth == n) {
    f(std::span<const int>(prefix));
    return;
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t avail = full & ~placed;
  while (avail) {
    const int x = std::countr_zero(avail) + 1;
    avail &= avail - 1;
    if (poset.predecessors(x) & ~placed) continue;
    prefix.push_back(x);
    if (!closes_occurrence(ms, prefix)) for_each_rec(poset, ms, prefix, placed | Poset::bit(x), f);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Calls f(std::span<const int>) for every linear extension of `poset`
/// avoiding all of `patterns`, in lexicographic order.
template <class F>
void for_each_avoider(const Poset& poset, const PatternSet& patterns, F&& f) {
  if (detail::has_empty_pattern(patterns)) return;
  const auto ms = detail::compile(patterns);
  std::vector<int> prefix;
  prefix.reserve(poset.size());
  detail::for_each_rec(poset, ms, prefix, 0, f);
}

template <class F>
void for_each_avoider(const GridPoset& poset, const PatternSet& patterns, F&& f) {
  for_each_avoider(poset.to_poset(), patterns, std::forward<F>(f));
}

/// Pull-style enumeration of (optionally pattern-filtered) linear
/// extensions in lexicographic order. Single consumer.
class ExtensionStream {
 public:
  explicit ExtensionStream(Poset poset, PatternSet filter = {})
      : poset_(std::move(poset)), matchers_(detail::compile(filter)), done_(detail::has_empty_pattern(filter)) {
    cursor_.assign(poset_.size() + 1, 1);
  }

  std::optional<Permutation> next() {
    if (done_) return std::nullopt;
    const int n = poset_.size();
    if (!started_) {
      started_ = true;
    } else {
      if (prefix_.empty()) {
        done_ = true;
        return std::nullopt;
      }
      pop();
    }
    for (;;) {
      const int d = static_cast<int>(prefix_.size());
      if (d == n) {
        if (n == 0) done_ = true;
        return Permutation(prefix_);
      }
      int chosen = 0;
      for (int x = cursor_[d]; x <= n; ++x) {
        if (placed_ & Poset::bit(x)) continue;
        if (poset_.predecessors(x) & ~placed_) continue;
        prefix_.push_back(x);
        const bool bad = detail::closes_occurrence(matchers_, prefix_);
        prefix_.pop_back();
        if (!bad) {
          chosen = x;
          break;
        }
      }
      if (chosen) {
        cursor_[d] = chosen + 1;
        prefix_.push_back(chosen);
        placed_ |= Poset::bit(chosen);
        cursor_[d + 1] = 1;
      } else {
        if (d == 0) {
          done_ = true;
          return std::nullopt;
        }
        pop();
      }
    }
  }

  class iterator {
   public:
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(ExtensionStream* s) : stream_(s) { ++*this; }
    const Permutation& operator*() const { return *current_; }
    iterator& operator++() {
      current_ = stream_->next();
      if (!current_) stream_ = nullptr;
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return stream_ == o.stream_; }

   private:
    ExtensionStream* stream_ = nullptr;
    std::optional<Permutation> current_;
  };

  iterator begin() { return iterator(this); }
  iterator end() { return iterator(); }

  std::vector<Permutation> collect() {
    std::vector<Permutation> out;
    while (auto p = next()) out.push_back(std::move(*p));
    return out;
  }

 private:
  void pop() {
    placed_ &= ~Poset::bit(prefix_.back());
    prefix_.pop_back();
  }

  Poset poset_;
  std::vector<PatternMatcher> matchers_;
  std::vector<int> prefix_;
  std::vector<int> cursor_;
  std::uint64_t placed_ = 0;
  bool started_ = false;
  bool done_ = false;
};

inline ExtensionStream linear_extensions(const Poset& poset) { return ExtensionStream(poset); }
inline ExtensionStream linear_extensions(const GridPoset& poset) { return ExtensionStream(poset.to_poset()); }
inline ExtensionStream avoiders(const Poset& poset, const PatternSet& ps) { return ExtensionStream(poset, ps); }
inline ExtensionStream avoiders(const GridPoset& poset, const PatternSet& ps) {
  return ExtensionStream(poset.to_poset(), ps);
}

inline BigInt count_avoiders(const Poset& poset, const PatternSet& ps) {
  std::uint64_t total = 0;
  for_each_avoider(poset, ps, [&](std::span<const int>) { ++total; });
  return BigInt(total);
}
inline BigInt count_avoiders(const GridPoset& poset, const PatternSet& ps) {
  return count_avoiders(poset.to_poset(), ps);
}

/// Largest poset for which count_extensions memoizes on explicit downsets.
inline constexpr int kMaxDownsetElements = 24;

/// Number of linear extensions of a general poset, by dynamic programming
/// over order ideals.
inline BigInt count_extensions(const Poset& poset) {
  const int n = poset.size();
  if (n > kMaxDownsetElements) throw std::invalid_argument("downset counting is limited to 24 elements");
  const std::uint64_t full = n == 0 ? 0 : (std::uint64_t{1} << n) - 1;
  std::unordered_map<std::uint64_t, BigInt> memo;
  auto rec = [&](auto&& self, std::uint64_t placed) -> BigInt {
    if (placed == full) return 1;
    if (auto it = memo.find(placed); it != memo.end()) return it->second;
    BigInt total = 0;
    std::uint64_t avail = full & ~placed;
    while (avail) {
      const int x = std::countr_zero(avail) + 1;
      avail &= avail - 1;
      if (poset.predecessors(x) & ~placed) continue;
      total += self(self, placed | Poset::bit(x));
    }
    memo.emplace(placed, total);
    return total;
  };
  return rec(rec, 0);
}

/// Grid posets without extras use the tooth-profile DP: an order ideal is a
/// weakly increasing count vector c_1 <= ... <= c_s <= t.
inline BigInt count_extensions(const GridPoset& poset) {
  if (!poset.is_pure_grid()) return count_extensions(poset.to_poset());
  const int s = poset.s(), t = poset.t();
  std::map<std::vector<int>, BigInt> level{{std::vector<int>(s, 0), BigInt(1)}};
  for (int step = 0; step < s * t; ++step) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [c, ways] : level) {
      for (int i = 0; i < s; ++i) {
        if (c[i] == t) continue;
        if (i + 1 < s && c[i + 1] <= c[i]) continue;
        auto d = c;
        ++d[i];
        next[d] += ways;
      }
    }
    level = std::move(next);
  }
  return level.empty() ? BigInt(0) : level.begin()->second;
}

/// Grows a 213-avoiding extension of NE_{s,t} into one of NE_{s+1,t}: the
/// t new largest values go in decreasing order, `before_first` of them ahead
/// of the old first entry and the rest directly after it.
inline Permutation insert_213(const Permutation& ext, int t, int before_first) {
  const int n = ext.size();
  if (t < 1 || n == 0 || n % t != 0) throw std::invalid_argument("extension length must be a positive multiple of t");
  if (before_first < 1 || before_first > t) throw std::invalid_argument("insertion choice must be in [1, t]");
  const int s = n / t;
  if (!GridPoset::build(Family::NE, s, t).to_poset().is_linear_extension(ext))
    throw std::invalid_argument("not a linear extension of NE_{s,t}");
  if (contains(ext, Permutation{2, 1, 3})) throw std::invalid_argument("extension contains 213");
  std::vector<int> out;
  out.reserve(n + t);
  int next_value = n + t;
  for (int k = 0; k < before_first; ++k) out.push_back(next_value--);
  out.push_back(ext[0]);
  while (next_value > n) out.push_back(next_value--);
  for (int i = 1; i < n; ++i) out.push_back(ext[i]);
  return Permutation(std::move(out));
}

}  // namespace lexcount
