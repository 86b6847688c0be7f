#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexcount/permutation.hpp"

namespace lexcount {

/// Finite poset on [n] given by "a before b" constraints. Elements are
/// stored as bits, so n is limited to 64.
class Poset {
 public:
  static constexpr int kMaxElements = 64;

  Poset() = default;

  Poset(int n, std::vector<std::pair<int, int>> before) : n_(n), before_(std::move(before)) {
    if (n < 0 || n > kMaxElements)
      throw std::invalid_argument("poset size must be in [0, 64]");
    preds_.assign(n + 1, 0);
    for (auto [a, b] : before_) {
      if (a < 1 || a > n || b < 1 || b > n) throw std::out_of_range("relation element out of range");
      if (a == b) throw std::invalid_argument("cyclic constraint set (self relation)");
      preds_[b] |= bit(a);
    }
    // Kahn's algorithm doubles as the cycle check and yields a topological
    // order for the closure pass.
    std::vector<int> indeg(n + 1, 0);
    std::vector<std::vector<int>> succ(n + 1);
    for (int b = 1; b <= n; ++b)
      for (int a = 1; a <= n; ++a)
        if (preds_[b] & bit(a)) {
          succ[a].push_back(b);
          ++indeg[b];
        }
    std::vector<int> order;
    std::queue<int> ready;
    for (int v = 1; v <= n; ++v)
      if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
      int v = ready.front();
      ready.pop();
      order.push_back(v);
      for (int w : succ[v])
        if (--indeg[w] == 0) ready.push(w);
    }
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("cyclic constraint set");
    closure_.assign(n + 1, 0);
    for (int v : order) {
      std::uint64_t c = preds_[v];
      for (int a = 1; a <= n; ++a)
        if (preds_[v] & bit(a)) c |= closure_[a];
      closure_[v] = c;
    }
  }

  static std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

  int size() const { return n_; }
  std::uint64_t predecessors(int v) const { return preds_[v]; }
  std::uint64_t all_predecessors(int v) const { return closure_[v]; }
  const std::vector<std::pair<int, int>>& relations() const { return before_; }

  bool must_precede(int a, int b) const {
    check(a);
    check(b);
    return (closure_[b] & bit(a)) != 0;
  }

  bool is_linear_extension(const Permutation& p) const {
    if (p.size() != n_) return false;
    std::uint64_t placed = 0;
    for (int i = 0; i < n_; ++i) {
      const int v = p[i];
      if ((preds_[v] & ~placed) != 0) return false;
      placed |= bit(v);
    }
    return true;
  }

 private:
  void check(int v) const {
    if (v < 1 || v > n_) throw std::out_of_range("element out of range");
  }

  int n_ = 0;
  std::vector<std::pair<int, int>> before_;
  std::vector<std::uint64_t> preds_;
  std::vector<std::uint64_t> closure_;
};

enum class Family { EN, NE, ES, SE, WN, NW, WS, SW };

inline constexpr std::array<Family, 8> kAllFamilies = {Family::EN, Family::NE, Family::ES, Family::SE,
                                                       Family::WN, Family::NW, Family::WS, Family::SW};

inline std::string_view to_string(Family f) {
  switch (f) {
    case Family::EN: return "EN";
    case Family::NE: return "NE";
    case Family::ES: return "ES";
    case Family::SE: return "SE";
    case Family::WN: return "WN";
    case Family::NW: return "NW";
    case Family::WS: return "WS";
    case Family::SW: return "SW";
  }
  return "??";
}

inline Family parse_family(std::string_view text) {
  for (Family f : kAllFamilies)
    if (to_string(f) == text) return f;
  throw std::invalid_argument("unknown poset family '" + std::string(text) + "'");
}

struct GridCoord {
  int tooth = 0;
  int spine = 0;
  friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

/// One of the eight rectangular orders on [st], optionally with extra
/// precedence constraints. In every family, (i,j) comes before (i',j')
/// whenever i >= i' and j >= j'; the family only changes the labelling.
class GridPoset {
 public:
  static GridPoset build(Family family, int s, int t) {
    if (s <= 0 || t <= 0) throw std::invalid_argument("grid dimensions must be positive");
    return GridPoset(family, s, t, {});
  }

  Family family() const { return family_; }
  int s() const { return s_; }
  int t() const { return t_; }
  int size() const { return s_ * t_; }
  const std::vector<std::pair<int, int>>& extra_before() const { return extra_; }
  bool is_pure_grid() const { return extra_.empty(); }

  int label(GridCoord c) const {
    if (c.tooth < 1 || c.tooth > s_ || c.spine < 1 || c.spine > t_)
      throw std::out_of_range("grid coordinate out of range");
    return label_formula(family_, s_, t_, c.tooth, c.spine);
  }

  GridCoord coord(int label) const {
    if (label < 1 || label > size()) throw std::out_of_range("label out of range");
    return coords_[label];
  }
  int tooth_of(int label) const { return coord(label).tooth; }
  int spine_of(int label) const { return coord(label).spine; }

  /// Strict precedence in the transitive closure of grid order + extras.
  bool must_precede(int a, int b) const {
    const GridCoord ca = coord(a), cb = coord(b);
    if (a == b) return false;
    if (ca.tooth >= cb.tooth && ca.spine >= cb.spine) return true;
    if (extra_.empty()) return false;
    std::vector<char> seen(size() + 1, 0);
    std::vector<int> stack{a};
    seen[a] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : successors(v)) {
        if (w == b) return true;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

  /// Grid covering relations plus the extra constraints.
  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= s_; ++i)
      for (int j = 1; j <= t_; ++j) {
        const int v = label({i, j});
        if (i > 1) rel.emplace_back(v, label({i - 1, j}));
        if (j > 1) rel.emplace_back(v, label({i, j - 1}));
      }
    rel.insert(rel.end(), extra_.begin(), extra_.end());
    return rel;
  }

  Poset to_poset() const { return Poset(size(), relations()); }

  GridPoset with_extra(std::vector<std::pair<int, int>> extra) const {
    GridPoset g(family_, s_, t_, std::move(extra));
    if (g.size() <= Poset::kMaxElements)
      (void)g.to_poset();  // throws on cycles
    else
      g.check_acyclic();
    return g;
  }

  static int label_formula(Family f, int s, int t, int i, int j) {
    switch (f) {
      case Family::EN: return i * t - j + 1;
      case Family::NE: return (i - 1) * t + j;
      case Family::WN: return j * s - i + 1;
      case Family::NW: return (j - 1) * s + i;
      case Family::WS: return (s - i) * t + j;
      case Family::SW: return (s - i + 1) * t - j + 1;
      case Family::ES: return (t - j) * s + i;
      case Family::SE: return (t - j + 1) * s - i + 1;
    }
    return 0;
  }

 private:
  friend GridPoset saw_poset(int s, int t);

  GridPoset(Family family, int s, int t, std::vector<std::pair<int, int>> extra)
      : family_(family), s_(s), t_(t), extra_(std::move(extra)) {
    coords_.assign(s * t + 1, GridCoord{});
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= t; ++j) coords_[label_formula(family, s, t, i, j)] = {i, j};
    for (auto [a, b] : extra_)
      if (a < 1 || a > size() || b < 1 || b > size()) throw std::out_of_range("constraint label out of range");
  }

  std::vector<int> successors(int v) const {
    std::vector<int> out;
    const GridCoord c = coords_[v];
    if (c.tooth > 1) out.push_back(label({c.tooth - 1, c.spine}));
    if (c.spine > 1) out.push_back(label({c.tooth, c.spine - 1}));
    for (auto [a, b] : extra_)
      if (a == v) out.push_back(b);
    return out;
  }

  void check_acyclic() const {
    const int n = size();
    std::vector<int> indeg(n + 1, 0);
    std::vector<std::vector<int>> succ(n + 1);
    for (auto [a, b] : relations()) {
      succ[a].push_back(b);
      ++indeg[b];
    }
    std::vector<int> ready;
    for (int v = 1; v <= n; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
      int v = ready.back();
      ready.pop_back();
      ++seen;
      for (int w : succ[v])
        if (--indeg[w] == 0) ready.push_back(w);
    }
    if (seen != n) throw std::invalid_argument("cyclic constraint set");
  }

  Family family_;
  int s_;
  int t_;
  std::vector<std::pair<int, int>> extra_;
  std::vector<GridCoord> coords_;
};

/// EN_{s,t} with (j+1)t required before (j-1)t+2 for 1 <= j <= s-1.
/// s = 0 gives the empty poset. For t = 1 the extra pairs degenerate to
/// self relations and are dropped.
inline GridPoset saw_poset(int s, int t) {
  if (t <= 0) throw std::invalid_argument("tooth length must be positive");
  if (s < 0) throw std::invalid_argument("spine length must be non-negative");
  if (s == 0) return GridPoset(Family::EN, 0, t, {});
  std::vector<std::pair<int, int>> extra;
  if (t >= 2)
    for (int j = 1; j <= s - 1; ++j) extra.emplace_back((j + 1) * t, (j - 1) * t + 2);
  return GridPoset::build(Family::EN, s, t).with_extra(std::move(extra));
}

/// EN_{s,t} with jt required before (j-3)t+1 for 3 <= j <= s: every element
/// of tooth j comes before every element of tooth j-2.
inline GridPoset zip_poset(int s, int t) {
  GridPoset base = GridPoset::build(Family::EN, s, t);
  if (t == 1) return base;
  std::vector<std::pair<int, int>> extra;
  for (int j = 3; j <= s; ++j) extra.emplace_back(j * t, (j - 3) * t + 1);
  return base.with_extra(std::move(extra));
}

struct CanonicalProblem {
  Family family = Family::EN;  // EN or NE
  int s = 0;
  int t = 0;
  PatternSet patterns;
  friend bool operator==(const CanonicalProblem&, const CanonicalProblem&) = default;
};

/// Reduces any of the eight families to EN or NE with the same number of
/// avoiders. Left-right mirroring swaps s and t; top-bottom mirroring
/// reverses every extension and hence every pattern.
inline CanonicalProblem canonicalize(Family family, int s, int t, const PatternSet& patterns) {
  auto rev = [](const Permutation& p) { return reverse(p); };
  switch (family) {
    case Family::EN: return {Family::EN, s, t, patterns};
    case Family::NE: return {Family::NE, s, t, patterns};
    case Family::WN: return {Family::EN, t, s, patterns};
    case Family::NW: return {Family::NE, t, s, patterns};
    case Family::ES: return {Family::EN, t, s, patterns.transformed(rev)};
    case Family::SE: return {Family::NE, t, s, patterns.transformed(rev)};
    case Family::WS: return {Family::EN, s, t, patterns.transformed(rev)};
    case Family::SW: return {Family::NE, s, t, patterns.transformed(rev)};
  }
  throw std::logic_error("unreachable");
}

enum class Augment { None, Saw, Zip };

/// Parsed form of `FAMILY:SxT[+saw|+zip]`.
struct PosetSpec {
  Family family = Family::EN;
  int s = 0;
  int t = 0;
  Augment augment = Augment::None;

  GridPoset make() const {
    switch (augment) {
      case Augment::Saw: return saw_poset(s, t);
      case Augment::Zip: return zip_poset(s, t);
      case Augment::None: break;
    }
    return GridPoset::build(family, s, t);
  }
};

inline std::string to_string(const PosetSpec& spec) {
  std::string out = std::string(to_string(spec.family)) + ":" + std::to_string(spec.s) + "x" + std::to_string(spec.t);
  if (spec.augment == Augment::Saw) out += "+saw";
  if (spec.augment == Augment::Zip) out += "+zip";
  return out;
}

inline PosetSpec parse_poset_spec(std::string_view text) {
  auto fail = [&](const std::string& why) -> PosetSpec {
    throw std::invalid_argument("bad poset spec '" + std::string(text) + "': " + why);
  };
  PosetSpec spec;
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) return fail("expected FAMILY:SxT");
  spec.family = parse_family(text.substr(0, colon));
  std::string_view rest = text.substr(colon + 1);
  if (auto plus = rest.find('+'); plus != std::string_view::npos) {
    std::string_view aug = rest.substr(plus + 1);
    if (aug == "saw") spec.augment = Augment::Saw;
    else if (aug == "zip") spec.augment = Augment::Zip;
    else return fail("unknown augmentation '" + std::string(aug) + "'");
    if (spec.family != Family::EN) return fail("augmentations apply to EN only");
    rest = rest.substr(0, plus);
  }
  const auto x = rest.find('x');
  if (x == std::string_view::npos) return fail("expected SxT");
  auto parse_int = [&](std::string_view d) {
    if (d.empty() || d.size() > 4) fail("bad dimension");
    int v = 0;
    for (char c : d) {
      if (c < '0' || c > '9') fail("bad dimension");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  spec.s = parse_int(rest.substr(0, x));
  spec.t = parse_int(rest.substr(x + 1));
  if (spec.t < 1 || (spec.s < 1 && spec.augment != Augment::Saw)) return fail("dimensions must be positive");
  return spec;
}

}  // namespace lexcount
