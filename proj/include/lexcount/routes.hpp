#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lexcount/bigint.hpp"
#include "lexcount/closed_forms.hpp"
#include "lexcount/extensions.hpp"
#include "lexcount/gentree.hpp"
#include "lexcount/paths.hpp"
#include "lexcount/poset.hpp"
#include "lexcount/transfer_matrix.hpp"

namespace lexcount {

enum class Route { Formula, Transfer, Gentree, Paths, IdealDp, Oracle };

inline constexpr std::array<Route, 6> kRouteOrder = {Route::Formula, Route::Transfer, Route::Gentree,
                                                     Route::Paths,   Route::IdealDp,  Route::Oracle};

inline std::string_view to_string(Route r) {
  switch (r) {
    case Route::Formula: return "formula";
    case Route::Transfer: return "transfer";
    case Route::Gentree: return "gentree";
    case Route::Paths: return "paths";
    case Route::IdealDp: return "ideal-dp";
    case Route::Oracle: return "oracle";
  }
  return "?";
}

inline Route parse_route(std::string_view text) {
  for (Route r : kRouteOrder)
    if (to_string(r) == text) return r;
  throw std::invalid_argument("unknown route '" + std::string(text) + "'");
}

struct CountQuery {
  PosetSpec poset;
  PatternSet patterns;
};

struct RouteValue {
  Route route = Route::Oracle;
  BigInt value;
  std::string label;  // provenance id for closed forms, otherwise the route name
};

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RouteDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_single(const PatternSet& ps, const char* word) {
  return ps.size() == 1 && *ps.begin() == parse_permutation(word);
}

}  // namespace detail

/// Value of one route, or nullopt when the route does not apply to the query.
/// The oracle route refuses st > guard unless `force` is set.
inline std::optional<RouteValue> try_route(const CountQuery& q, Route route, bool force = false, int guard = 25) {
  const PosetSpec& p = q.poset;
  const bool plain = p.augment == Augment::None;
  const CanonicalProblem canon = canonicalize(p.family, p.s, p.t, q.patterns);
  const bool canon_en = plain && canon.family == Family::EN;
  auto make = [&](BigInt v) {
    return std::optional<RouteValue>(RouteValue{route, std::move(v), std::string(to_string(route))});
  };
  switch (route) {
    case Route::Formula: {
      if (!plain) return std::nullopt;
      auto f = count_formula(canon);
      if (!f) return std::nullopt;
      return RouteValue{route, f->value, f->provenance};
    }
    case Route::Transfer:
      if (canon_en && detail::is_single(canon.patterns, "2143")) return make(count_2143(canon.s, canon.t));
      if (p.augment == Augment::Zip && q.patterns.empty()) return make(count_2143(p.s, p.t));
      return std::nullopt;
    case Route::Gentree:
      if (canon_en && detail::is_single(canon.patterns, "1243")) return make(count_at_depth(canon.t, canon.s));
      if (p.augment == Augment::Saw && q.patterns.empty()) return make(count_at_depth(p.t, p.s));
      return std::nullopt;
    case Route::Paths:
      if (canon_en && canon.t >= 2 && detail::is_single(canon.patterns, "12354"))
        return make(enumerate_12354_paths(canon.s, canon.t));
      return std::nullopt;
    case Route::IdealDp: {
      if (!q.patterns.empty()) return std::nullopt;
      const GridPoset g = p.make();
      if (!g.is_pure_grid() && g.size() > kMaxDownsetElements) return std::nullopt;
      return make(count_extensions(g));
    }
    case Route::Oracle: {
      const long long st = static_cast<long long>(p.s) * p.t;
      if (st > guard && !force)
        throw SizeGuardError("oracle enumeration refused for st = " + std::to_string(st) + " > " +
                             std::to_string(guard) + " (use --force)");
      return make(count_avoiders(p.make(), q.patterns));
    }
  }
  return std::nullopt;
}

struct CountOutcome {
  RouteValue primary;
  std::vector<RouteValue> checked;  // every route that was evaluated, primary first
};

struct CountOptions {
  std::optional<Route> forced;
  bool force = false;
  int guard = 25;
  int cross_check_oracle_up_to = 16;
};

/// Evaluates the preferred route plus every other affordable one and throws
/// RouteDisagreement when any two differ.
inline CountOutcome count(const CountQuery& q, const CountOptions& opt = {}) {
  if (opt.forced) {
    auto v = try_route(q, *opt.forced, opt.force, opt.guard);
    if (!v) throw std::invalid_argument("route '" + std::string(to_string(*opt.forced)) + "' does not apply here");
    return {*v, {*v}};
  }
  const long long st = static_cast<long long>(q.poset.s) * q.poset.t;
  std::vector<RouteValue> vals;
  for (Route r : kRouteOrder) {
    if (r == Route::Oracle && !vals.empty() && st > opt.cross_check_oracle_up_to) continue;
    if (auto v = try_route(q, r, opt.force, opt.guard)) vals.push_back(std::move(*v));
  }
  if (vals.empty()) throw std::logic_error("no route applies");
  for (const auto& v : vals)
    if (v.value != vals.front().value)
      throw RouteDisagreement("route " + v.label + " gives " + v.value.str() + " but " + vals.front().label +
                              " gives " + vals.front().value.str());
  return {vals.front(), vals};
}

}  // namespace lexcount
