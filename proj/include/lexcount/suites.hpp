#pragma once

#include <set>
#include <string>

#include "lexcount/closed_forms.hpp"
#include "lexcount/extensions.hpp"
#include "lexcount/gentree.hpp"
#include "lexcount/paths.hpp"
#include "lexcount/qstats.hpp"
#include "lexcount/routes.hpp"
#include "lexcount/transfer_matrix.hpp"

namespace lexcount {

struct TheoremLimits {
  int formula_max_st = 12;
  int family_max_st = 9;
  int hook_max_st = 16;
  int fc_max_t = 6;
  int fc_max_s = 10;
  int fc_oracle_max_st = 16;
  int bijection_max_st = 12;
  int jk_oracle_max_n = 7;
  int b_identity_max_n = 10;
  int transfer_oracle_max_st = 16;
  int closed_2143_max_s = 12;
  int q_max_size = 7;
  int thm62_max_st = 14;
  int thm63_max_st = 14;
  int paths_max_st = 12;
};

namespace detail {

inline void record(CheckReport& r, std::string claim, std::string instance, bool ok, std::string detail = {}) {
  r.lines.push_back({std::move(claim), std::move(instance), ok, std::move(detail)});
}

inline void record_eq(CheckReport& r, std::string claim, std::string instance, const BigInt& got, const BigInt& want) {
  check_value(r, std::move(claim), std::move(instance), got, want);
}

}  // namespace detail

/// Cross-checks every implemented result against an independent route at
/// bounded sizes.
inline CheckReport theorem_suite(const TheoremLimits& lim = {}) {
  CheckReport r;
  using detail::record;
  using detail::record_eq;
  using detail::st_label;

  const std::vector<PatternSet> sets = {
      {},
      {parse_permutation("213")},
      {parse_permutation("231")},
      {parse_permutation("321")},
      {parse_permutation("123")},
      {parse_permutation("312")},
      {parse_permutation("1243")},
      {parse_permutation("2143")},
      {parse_permutation("213"), parse_permutation("123")},
      {parse_permutation("213"), parse_permutation("132")},
  };
  for (Family fam : {Family::EN, Family::NE})
    for (const auto& ps : sets)
      for (int s = 1; s <= lim.formula_max_st; ++s)
        for (int t = 1; s * t <= lim.formula_max_st; ++t) {
          auto f = count_formula(canonicalize(fam, s, t, ps));
          if (!f) continue;
          record_eq(r, "closed form " + f->provenance + " = enumeration",
                    std::string(to_string(fam)) + " " + st_label(s, t) + " " + to_string(ps), f->value,
                    count_avoiders(GridPoset::build(fam, s, t), ps));
        }

  for (Family fam : kAllFamilies)
    for (const auto& ps : sets)
      for (int s = 1; s <= lim.family_max_st; ++s)
        for (int t = 1; s * t <= lim.family_max_st; ++t) {
          const auto c = canonicalize(fam, s, t, ps);
          record_eq(r, "family reduction preserves counts",
                    std::string(to_string(fam)) + " " + st_label(s, t) + " " + to_string(ps),
                    count_avoiders(GridPoset::build(fam, s, t), ps),
                    count_avoiders(GridPoset::build(c.family, c.s, c.t), c.patterns));
        }

  for (int s = 1; s <= lim.hook_max_st; ++s)
    for (int t = 1; s * t <= lim.hook_max_st; ++t)
      record_eq(r, "hook product = order-ideal count", st_label(s, t), hook_count(s, t),
                count_extensions(GridPoset::build(Family::EN, s, t).to_poset()));

  for (int t = 1; t <= lim.fc_max_t; ++t)
    for (int s = 1; s <= lim.fc_max_s; ++s) {
      record_eq(r, "generating tree = Fuss-Catalan", st_label(s, t), count_at_depth(t, s), fuss_catalan(s, t));
      if (s * t <= lim.fc_oracle_max_st) {
        record_eq(r, "EN(1243) avoiders = Fuss-Catalan", st_label(s, t),
                  count_avoiders(GridPoset::build(Family::EN, s, t), {parse_permutation("1243")}),
                  fuss_catalan(s, t));
        record_eq(r, "sawblade extensions = EN(1243) avoiders", st_label(s, t),
                  count_avoiders(saw_poset(s, t), {}), fuss_catalan(s, t));
      }
      if (s * t <= lim.bijection_max_st) {
        const auto grown = grow_extensions(s, t);
        const auto listed = linear_extensions(saw_poset(s, t)).collect();
        record(r, "generating tree produces every sawblade extension once", st_label(s, t),
               grown == std::set<Permutation>(listed.begin(), listed.end()) && grown.size() == listed.size());
      }
    }

  for (int s = 1; s <= lim.bijection_max_st; ++s)
    for (int t = 1; s * t <= lim.bijection_max_st; ++t) {
      bool tab_ok = true, fc_ok = true, zip_ok = true;
      for (const auto& pi : linear_extensions(GridPoset::build(Family::EN, s, t)).collect()) {
        const auto tab = ext_to_tableau(pi, s, t);
        tab_ok = tab_ok && is_standard(tab) && tableau_to_ext(tab) == pi;
      }
      for (const auto& pi : linear_extensions(saw_poset(s, t)).collect()) {
        const auto w = ext_to_fcpath(pi, s, t);
        fc_ok = fc_ok && is_fuss_catalan(w, t) && fcpath_to_ext(w, s, t) == pi;
      }
      for (const auto& pi : linear_extensions(zip_poset(s, t)).collect()) {
        const auto w = ext_to_zipper(pi, s, t);
        zip_ok = zip_ok && is_zipper(w, s, t) && zipper_to_ext(w, s, t) == pi;
      }
      record(r, "tableau bijection round trip", st_label(s, t), tab_ok);
      record(r, "Fuss-Catalan path bijection round trip", st_label(s, t), fc_ok);
      record(r, "zipper bijection round trip", st_label(s, t), zip_ok);
    }

  for (int n = 1; n <= lim.b_identity_max_n; ++n) {
    const BMatrix b = b_matrix(n);
    const std::string at = "n=" + std::to_string(n);
    bool sym = true, corner = true, second = true, oracle = true;
    const BMatrix prev = n > 1 ? b_matrix(n - 1) : b;
    auto bp = [&](int j, int k) { return j >= 1 && k >= 1 && j <= n - 1 && k <= n - 1 ? prev.at(j, k) : BigInt(0); };
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        sym = sym && b.at(j, k) == b.at(n + 1 - k, n + 1 - j);
        if (k >= j) corner = corner && b.at(j, k) == binomial(n - k + j - 1, j - 1);
        if (j >= 2 && k >= 2 && k + 1 <= n) second = second && b.at(j, k) == b.at(j, k + 1) + bp(j - 1, k - 1);
        if (n <= lim.jk_oracle_max_n) oracle = oracle && b.at(j, k) == enumerate_jk(n, j, k);
      }
    record(r, "b matrix symmetry", at, sym);
    record(r, "b matrix binomial corner", at, corner);
    record(r, "b matrix second recurrence", at, second);
    if (n <= lim.jk_oracle_max_n) record(r, "b matrix = j,k-Catalan path enumeration", at, oracle);
  }

  for (int s = 1; s <= lim.transfer_oracle_max_st; ++s)
    for (int t = 1; s * t <= lim.transfer_oracle_max_st; ++t)
      record_eq(r, "transfer matrix = EN(2143) enumeration", st_label(s, t), count_2143(s, t),
                count_avoiders(GridPoset::build(Family::EN, s, t), {parse_permutation("2143")}));
  for (int t = 1; t <= 4; ++t)
    for (int s = 1; s <= lim.closed_2143_max_s; ++s)
      record_eq(r, "transfer matrix = 2143 closed form", st_label(s, t), count_2143(s, t),
                count_formula({Family::EN, s, t, {parse_permutation("2143")}})->value);
  for (int t = 2; t <= 5; ++t) {
    const auto cp = char_poly(t);
    std::vector<BigInt> column;
    for (int s = 1; s <= 8; ++s) column.push_back(count_2143(s, t));
    const std::vector<BigInt> seed(column.begin(), column.begin() + cp.degree());
    record(r, "EN(2143) columns satisfy det(I - xB) recurrence", "t=" + std::to_string(t),
           recurrence_extend(seed, cp, 8 - cp.degree()) == column, cp.pretty('x'));
  }

  for (int n = 0; n <= 9; ++n) {
    record(r, "q-Catalan recurrence = word sum", "n=" + std::to_string(n), q_catalan(n) == q_catalan_words(n));
    record(r, "tilde q-Catalan = reversal", "n=" + std::to_string(n),
           reverse_on_degree(q_catalan(n), n * (n - 1) / 2) == q_catalan_tilde(n));
  }
  const PatternSet p321{parse_permutation("321")}, p123{parse_permutation("123")};
  for (int n = 1; n <= lim.q_max_size; ++n) {
    const std::string at = "n=" + std::to_string(n);
    detail::compare(r, "EN(2,t)(321) inv", at, stat_gf(GridPoset::build(Family::EN, 2, n), p321, Stat::Inv),
                    thm61_rhs(Thm61Case::I, n));
    detail::compare(r, "EN(s,2)(123) inv", at, stat_gf(GridPoset::build(Family::EN, n, 2), p123, Stat::Inv),
                    thm61_rhs(Thm61Case::II, n));
    detail::compare(r, "NE(s,2)(123) inv", at, stat_gf(GridPoset::build(Family::NE, n, 2), p123, Stat::Inv),
                    thm61_rhs(Thm61Case::III, n));
    detail::compare(r, "NE(2,t)(123) inv", at, stat_gf(GridPoset::build(Family::NE, 2, n), p123, Stat::Inv),
                    thm61_rhs(Thm61Case::IV, n));
  }
  for (int s = 1; s <= lim.thm62_max_st; ++s)
    for (int t = 1; s * t <= lim.thm62_max_st; ++t)
      detail::compare(r, "NE(s,t)(213) inv", st_label(s, t),
                      stat_gf(GridPoset::build(Family::NE, s, t), {parse_permutation("213")}, Stat::Inv),
                      thm62_rhs(s, t));
  for (int s = 1; s <= lim.thm63_max_st; ++s)
    for (int t = 1; s * t <= lim.thm63_max_st; ++t) {
      const auto g = stat_gf(GridPoset::build(Family::EN, s, t), {parse_permutation("1243")}, Stat::Inv);
      const auto [lo, hi] = inv_bounds_1243(s, t);
      record(r, "EN(s,t)(1243) inversion range", st_label(s, t), g.min_degree() == lo && g.degree() == hi,
             std::to_string(g.min_degree()) + "-" + std::to_string(g.degree()));
    }

  for (int s = 1; s <= lim.paths_max_st; ++s)
    for (int t = 2; s * t <= lim.paths_max_st; ++t)
      record_eq(r, "12354 paths = EN(12354) enumeration", st_label(s, t), enumerate_12354_paths(s, t),
                count_avoiders(GridPoset::build(Family::EN, s, t), {parse_permutation("12354")}));
  return r;
}

}  // namespace lexcount
