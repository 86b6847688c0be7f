#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "lexcount/bigint.hpp"
#include "lexcount/permutation.hpp"
#include "lexcount/poset.hpp"

namespace lexcount {

/// Generating tree for sawblade extensions: root label 0, and a node with
/// label j has children labelled t-1, t, ..., j+t-1.
struct SuccessionRule {
  int root_label = 0;
  int t = 1;

  std::vector<int> children(int j) const {
    std::vector<int> out;
    for (int c = t - 1; c <= j + t - 1; ++c) out.push_back(c);
    return out;
  }
};

inline std::vector<int> children_labels(int j, int t) {
  if (j < 0 || t < 1) throw std::invalid_argument("children_labels needs j >= 0, t >= 1");
  return SuccessionRule{0, t}.children(j);
}

/// Node counts per label at one depth of the tree.
struct LabelProfile {
  int depth = 0;
  std::map<int, BigInt> counts;

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& [label, c] : counts) sum += c;
    return sum;
  }
};

inline LabelProfile label_profile(int t, int depth) {
  if (t < 1 || depth < 0) throw std::invalid_argument("label_profile needs t >= 1, depth >= 0");
  SuccessionRule rule{0, t};
  LabelProfile p{0, {{rule.root_label, BigInt(1)}}};
  for (int d = 1; d <= depth; ++d) {
    LabelProfile next{d, {}};
    for (const auto& [label, c] : p.counts)
      for (int child : rule.children(label)) next.counts[child] += c;
    p = std::move(next);
  }
  return p;
}

inline BigInt count_at_depth(int t, int depth) { return label_profile(t, depth).total(); }

/// The j with pi(st - j) = 1 (1-based positions).
inline int saw_label(const Permutation& pi, int s, int t) {
  if (s < 1 || t < 1 || pi.size() != s * t) throw std::invalid_argument("saw_label: size mismatch");
  if (!saw_poset(s, t).to_poset().is_linear_extension(pi))
    throw std::invalid_argument("saw_label: not a linear extension of the sawblade poset");
  return s * t - (pi.position_of(1) + 1);
}

/// Children of a sawblade extension of depth s (s*t entries): shift every
/// value up by t, append 2..t, and slot 1 anywhere after t+1 and before 2.
inline std::vector<Permutation> saw_children(const Permutation& pi, int t) {
  std::vector<Permutation> out;
  if (pi.empty()) {
    out.push_back(Permutation::identity(t));
    return out;
  }
  std::vector<int> base;
  base.reserve(pi.size() + t);
  for (int v : pi.entries()) base.push_back(v + t);
  const int anchor = pi.position_of(1);  // where t+1 now sits
  for (int slot = static_cast<int>(base.size()); slot > anchor; --slot) {
    std::vector<int> w = base;
    w.insert(w.begin() + slot, 1);
    for (int v = 2; v <= t; ++v) w.push_back(v);
    out.emplace_back(std::move(w));
  }
  return out;
}

/// All extensions of saw_poset(s, t), grown level by level from the empty one.
inline std::set<Permutation> grow_extensions(int s, int t) {
  if (s < 0 || t < 1) throw std::invalid_argument("grow_extensions needs s >= 0, t >= 1");
  std::set<Permutation> level{Permutation()};
  for (int d = 0; d < s; ++d) {
    std::set<Permutation> next;
    for (const auto& p : level)
      for (auto& c : saw_children(p, t)) next.insert(std::move(c));
    level = std::move(next);
  }
  return level;
}

}  // namespace lexcount
