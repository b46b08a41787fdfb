#pragma once

// Test-only helpers: brute-force cluster expansion and shared tree corpora.
// Nothing here reuses the library's unfolding or augmentation code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "topdag/generate.hpp"
#include "topdag/labeled_tree.hpp"
#include "topdag/top_dag.hpp"
#include "topdag/top_tree.hpp"
#include "topdag/tree_io.hpp"

namespace topdag::testing {

/// Explicit cluster pattern in local preorder; node 0 is the top boundary.
struct Pattern {
  std::vector<LabelId> label;
  std::vector<int> parent;  // -1 for the top boundary
  int bottom = -1;          // local index of the bottom boundary, -1 if none

  std::size_t size() const { return label.size(); }

  std::vector<std::uint32_t> depths() const {
    std::vector<std::uint32_t> d(size(), 0);
    for (std::size_t i = 1; i < size(); ++i) d[i] = d[parent[i]] + 1;
    return d;
  }
  std::uint32_t height() const {
    const auto d = depths();
    return *std::max_element(d.begin(), d.end());
  }
  std::uint32_t spine() const { return bottom < 0 ? 0 : depths()[bottom]; }
  std::uint32_t bpos() const { return bottom < 0 ? 0 : static_cast<std::uint32_t>(bottom + 1); }
};

/// Rebuilds `a` with `b`'s non-top nodes spliced in as children of `a`'s
/// node `attach`, placed right after the last node of T(attach) in a.
inline Pattern glue(const Pattern& a, const Pattern& b, int attach, int& b_offset_out, std::vector<int>& a_map) {
  // Insertion point: after the subtree of `attach` in a.
  int end = attach + 1;
  while (end < static_cast<int>(a.size())) {
    int v = end;
    while (v != -1 && v != attach) v = a.parent[v];
    if (v != attach) break;
    ++end;
  }
  Pattern out;
  a_map.assign(a.size(), -1);
  for (int i = 0; i < end; ++i) {
    a_map[i] = static_cast<int>(out.size());
    out.label.push_back(a.label[i]);
    out.parent.push_back(a.parent[i] < 0 ? -1 : a_map[a.parent[i]]);
  }
  const int offset = static_cast<int>(out.size()) - 1;  // b's node j (j >= 1) lands at offset + j
  for (std::size_t j = 1; j < b.size(); ++j) {
    out.label.push_back(b.label[j]);
    out.parent.push_back(b.parent[j] == 0 ? a_map[attach] : offset + b.parent[j]);
  }
  for (int i = end; i < static_cast<int>(a.size()); ++i) {
    a_map[i] = static_cast<int>(out.size());
    out.label.push_back(a.label[i]);
    out.parent.push_back(a.parent[i] < 0 ? -1 : a_map[a.parent[i]]);
  }
  b_offset_out = offset;
  return out;
}

/// Expands a node of any DAG-shaped cluster hierarchy.
template <typename GetNode>
Pattern expand(GetNode&& get, std::uint32_t id) {
  const auto n = get(id);
  if (n.leaf) return Pattern{{n.first, n.second}, {-1, 0}, 1};
  const Pattern a = expand(get, n.first);
  const Pattern b = expand(get, n.second);
  int offset = 0;
  std::vector<int> a_map;
  if (is_vertical(n.type)) {
    Pattern out = glue(a, b, a.bottom, offset, a_map);
    out.bottom = n.type == MergeType::kA ? offset + b.bottom : -1;
    return out;
  }
  Pattern out = glue(a, b, 0, offset, a_map);
  if (n.type == MergeType::kC) out.bottom = a_map[a.bottom];
  if (n.type == MergeType::kD) out.bottom = offset + b.bottom;
  return out;
}

inline Pattern expand(const TopDag& dag, DagId id) {
  return expand([&](std::uint32_t i) { return dag.node(i); }, id);
}

inline Pattern expand(const TopTree& tt, ClusterId id) {
  return expand([&](std::uint32_t i) { return tt.nodes[i]; }, id);
}

inline LabeledTree to_tree(const Pattern& p, const LabelTable& labels) {
  TreeBuilder b;
  for (std::size_t i = 0; i < p.size(); ++i) {
    b.add(p.parent[i] < 0 ? kNoNode : static_cast<NodeId>(p.parent[i] + 1), labels.text(p.label[i]));
  }
  return std::move(b).finish();
}

/// Canonical string of the top-tree subtree rooted at `id`, used to count
/// distinct subtrees by brute force.
inline std::string top_tree_signature(const TopTree& tt, ClusterId id) {
  const auto& n = tt.nodes[id];
  if (n.leaf) return "L" + std::to_string(n.first) + "," + std::to_string(n.second);
  return std::string("M") + to_char(n.type) + "(" + top_tree_signature(tt, n.first) + ")(" +
         top_tree_signature(tt, n.second) + ")";
}

struct CorpusEntry {
  TreeKind kind;
  std::uint32_t n;
  std::uint32_t sigma;
  std::uint64_t seed;
  LabeledTree tree;
};

/// Deterministic mix of all four kinds, sigma in {1,2,4,26}, n in [2, max_n].
inline std::vector<CorpusEntry> small_corpus(std::size_t count, std::uint32_t max_n, std::uint64_t seed = 7) {
  static constexpr TreeKind kKinds[] = {TreeKind::kPath, TreeKind::kCaterpillar, TreeKind::kCompleteBinary,
                                        TreeKind::kRandom};
  static constexpr std::uint32_t kSigmas[] = {1, 2, 4, 26};
  std::vector<CorpusEntry> out;
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < count; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    // Log-uniform n, plus the extremes.
    std::uint32_t n;
    if (i == 0) {
      n = 2;
    } else if (i == 1) {
      n = max_n;
    } else {
      const double frac = static_cast<double>(state >> 11) / static_cast<double>(1ULL << 53);
      n = static_cast<std::uint32_t>(2.0 * std::pow(max_n / 2.0, frac));
      n = std::clamp<std::uint32_t>(n, 2, max_n);
    }
    const TreeKind kind = kKinds[i % 4];
    if (kind == TreeKind::kCompleteBinary && n < 3) n = 3;
    const std::uint32_t sigma = kSigmas[(i / 4) % 4];
    out.push_back({kind, n, sigma, state, generate(kind, n, sigma, state)});
  }
  return out;
}

}  // namespace topdag::testing
