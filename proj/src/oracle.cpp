#include "topdag/oracle.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace topdag::oracle {
namespace {

void check_node(const LabeledTree& t, NodeId x) {
  if (!t.contains(x)) throw std::out_of_range(fmt::format("node {} outside [1, {}]", x, t.size()));
}

std::vector<NodeId> ancestors_from_root(const LabeledTree& t, NodeId x) {
  std::vector<NodeId> path;
  for (NodeId v = x; v != kNoNode; v = t.parent(v)) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

const std::string& access(const LabeledTree& t, NodeId x) {
  check_node(t, x);
  return t.label_text(x);
}

std::uint32_t depth(const LabeledTree& t, NodeId x) {
  check_node(t, x);
  std::uint32_t d = 0;
  for (NodeId v = t.parent(x); v != kNoNode; v = t.parent(v)) ++d;
  return d;
}

std::uint32_t height(const LabeledTree& t, NodeId x) {
  check_node(t, x);
  // rel[y] = 1 + depth of y below x, 0 outside T(x). Parents precede children.
  std::vector<std::uint32_t> rel(t.size() + 1, 0);
  rel[x] = 1;
  std::uint32_t best = 0;
  for (NodeId y = x + 1; y <= t.size(); ++y) {
    const std::uint32_t r = rel[t.parent(y)];
    if (r == 0) continue;
    rel[y] = r + 1;
    best = std::max(best, r);
  }
  return best;
}

std::uint32_t subtree_size(const LabeledTree& t, NodeId x) {
  check_node(t, x);
  std::vector<bool> inside(t.size() + 1, false);
  inside[x] = true;
  std::uint32_t count = 1;
  for (NodeId y = x + 1; y <= t.size(); ++y) {
    if (inside[t.parent(y)]) {
      inside[y] = true;
      ++count;
    }
  }
  return count;
}

std::optional<NodeId> parent(const LabeledTree& t, NodeId x) {
  check_node(t, x);
  const NodeId p = t.parent(x);
  if (p == kNoNode) return std::nullopt;
  return p;
}

std::optional<NodeId> first_child(const LabeledTree& t, NodeId x) {
  check_node(t, x);
  for (NodeId y = x + 1; y <= t.size(); ++y) {
    if (t.parent(y) == x) return y;
  }
  return std::nullopt;
}

std::optional<NodeId> next_sibling(const LabeledTree& t, NodeId x) {
  check_node(t, x);
  const NodeId p = t.parent(x);
  if (p == kNoNode) return std::nullopt;
  for (NodeId y = x + 1; y <= t.size(); ++y) {
    if (t.parent(y) == p) return y;
  }
  return std::nullopt;
}

NodeId level_ancestor(const LabeledTree& t, NodeId x, std::uint32_t i) {
  check_node(t, x);
  NodeId v = x;
  for (std::uint32_t k = 0; k < i; ++k) {
    v = t.parent(v);
    if (v == kNoNode) throw std::out_of_range(fmt::format("node {} has no ancestor {} levels up", x, i));
  }
  return v;
}

NodeId nca(const LabeledTree& t, NodeId x, NodeId y) {
  check_node(t, x);
  check_node(t, y);
  const auto px = ancestors_from_root(t, x);
  const auto py = ancestors_from_root(t, y);
  std::size_t k = 0;
  while (k < px.size() && k < py.size() && px[k] == py[k]) ++k;
  return px[k - 1];
}

LabeledTree decompress_subtree(const LabeledTree& t, NodeId x) {
  check_node(t, x);
  TreeBuilder builder;
  // Copy T(x), renumbering so x becomes 1.
  std::vector<NodeId> renumbered(t.size() + 1, kNoNode);
  renumbered[x] = builder.add(kNoNode, t.label_text(x));
  for (NodeId y = x + 1; y <= t.size(); ++y) {
    const NodeId p = renumbered[t.parent(y)];
    if (p != kNoNode) renumbered[y] = builder.add(p, t.label_text(y));
  }
  return std::move(builder).finish();
}

}  // namespace topdag::oracle
