#include "topdag/top_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace topdag {

char to_char(MergeType t) { return static_cast<char>('a' + static_cast<int>(t)); }

std::optional<MergeType> merge_type_from_char(char c) {
  if (c < 'a' || c > 'e') return std::nullopt;
  return static_cast<MergeType>(c - 'a');
}

std::size_t TopTree::leaf_count() const {
  return static_cast<std::size_t>(std::count_if(nodes.begin(), nodes.end(), [](const auto& n) { return n.leaf; }));
}

std::uint32_t TopTree::height() const {
  if (nodes.empty()) return 0;
  std::vector<std::uint32_t> h(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& n = nodes[i];
    if (!n.leaf) h[i] = 1 + std::max(h[n.first], h[n.second]);
  }
  return h[root];
}

AuxTree::AuxTree(const LabeledTree& tree, TopTree& acc) : nodes_(tree.size()) {
  const auto n = static_cast<NodeId>(tree.size());
  live_.reserve(n);
  for (NodeId x = 1; x <= n; ++x) {
    auto& node = nodes_[x - 1];
    live_.push_back(x - 1);
    if (x == 1) continue;
    const NodeId p = tree.parent(x);
    node.parent = p - 1;
    node.cluster = acc.add(TopTreeNode::make_leaf(tree.label(p), tree.label(x)));
    node.pos = static_cast<std::uint32_t>(nodes_[p - 1].children.size());
    nodes_[p - 1].children.push_back(x - 1);
  }
}

ClusterId AuxTree::sole_cluster() const {
  if (edge_count() != 1) throw std::logic_error("AuxTree: more than one edge left");
  return nodes_[live_[1]].cluster;
}

std::size_t AuxTree::horizontal_step(TopTree& acc) {
  std::size_t merges = 0;
  std::vector<std::uint32_t> kept;

  // Joins the edges above siblings x and y (x first); returns the survivor.
  auto merge = [&](std::uint32_t x, std::uint32_t y) {
    const bool x_leaf = is_leaf(x);
    const bool y_leaf = is_leaf(y);
    const MergeType type = !x_leaf ? MergeType::kC : !y_leaf ? MergeType::kD : MergeType::kE;
    const ClusterId c = acc.add(TopTreeNode::make_internal(type, nodes_[x].cluster, nodes_[y].cluster));
    const std::uint32_t survivor = type == MergeType::kD ? y : x;
    const std::uint32_t dropped = survivor == x ? y : x;
    nodes_[survivor].cluster = c;
    nodes_[survivor].merged = true;
    nodes_[dropped].alive = false;
    ++merges;
    return survivor;
  };

  for (const std::uint32_t v : live_) {
    auto& kids = nodes_[v].children;
    const std::size_t k = kids.size();
    if (k < 2) continue;
    kept.clear();
    for (std::size_t i = 0; i + 1 < k; i += 2) {
      const std::uint32_t x = kids[i];
      const std::uint32_t y = kids[i + 1];
      if (is_leaf(x) || is_leaf(y)) {
        kept.push_back(merge(x, y));
      } else {
        kept.push_back(x);
        kept.push_back(y);
      }
    }
    if (k % 2 == 1) {
      const std::uint32_t last = kids[k - 1];
      if (k >= 3 && is_leaf(last) && !is_leaf(kids[k - 3]) && !is_leaf(kids[k - 2])) {
        // kept ends with the unmerged pair kids[k-3], kids[k-2].
        kept.back() = merge(kids[k - 2], last);
      } else {
        kept.push_back(last);
      }
    }
    kids = kept;
    for (std::uint32_t i = 0; i < kids.size(); ++i) nodes_[kids[i]].pos = i;
  }
  return merges;
}

std::size_t AuxTree::vertical_step(TopTree& acc) {
  const std::uint32_t root = live_.front();

  // Maximal paths, listed bottom-up by the lower endpoint of each edge.
  std::vector<std::vector<std::uint32_t>> paths;
  for (const std::uint32_t v : live_) {
    if (v == root || !nodes_[v].alive) continue;
    if (nodes_[v].children.size() == 1) continue;
    auto& path = paths.emplace_back();
    path.push_back(v);
    for (std::uint32_t cur = parent(v); cur != root && nodes_[cur].children.size() == 1; cur = parent(cur)) {
      path.push_back(cur);
    }
  }

  std::size_t merges = 0;
  for (const auto& path : paths) {
    // Pairs are formed bottom-up within runs of edges not merged in Step 1.
    // Without flags this is exactly the odd/even rule; a flagged top edge is
    // left alone as required, and flagged interior edges (created when a
    // node's only two children were merged horizontally) are never paired.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::size_t i = 0; i < path.size();) {
      if (nodes_[path[i]].merged) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < path.size() && !nodes_[path[j]].merged) ++j;
      for (std::size_t a = i; a + 1 < j; a += 2) pairs.emplace_back(path[a], path[a + 1]);
      i = j;
    }
    for (const auto& [lower, upper] : pairs) {
      const std::uint32_t top = parent(upper);
      const MergeType type = is_leaf(lower) ? MergeType::kB : MergeType::kA;
      const ClusterId c = acc.add(TopTreeNode::make_internal(type, nodes_[upper].cluster, nodes_[lower].cluster));
      nodes_[top].children[nodes_[upper].pos] = lower;
      nodes_[lower].pos = nodes_[upper].pos;
      nodes_[lower].parent = top;
      nodes_[lower].cluster = c;
      nodes_[lower].merged = true;
      nodes_[upper].alive = false;
      nodes_[upper].children.clear();
      ++merges;
    }
  }
  return merges;
}

std::size_t AuxTree::run_iteration(TopTree& acc) {
  const std::size_t before = edge_count();
  const std::size_t merges = horizontal_step(acc) + vertical_step(acc);
  std::erase_if(live_, [&](std::uint32_t v) { return !nodes_[v].alive; });
  for (const std::uint32_t v : live_) nodes_[v].merged = false;
  if (merges == 0 && before >= 2) throw std::logic_error("top tree construction made no progress");
  return merges;
}

TopTree build_top_tree(const LabeledTree& tree) {
  if (tree.size() < 2) throw std::invalid_argument("build_top_tree: tree needs at least one edge");
  TopTree acc;
  acc.source_n = static_cast<std::uint32_t>(tree.size());
  acc.nodes.reserve(2 * tree.size());
  AuxTree aux(tree, acc);
  while (aux.edge_count() > 1) aux.run_iteration(acc);
  acc.root = aux.sole_cluster();
  return acc;
}

}  // namespace topdag
