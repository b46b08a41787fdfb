#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "topdag/labeled_tree.hpp"

namespace topdag {

/// How two clusters A (left) and B (right) were joined.
///  a, b: vertical. A's bottom boundary is B's top boundary; under a, B has a
///        bottom boundary, under b it does not.
///  c, d, e: horizontal. A and B share their top boundary; c: only A has a
///        bottom boundary, d: only B has one, e: neither.
enum class MergeType : std::uint8_t { kA, kB, kC, kD, kE };

inline bool is_vertical(MergeType t) { return t == MergeType::kA || t == MergeType::kB; }
char to_char(MergeType t);
std::optional<MergeType> merge_type_from_char(char c);

/// A merged cluster has a bottom boundary iff its type is a, c or d.
inline bool has_bottom_boundary(MergeType t) {
  return t == MergeType::kA || t == MergeType::kC || t == MergeType::kD;
}

using ClusterId = std::uint32_t;

struct TopTreeNode {
  bool leaf = true;
  MergeType type = MergeType::kA;  // internal only
  // Leaf: parent and child label of the edge. Internal: left and right child.
  std::uint32_t first = 0;
  std::uint32_t second = 0;

  static TopTreeNode make_leaf(LabelId parent_label, LabelId child_label) {
    return {true, MergeType::kA, parent_label, child_label};
  }
  static TopTreeNode make_internal(MergeType t, ClusterId left, ClusterId right) {
    return {false, t, left, right};
  }
};

/// Binary merge hierarchy over the edges of a tree. Children always have
/// smaller ids than their parent.
struct TopTree {
  std::vector<TopTreeNode> nodes;
  ClusterId root = 0;
  std::uint32_t source_n = 0;

  ClusterId add(const TopTreeNode& node) {
    nodes.push_back(node);
    return static_cast<ClusterId>(nodes.size() - 1);
  }
  std::size_t leaf_count() const;
  /// Edges on the longest root-to-leaf path (a single leaf has height 0).
  std::uint32_t height() const;
};

/// Contracted working copy of the input tree. Each live non-root node stands
/// for the edge to its parent, which carries the cluster it currently
/// represents. A node is a leaf iff that cluster has no bottom boundary.
class AuxTree {
 public:
  /// Seeds `acc` with one leaf cluster per edge, in preorder of the lower endpoint.
  AuxTree(const LabeledTree& tree, TopTree& acc);

  std::size_t edge_count() const { return live_.size() - 1; }
  bool is_leaf(std::uint32_t v) const { return nodes_[v].children.empty(); }
  std::uint32_t parent(std::uint32_t v) const { return nodes_[v].parent; }
  const std::vector<std::uint32_t>& children(std::uint32_t v) const { return nodes_[v].children; }
  /// Cluster on the edge above v.
  ClusterId cluster(std::uint32_t v) const { return nodes_[v].cluster; }
  bool merged_this_iteration(std::uint32_t v) const { return nodes_[v].merged; }
  /// The cluster on the only remaining edge.
  ClusterId sole_cluster() const;

  /// Step 1. Returns the number of merges performed.
  std::size_t horizontal_step(TopTree& acc);
  /// Step 2, on the tree left by horizontal_step. Returns the number of merges.
  std::size_t vertical_step(TopTree& acc);
  /// Both steps, then clears the per-iteration flags. Throws std::logic_error
  /// if no merge happened while two or more edges remain.
  std::size_t run_iteration(TopTree& acc);

 private:
  struct Node {
    std::uint32_t parent = 0;
    std::uint32_t pos = 0;  // index in the parent's child list
    ClusterId cluster = 0;
    bool merged = false;
    bool alive = true;
    std::vector<std::uint32_t> children;
  };

  std::vector<Node> nodes_;
  std::vector<std::uint32_t> live_;  // node 0 (the root) first
};

/// Greedy bottom-up construction. Requires tree.size() >= 2.
TopTree build_top_tree(const LabeledTree& tree);

}  // namespace topdag
