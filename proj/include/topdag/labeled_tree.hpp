#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace topdag {

/// Preorder number of a node, 1-based. 0 is never a valid node.
using NodeId = std::uint32_t;
using LabelId = std::uint32_t;

inline constexpr NodeId kNoNode = 0;

/// Bijection between label ids 0..sigma-1 and distinct strings.
class LabelTable {
 public:
  LabelId intern(std::string_view text);
  const std::string& text(LabelId id) const { return texts_.at(id); }
  std::size_t size() const { return texts_.size(); }
  const std::vector<std::string>& texts() const { return texts_; }

  bool operator==(const LabelTable& other) const { return texts_ == other.texts_; }

 private:
  std::vector<std::string> texts_;
  std::unordered_map<std::string, LabelId> ids_;
};

/// Rooted ordered labeled tree stored in preorder. Node 1 is the root and the
/// subtree of x occupies [x, x + subtree_size(x) - 1].
class LabeledTree {
 public:
  LabeledTree() = default;

  std::size_t size() const { return parent_.size(); }
  bool empty() const { return parent_.empty(); }

  LabelId label(NodeId x) const { return label_[x - 1]; }
  const std::string& label_text(NodeId x) const { return labels_.text(label(x)); }
  /// kNoNode for the root.
  NodeId parent(NodeId x) const { return parent_[x - 1]; }
  std::uint32_t subtree_size(NodeId x) const { return subtree_size_[x - 1]; }
  std::vector<NodeId> children(NodeId x) const;
  std::uint32_t height() const;

  const LabelTable& labels() const { return labels_; }
  bool contains(NodeId x) const { return x >= 1 && x <= size(); }

  bool operator==(const LabeledTree& other) const;

 private:
  friend class TreeBuilder;

  LabelTable labels_;
  std::vector<LabelId> label_;
  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> subtree_size_;
};

/// Appends nodes in preorder. Labels are interned in first-occurrence order,
/// so two builders fed the same node sequence produce equal trees.
class TreeBuilder {
 public:
  /// `parent` must be kNoNode for the first node and otherwise a node on the
  /// current root-to-last-node path. Throws std::invalid_argument if not.
  NodeId add(NodeId parent, std::string_view label);
  LabeledTree finish() &&;

 private:
  LabeledTree tree_;
  std::vector<NodeId> open_path_;
};

/// Builds a preorder tree from arbitrary ids: `children[v]` lists v's
/// children in order and `labels[v]` is its label.
LabeledTree tree_from_children(std::span<const std::vector<std::uint32_t>> children,
                               std::span<const std::string> labels, std::uint32_t root);

}  // namespace topdag
