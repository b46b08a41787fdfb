#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "topdag/labeled_tree.hpp"
#include "topdag/top_tree.hpp"

namespace topdag {

using DagId = std::uint32_t;

/// Per-cluster navigation data, derived from the DAG structure alone.
///
/// `spine` and `bpos` describe the bottom boundary: edge distance from the top
/// boundary and local preorder number. They are 0 when the cluster has none.
/// A leaf cluster always reports spine 1 / bpos 2; leaves are shared between
/// contexts that do and do not treat the child endpoint as a boundary, and
/// the enclosing merge type decides whether the values apply.
struct Augmentation {
  std::uint32_t size = 0;
  std::uint32_t height = 0;
  std::uint32_t spine = 0;
  std::uint32_t bpos = 0;
  /// Edge distance from this cluster's top boundary to its right child's.
  std::uint32_t dist_to_right_top = 0;
};

/// Local preorder ranges of an internal cluster C = A + B: B's first and
/// last node in C's order, and A's last node.
struct MergeRanges {
  std::uint32_t left_b;
  std::uint32_t right_b;
  std::uint32_t right_a;
};

class TopDag {
 public:
  struct Node {
    bool leaf = true;
    MergeType type = MergeType::kA;
    std::uint32_t first = 0;   // leaf: parent label, internal: left child
    std::uint32_t second = 0;  // leaf: child label, internal: right child
  };

  TopDag() = default;

  /// Degenerate single-node tree.
  static TopDag single_node(LabelTable labels, LabelId root_label);
  /// Takes nodes in topological order (children before parents) and
  /// computes the augmentation. Throws FormatError on inconsistent input.
  static TopDag from_nodes(LabelTable labels, std::vector<Node> nodes, DagId root, std::uint32_t source_n);

  std::uint32_t source_n() const { return source_n_; }
  bool is_single_node() const { return source_n_ == 1; }
  LabelId root_label() const { return root_label_; }

  DagId root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const;
  /// Nodes plus edges; 1 for the single-node tree.
  std::size_t total_size() const;

  const Node& node(DagId id) const { return nodes_[id]; }
  const Augmentation& aug(DagId id) const { return aug_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const LabelTable& labels() const { return labels_; }

  MergeRanges ranges(DagId id) const;

 private:
  LabelTable labels_;
  std::vector<Node> nodes_;
  std::vector<Augmentation> aug_;
  DagId root_ = 0;
  std::uint32_t source_n_ = 0;
  LabelId root_label_ = 0;
};

/// Bottom-up hash-consing of the top tree. `labels` is the label table the
/// top tree's leaf labels refer to.
TopDag minimize_top_tree(const TopTree& tree, const LabelTable& labels);

/// build_top_tree + minimize_top_tree, plus the single-node case.
TopDag compress(const LabeledTree& tree);

class FormatError : public std::runtime_error {
 public:
  enum class Kind {
    kSyntax,
    kVersion,
    kDanglingChild,
    kTopologicalOrder,
    kLabelOutOfRange,
    kInconsistent,
  };
  FormatError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// TOPDAG v1 text format.
void save_topdag(const TopDag& dag, std::ostream& out);
std::string save_topdag(const TopDag& dag);
TopDag load_topdag(std::istream& in);
TopDag load_topdag_string(const std::string& text);

}  // namespace topdag
