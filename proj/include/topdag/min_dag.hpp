#pragma once

#include <cstdint>
#include <vector>

#include "topdag/labeled_tree.hpp"

namespace topdag {

/// Minimal DAG of a tree under subtree sharing: one class per distinct
/// (label, ordered child classes). Classes are numbered children-first.
struct MinDag {
  struct Class {
    LabelId label;
    std::vector<std::uint32_t> children;
  };

  LabelTable labels;
  std::vector<Class> classes;
  std::uint32_t root = 0;

  std::size_t edge_count() const;
  /// Classes plus edges.
  std::size_t total_size() const { return classes.size() + edge_count(); }
};

MinDag minimize_tree_dag(const LabeledTree& tree);

/// Expands the root class back into a tree.
LabeledTree unfold(const MinDag& dag);

}  // namespace topdag
