#pragma once

#include <optional>
#include <string>

#include "topdag/labeled_tree.hpp"

namespace topdag::oracle {

// Ground-truth answers by direct traversal of the uncompressed tree, O(n)
// per query. Same contracts and range errors as the compressed queries.

const std::string& access(const LabeledTree& t, NodeId x);
std::uint32_t depth(const LabeledTree& t, NodeId x);
std::uint32_t height(const LabeledTree& t, NodeId x);
std::uint32_t subtree_size(const LabeledTree& t, NodeId x);
std::optional<NodeId> parent(const LabeledTree& t, NodeId x);
std::optional<NodeId> first_child(const LabeledTree& t, NodeId x);
std::optional<NodeId> next_sibling(const LabeledTree& t, NodeId x);
NodeId level_ancestor(const LabeledTree& t, NodeId x, std::uint32_t i);
NodeId nca(const LabeledTree& t, NodeId x, NodeId y);
LabeledTree decompress_subtree(const LabeledTree& t, NodeId x);

}  // namespace topdag::oracle
