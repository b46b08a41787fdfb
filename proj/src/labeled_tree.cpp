#include "topdag/labeled_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace topdag {

LabelId LabelTable::intern(std::string_view text) {
  auto [it, inserted] = ids_.try_emplace(std::string(text), static_cast<LabelId>(texts_.size()));
  if (inserted) texts_.emplace_back(text);
  return it->second;
}

std::vector<NodeId> LabeledTree::children(NodeId x) const {
  std::vector<NodeId> out;
  const NodeId end = x + subtree_size(x);
  for (NodeId c = x + 1; c < end; c += subtree_size(c)) out.push_back(c);
  return out;
}

std::uint32_t LabeledTree::height() const {
  std::vector<std::uint32_t> h(size(), 0);
  std::uint32_t best = 0;
  for (NodeId x = static_cast<NodeId>(size()); x >= 2; --x) {
    const NodeId p = parent(x);
    h[p - 1] = std::max(h[p - 1], h[x - 1] + 1);
  }
  if (!h.empty()) best = h[0];
  return best;
}

bool LabeledTree::operator==(const LabeledTree& other) const {
  if (size() != other.size() || parent_ != other.parent_) return false;
  for (NodeId x = 1; x <= size(); ++x) {
    if (label_text(x) != other.label_text(x)) return false;
  }
  return true;
}

NodeId TreeBuilder::add(NodeId parent, std::string_view label) {
  const auto id = static_cast<NodeId>(tree_.parent_.size() + 1);
  if (id == 1) {
    if (parent != kNoNode) throw std::invalid_argument("first node must be the root");
  } else {
    if (parent == kNoNode) throw std::invalid_argument("tree has a single root");
    while (!open_path_.empty() && open_path_.back() != parent) open_path_.pop_back();
    if (open_path_.empty()) throw std::invalid_argument("parent is not on the open preorder path");
  }
  tree_.label_.push_back(tree_.labels_.intern(label));
  tree_.parent_.push_back(parent);
  tree_.subtree_size_.push_back(1);
  open_path_.push_back(id);
  return id;
}

LabeledTree TreeBuilder::finish() && {
  auto& t = tree_;
  for (NodeId x = static_cast<NodeId>(t.size()); x >= 2; --x) {
    t.subtree_size_[t.parent_[x - 1] - 1] += t.subtree_size_[x - 1];
  }
  open_path_.clear();
  return std::move(t);
}

LabeledTree tree_from_children(std::span<const std::vector<std::uint32_t>> children,
                               std::span<const std::string> labels, std::uint32_t root) {
  TreeBuilder builder;
  // (original id, new parent id)
  std::vector<std::pair<std::uint32_t, NodeId>> stack{{root, kNoNode}};
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    const NodeId id = builder.add(parent, labels[v]);
    const auto& kids = children[v];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, id);
  }
  return std::move(builder).finish();
}

}  // namespace topdag
