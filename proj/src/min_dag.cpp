#include "topdag/min_dag.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace topdag {

std::size_t MinDag::edge_count() const {
  std::size_t e = 0;
  for (const auto& c : classes) e += c.children.size();
  return e;
}

MinDag minimize_tree_dag(const LabeledTree& tree) {
  if (tree.empty()) throw std::invalid_argument("minimize_tree_dag: empty tree");
  const auto n = static_cast<NodeId>(tree.size());
  MinDag dag;
  dag.labels = tree.labels();

  // Signature bytes: label id followed by child class ids.
  std::unordered_map<std::string, std::uint32_t> ids;
  std::vector<std::uint32_t> cls(n + 1);
  std::string key;
  for (NodeId x = n; x >= 1; --x) {
    MinDag::Class c{tree.label(x), {}};
    const NodeId end = x + tree.subtree_size(x);
    for (NodeId y = x + 1; y < end; y += tree.subtree_size(y)) c.children.push_back(cls[y]);
    key.assign(reinterpret_cast<const char*>(&c.label), sizeof(c.label));
    key.append(reinterpret_cast<const char*>(c.children.data()), c.children.size() * sizeof(std::uint32_t));
    auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(dag.classes.size()));
    if (inserted) dag.classes.push_back(std::move(c));
    cls[x] = it->second;
  }
  dag.root = cls[1];
  return dag;
}

LabeledTree unfold(const MinDag& dag) {
  TreeBuilder builder;
  std::vector<std::pair<std::uint32_t, NodeId>> stack{{dag.root, kNoNode}};
  while (!stack.empty()) {
    auto [c, parent] = stack.back();
    stack.pop_back();
    const NodeId id = builder.add(parent, dag.labels.text(dag.classes[c].label));
    const auto& kids = dag.classes[c].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, id);
  }
  return std::move(builder).finish();
}

}  // namespace topdag
