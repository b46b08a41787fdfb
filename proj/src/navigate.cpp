#include "topdag/navigate.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace topdag {
namespace {

using Side = ChildPosition::Side;

void check_node(const TopDag& dag, NodeId x) {
  if (x < 1 || x > dag.source_n()) {
    throw std::out_of_range(fmt::format("node {} outside [1, {}]", x, dag.source_n()));
  }
}

void count(QueryCost* cost, std::size_t n = 1) {
  if (cost) cost->visits += n;
}

void descend(const TopDag& dag, NavPath& path, Direction dir, std::uint32_t next_local, QueryCost* cost) {
  const auto& n = dag.node(path.current);
  path.steps.push_back({path.current, dir, path.local});
  if (dir == Direction::kRight) path.top_depth += dag.aug(path.current).dist_to_right_top;
  path.current = dir == Direction::kLeft ? n.first : n.second;
  path.local = next_local;
  count(cost);
}

NavPath start(const TopDag& dag, NodeId x) { return {{}, dag.root(), x, 0}; }

/// Follows x down to the first cluster whose top boundary is x, choosing B
/// at shared nodes. Returns false if a leaf cluster is reached first (x is a
/// leaf of T).
bool descend_to_top_boundary(const TopDag& dag, NavPath& path, QueryCost* cost) {
  while (path.local != 1) {
    if (dag.node(path.current).leaf) return false;
    const ChildPosition pos = to_child(dag, path.current, path.local);
    if (pos.in_right()) {
      descend(dag, path, Direction::kRight, pos.local_b, cost);
    } else {
      descend(dag, path, Direction::kLeft, pos.local_a, cost);
    }
  }
  return true;
}

/// Explicit forest with O(1) splicing of child lists.
class Forest {
 public:
  struct Handle {
    std::uint32_t top;
    std::optional<std::uint32_t> bottom;
  };

  std::uint32_t add(LabelId label) {
    label_.push_back(label);
    first_.push_back(kNone);
    last_.push_back(kNone);
    next_.push_back(kNone);
    return static_cast<std::uint32_t>(label_.size() - 1);
  }

  void append_child(std::uint32_t parent, std::uint32_t child) {
    if (last_[parent] == kNone) {
      first_[parent] = child;
    } else {
      next_[last_[parent]] = child;
    }
    last_[parent] = child;
  }

  /// Moves all children of `from` to the end of `to`'s child list.
  void splice_children(std::uint32_t from, std::uint32_t to) {
    if (first_[from] == kNone) return;
    if (last_[to] == kNone) {
      first_[to] = first_[from];
    } else {
      next_[last_[to]] = first_[from];
    }
    last_[to] = last_[from];
    first_[from] = last_[from] = kNone;
  }

  LabelId label(std::uint32_t v) const { return label_[v]; }

  LabeledTree to_tree(std::uint32_t root, const LabelTable& labels) const {
    TreeBuilder builder;
    std::vector<std::pair<std::uint32_t, NodeId>> stack{{root, kNoNode}};
    std::vector<std::uint32_t> kids;
    while (!stack.empty()) {
      auto [v, p] = stack.back();
      stack.pop_back();
      const NodeId id = builder.add(p, labels.text(label_[v]));
      kids.clear();
      for (std::uint32_t c = first_[v]; c != kNone; c = next_[c]) kids.push_back(c);
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, id);
    }
    return std::move(builder).finish();
  }

 private:
  static constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<LabelId> label_;
  std::vector<std::uint32_t> first_, last_, next_;
};

void require_same_label(const Forest& f, std::uint32_t a, std::uint32_t b) {
  if (f.label(a) != f.label(b)) throw std::logic_error("glued cluster boundaries carry different labels");
}

Forest::Handle unfold(const TopDag& dag, DagId c, Forest& forest, QueryCost* cost) {
  count(cost);
  const auto& n = dag.node(c);
  if (n.leaf) {
    const std::uint32_t top = forest.add(n.first);
    const std::uint32_t child = forest.add(n.second);
    forest.append_child(top, child);
    return {top, child};
  }
  const Forest::Handle a = unfold(dag, n.first, forest, cost);
  const Forest::Handle b = unfold(dag, n.second, forest, cost);
  if (is_vertical(n.type)) {
    require_same_label(forest, *a.bottom, b.top);
    forest.splice_children(b.top, *a.bottom);
    return {a.top, n.type == MergeType::kA ? b.bottom : std::nullopt};
  }
  require_same_label(forest, a.top, b.top);
  forest.splice_children(b.top, a.top);
  switch (n.type) {
    case MergeType::kC: return {a.top, a.bottom};
    case MergeType::kD: return {a.top, b.bottom};
    default: return {a.top, std::nullopt};
  }
}

}  // namespace

ChildPosition to_child(const TopDag& dag, DagId cluster, std::uint32_t u) {
  const auto& n = dag.node(cluster);
  if (n.leaf) throw std::invalid_argument("to_child on a leaf cluster");
  const std::uint32_t size = dag.aug(cluster).size;
  if (u < 1 || u > size) throw std::out_of_range(fmt::format("local number {} outside [1, {}]", u, size));
  const MergeRanges r = dag.ranges(cluster);
  if (is_vertical(n.type)) {
    if (u < r.left_b) return {Side::kLeft, u, 0};
    if (u == r.left_b) return {Side::kBoth, u, 1};
    if (u <= r.right_b) return {Side::kRight, 0, u - r.left_b + 1};
    return {Side::kLeft, u - r.right_b + r.left_b, 0};
  }
  if (u == 1) return {Side::kBoth, 1, 1};
  if (u <= r.right_a) return {Side::kLeft, u, 0};
  return {Side::kRight, 0, u - r.right_a + 1};
}

std::uint32_t to_parent(const TopDag& dag, DagId cluster, Direction dir, std::uint32_t u) {
  const auto& n = dag.node(cluster);
  if (n.leaf) throw std::invalid_argument("to_parent on a leaf cluster");
  const DagId child = dir == Direction::kLeft ? n.first : n.second;
  const std::uint32_t child_size = dag.aug(child).size;
  if (u < 1 || u > child_size) throw std::out_of_range(fmt::format("local number {} outside [1, {}]", u, child_size));
  const MergeRanges r = dag.ranges(cluster);
  if (is_vertical(n.type)) {
    if (dir == Direction::kRight) return u + r.left_b - 1;
    return u <= r.left_b ? u : u + r.right_b - r.left_b;
  }
  if (dir == Direction::kLeft || u == 1) return u;
  return u + r.right_a - 1;
}

NodeId fold_to_global(const TopDag& dag, const NavPath& path, std::uint32_t local, QueryCost* cost) {
  for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) {
    local = to_parent(dag, it->cluster, it->dir, local);
    count(cost);
  }
  return local;
}

const std::string& access(const TopDag& dag, NodeId x, QueryCost* cost) {
  check_node(dag, x);
  if (dag.is_single_node()) return dag.labels().text(dag.root_label());
  DagId c = dag.root();
  std::uint32_t u = x;
  while (!dag.node(c).leaf) {
    const ChildPosition pos = to_child(dag, c, u);
    if (pos.in_left()) {
      c = dag.node(c).first;
      u = pos.local_a;
    } else {
      c = dag.node(c).second;
      u = pos.local_b;
    }
    count(cost);
  }
  const auto& leaf = dag.node(c);
  return dag.labels().text(u == 1 ? leaf.first : leaf.second);
}

std::uint32_t depth(const TopDag& dag, NodeId x, QueryCost* cost) {
  check_node(dag, x);
  if (dag.is_single_node()) return 0;
  DagId c = dag.root();
  std::uint32_t u = x;
  std::uint32_t d = 0;
  while (!dag.node(c).leaf) {
    const ChildPosition pos = to_child(dag, c, u);
    if (pos.in_left()) {
      c = dag.node(c).first;
      u = pos.local_a;
    } else {
      d += dag.aug(c).dist_to_right_top;
      c = dag.node(c).second;
      u = pos.local_b;
    }
    count(cost);
  }
  return u == 1 ? d : d + 1;
}

std::optional<NodeId> first_child(const TopDag& dag, NodeId x, QueryCost* cost) {
  check_node(dag, x);
  if (dag.is_single_node()) return std::nullopt;
  NavPath path = start(dag, x);
  if (!descend_to_top_boundary(dag, path, cost)) return std::nullopt;
  const NodeId result = fold_to_global(dag, path, 2, cost);
  if (result != x + 1) throw std::logic_error(fmt::format("first child of {} resolved to {}", x, result));
  return result;
}

NodeId level_ancestor(const TopDag& dag, NodeId x, std::uint32_t i, QueryCost* cost) {
  check_node(dag, x);
  if (i == 0) return x;
  const std::uint32_t dx = depth(dag, x, cost);
  if (i > dx) throw std::out_of_range(fmt::format("node {} has depth {}, no ancestor {} levels up", x, dx, i));
  const std::uint32_t target = dx - i;

  NavPath path = start(dag, x);
  while (path.top_depth != target) {
    if (dag.node(path.current).leaf) throw std::logic_error("level ancestor search reached a leaf cluster");
    const auto& n = dag.node(path.current);
    const ChildPosition pos = to_child(dag, path.current, path.local);
    if (is_vertical(n.type)) {
      const std::uint32_t shared_depth = path.top_depth + dag.aug(n.first).spine;
      if (pos.in_right() && shared_depth > target) {
        // The ancestor lies above B; continue from A's bottom boundary.
        descend(dag, path, Direction::kLeft, dag.ranges(path.current).left_b, cost);
      } else if (pos.in_right()) {
        descend(dag, path, Direction::kRight, pos.local_b, cost);
      } else {
        descend(dag, path, Direction::kLeft, pos.local_a, cost);
      }
    } else {
      if (pos.side == Side::kBoth) throw std::logic_error("level ancestor search lost its target");
      if (pos.side == Side::kLeft) {
        descend(dag, path, Direction::kLeft, pos.local_a, cost);
      } else {
        descend(dag, path, Direction::kRight, pos.local_b, cost);
      }
    }
  }
  return fold_to_global(dag, path, 1, cost);
}

std::optional<NodeId> parent(const TopDag& dag, NodeId x, QueryCost* cost) {
  check_node(dag, x);
  if (x == 1) return std::nullopt;
  return level_ancestor(dag, x, 1, cost);
}

NodeId nca(const TopDag& dag, NodeId x, NodeId y, QueryCost* cost) {
  check_node(dag, x);
  check_node(dag, y);
  if (x == y) return x;

  NavPath path = start(dag, x);
  std::uint32_t other = y;
  for (;;) {
    if (path.local == other) return fold_to_global(dag, path, path.local, cost);
    if (path.local == 1 || other == 1 || dag.node(path.current).leaf) return fold_to_global(dag, path, 1, cost);

    const auto& n = dag.node(path.current);
    const ChildPosition px = to_child(dag, path.current, path.local);
    const ChildPosition py = to_child(dag, path.current, other);
    if (px.in_left() && py.in_left()) {
      other = py.local_a;
      descend(dag, path, Direction::kLeft, px.local_a, cost);
    } else if (px.in_right() && py.in_right()) {
      other = py.local_b;
      descend(dag, path, Direction::kRight, px.local_b, cost);
    } else if (is_vertical(n.type)) {
      // Split across A and B: the one in B is replaced by A's bottom boundary.
      const std::uint32_t bottom = dag.ranges(path.current).left_b;
      const std::uint32_t lx = px.in_left() ? px.local_a : bottom;
      other = py.in_left() ? py.local_a : bottom;
      descend(dag, path, Direction::kLeft, lx, cost);
    } else {
      return fold_to_global(dag, path, 1, cost);
    }
  }
}

std::optional<RepresentativeSet> find_representatives(const TopDag& dag, NodeId x, QueryCost* cost) {
  check_node(dag, x);
  if (dag.is_single_node()) return std::nullopt;
  RepresentativeSet rep;
  rep.m_path = start(dag, x);
  if (!descend_to_top_boundary(dag, rep.m_path, cost)) return std::nullopt;

  const auto& steps = rep.m_path.steps;
  for (std::size_t i = steps.size(); i-- > 0;) {
    count(cost);
    const auto& c = dag.node(steps[i].cluster);
    const bool from_left = steps[i].dir == Direction::kLeft;
    if (is_vertical(c.type) && from_left) rep.chain.push_back({c.second, i, c.type});
    if ((c.type == MergeType::kC && !from_left) || (c.type == MergeType::kD && from_left) ||
        c.type == MergeType::kE || c.type == MergeType::kB) {
      break;
    }
  }
  return rep;
}

std::uint32_t subtree_size(const TopDag& dag, NodeId x, QueryCost* cost) {
  const auto rep = find_representatives(dag, x, cost);
  if (!rep) return 1;
  std::uint32_t total = dag.aug(rep->m_path.current).size;
  for (const auto& b : rep->chain) total += dag.aug(b.cluster).size - 1;
  return total;
}

std::uint32_t height(const TopDag& dag, NodeId x, QueryCost* cost) {
  const auto rep = find_representatives(dag, x, cost);
  if (!rep) return 0;
  const Augmentation& m = dag.aug(rep->m_path.current);
  std::uint32_t h = m.height;
  std::uint32_t to_bottom = m.spine;  // x to the current bottom boundary
  for (const auto& b : rep->chain) {
    const Augmentation& g = dag.aug(b.cluster);
    h = std::max(h, to_bottom + g.height);
    if (b.parent_type == MergeType::kA) to_bottom += g.spine;
  }
  return h;
}

std::optional<NodeId> next_sibling(const TopDag& dag, NodeId x, QueryCost* cost) {
  check_node(dag, x);
  if (x == 1) return std::nullopt;
  const NodeId candidate = x + subtree_size(dag, x, cost);
  if (candidate > dag.source_n()) return std::nullopt;
  // The node after T(x) in preorder is x's next sibling or a shallower node.
  if (depth(dag, candidate, cost) != depth(dag, x, cost)) return std::nullopt;
  return candidate;
}

LabeledTree decompress_subtree(const TopDag& dag, NodeId x, QueryCost* cost) {
  check_node(dag, x);
  const auto rep = find_representatives(dag, x, cost);
  if (!rep) {
    TreeBuilder builder;
    builder.add(kNoNode, access(dag, x, cost));
    return std::move(builder).finish();
  }
  Forest forest;
  const Forest::Handle m = unfold(dag, rep->m_path.current, forest, cost);
  std::optional<std::uint32_t> bottom = m.bottom;
  for (const auto& b : rep->chain) {
    if (!bottom) throw std::logic_error("representative chain continues below a cluster without bottom boundary");
    const Forest::Handle h = unfold(dag, b.cluster, forest, cost);
    require_same_label(forest, *bottom, h.top);
    forest.splice_children(h.top, *bottom);
    bottom = b.parent_type == MergeType::kA ? h.bottom : std::nullopt;
  }
  return forest.to_tree(m.top, dag.labels());
}

LabeledTree decompress(const TopDag& dag) { return decompress_subtree(dag, 1); }

}  // namespace topdag
