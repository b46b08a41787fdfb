#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topdag/labeled_tree.hpp"
#include "topdag/top_dag.hpp"

namespace topdag {

// Queries on the compressed tree. Nodes are addressed by their preorder
// number in the original tree; out-of-range arguments throw
// std::out_of_range. All functions are read-only on the DAG and keep their
// traversal state on the stack, so concurrent queries are safe.

enum class Direction : std::uint8_t { kLeft, kRight };

/// Where a local preorder number of an internal cluster falls among its
/// two children. kBoth is the node A and B share.
struct ChildPosition {
  enum class Side : std::uint8_t { kLeft, kRight, kBoth };
  Side side;
  std::uint32_t local_a;  // valid for kLeft and kBoth
  std::uint32_t local_b;  // valid for kRight and kBoth

  bool in_left() const { return side != Side::kRight; }
  bool in_right() const { return side != Side::kLeft; }
};

/// Maps u_C to the child cluster(s) containing it.
ChildPosition to_child(const TopDag& dag, DagId cluster, std::uint32_t local);
/// Inverse of to_child: the local number in `cluster` of node `local` of its
/// `dir` child.
std::uint32_t to_parent(const TopDag& dag, DagId cluster, Direction dir, std::uint32_t local);

/// Number of cluster-to-cluster moves a query made (descents and ascents,
/// including cluster expansions during decompression).
struct QueryCost {
  std::size_t visits = 0;
};

struct NavStep {
  DagId cluster;           // cluster the step leaves from
  Direction dir;           // child taken
  std::uint32_t local;     // tracked local number in `cluster`
};

/// Root-to-cluster descent. Shared DAG nodes are disambiguated by the path.
struct NavPath {
  std::vector<NavStep> steps;
  DagId current = 0;
  std::uint32_t local = 0;      // tracked local number in `current`
  std::uint32_t top_depth = 0;  // depth in T of current's top boundary
};

/// Converts a local number in `path.current` to a preorder number in T.
NodeId fold_to_global(const TopDag& dag, const NavPath& path, std::uint32_t local, QueryCost* cost = nullptr);

struct ChainEntry {
  DagId cluster;
  std::size_t step;         // index in the M path of the vertical merge above
  MergeType parent_type;    // a: the cluster has a bottom boundary, b: it does not
};

/// Clusters whose union is T(x): the cluster M reached by `m_path` plus the
/// chain of clusters hanging below it, ordered top to bottom in T.
struct RepresentativeSet {
  NavPath m_path;
  std::vector<ChainEntry> chain;
};

const std::string& access(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);
std::uint32_t depth(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);
std::optional<NodeId> first_child(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);
/// Ancestor i edges above x; requires 0 <= i <= depth(x).
NodeId level_ancestor(const TopDag& dag, NodeId x, std::uint32_t i, QueryCost* cost = nullptr);
std::optional<NodeId> parent(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);
NodeId nca(const TopDag& dag, NodeId x, NodeId y, QueryCost* cost = nullptr);
/// nullopt when x is a leaf of T.
std::optional<RepresentativeSet> find_representatives(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);
std::uint32_t subtree_size(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);
std::uint32_t height(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);
std::optional<NodeId> next_sibling(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);
LabeledTree decompress_subtree(const TopDag& dag, NodeId x, QueryCost* cost = nullptr);

/// The whole tree.
LabeledTree decompress(const TopDag& dag);

}  // namespace topdag
