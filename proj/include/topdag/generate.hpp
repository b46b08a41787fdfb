#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "topdag/labeled_tree.hpp"

namespace topdag {

enum class TreeKind { kPath, kCaterpillar, kCompleteBinary, kRandom };

std::string_view to_string(TreeKind kind);
std::optional<TreeKind> parse_tree_kind(std::string_view name);

/// Label text for generator label id `id`: a..z, then a1..z1, a2..
std::string generator_label(std::uint32_t id);

/// Deterministic benchmark trees. Same arguments, same tree.
///  - path: chain of n nodes
///  - caterpillar: spine of ceil(n/2) nodes; the first n - ceil(n/2) spine
///    nodes get one leaf appended after their spine child
///  - complete_binary: n is rounded down to 2^k - 1 (see completed_binary_size)
///  - random: node i attaches as last child of a uniform earlier node
/// Labels are drawn uniformly from `sigma` labels. Throws on n == 0 or sigma == 0.
LabeledTree generate(TreeKind kind, std::uint32_t n, std::uint32_t sigma, std::uint64_t seed);

/// Largest 2^k - 1 that is <= n (n >= 1).
std::uint32_t completed_binary_size(std::uint32_t n);

}  // namespace topdag
