#include "topdag/generate.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace topdag {
namespace {

// std::uniform_int_distribution is not portable across standard libraries;
// rejection sampling on mt19937_64 output is.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % bound) - 1;
  std::uint64_t v;
  do {
    v = rng();
  } while (v > limit);
  return v % bound;
}

}  // namespace

std::string_view to_string(TreeKind kind) {
  switch (kind) {
    case TreeKind::kPath: return "path";
    case TreeKind::kCaterpillar: return "caterpillar";
    case TreeKind::kCompleteBinary: return "complete_binary";
    case TreeKind::kRandom: return "random";
  }
  return "?";
}

std::optional<TreeKind> parse_tree_kind(std::string_view name) {
  for (auto k : {TreeKind::kPath, TreeKind::kCaterpillar, TreeKind::kCompleteBinary, TreeKind::kRandom}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string generator_label(std::uint32_t id) {
  std::string s(1, static_cast<char>('a' + id % 26));
  if (id >= 26) s += std::to_string(id / 26);
  return s;
}

std::uint32_t completed_binary_size(std::uint32_t n) {
  std::uint32_t size = 1;
  while (2 * size + 1 <= n) size = 2 * size + 1;
  return size;
}

LabeledTree generate(TreeKind kind, std::uint32_t n, std::uint32_t sigma, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("generate: n must be at least 1");
  if (sigma == 0) throw std::invalid_argument("generate: sigma must be at least 1");

  std::mt19937_64 rng(seed);
  if (kind == TreeKind::kCompleteBinary) n = completed_binary_size(n);

  std::vector<std::vector<std::uint32_t>> children(n);
  switch (kind) {
    case TreeKind::kPath:
      for (std::uint32_t v = 1; v < n; ++v) children[v - 1].push_back(v);
      break;
    case TreeKind::kCaterpillar: {
      const std::uint32_t spine = (n + 1) / 2;
      for (std::uint32_t v = 1; v < spine; ++v) children[v - 1].push_back(v);
      for (std::uint32_t leaf = spine; leaf < n; ++leaf) children[leaf - spine].push_back(leaf);
      break;
    }
    case TreeKind::kCompleteBinary:
      for (std::uint32_t v = 0; 2 * v + 2 < n; ++v) {
        children[v].push_back(2 * v + 1);
        children[v].push_back(2 * v + 2);
      }
      break;
    case TreeKind::kRandom:
      for (std::uint32_t v = 1; v < n; ++v) children[uniform_below(rng, v)].push_back(v);
      break;
  }

  std::vector<std::string> labels(n);
  for (auto& label : labels) label = generator_label(sigma == 1 ? 0 : static_cast<std::uint32_t>(uniform_below(rng, sigma)));
  return tree_from_children(children, labels, 0);
}

}  // namespace topdag
