#pragma once

#include <cstdint>
#include <string>

#include "topdag/labeled_tree.hpp"

namespace topdag {

/// Size comparison between the tree, its top DAG and its minimal DAG.
/// DAG sizes count nodes plus edges.
struct StatsRecord {
  std::uint64_t n_t = 0;    // tree nodes
  std::uint64_t e_t = 0;    // tree edges
  std::uint64_t n_tt = 0;   // top tree nodes
  std::uint32_t tt_height = 0;
  std::uint64_t n_td = 0;   // top DAG size
  std::uint64_t n_d = 0;    // minimal DAG size
  double ratio_t_td = 0.0;  // n_t / n_td
  double ratio_d_td = 0.0;  // n_d / n_td
};

StatsRecord compute_stats(const LabeledTree& tree);

/// Column names, in the order used by the tab-separated and JSON outputs.
inline constexpr const char* kStatsFields[] = {"n_T", "e_T", "n_TT", "ttHeight", "n_TD", "n_D", "ratio_T_TD", "ratio_D_TD"};

std::string stats_tsv_header();
std::string stats_tsv_row(const StatsRecord& s);

}  // namespace topdag
