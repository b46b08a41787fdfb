#include "topdag/stats.hpp"

#include <fmt/format.h>

#include "topdag/min_dag.hpp"
#include "topdag/top_dag.hpp"
#include "topdag/top_tree.hpp"

namespace topdag {

StatsRecord compute_stats(const LabeledTree& tree) {
  StatsRecord s;
  s.n_t = tree.size();
  s.e_t = s.n_t - 1;
  if (tree.size() == 1) {
    s.n_td = 1;
  } else {
    const TopTree tt = build_top_tree(tree);
    s.n_tt = tt.nodes.size();
    s.tt_height = tt.height();
    s.n_td = minimize_top_tree(tt, tree.labels()).total_size();
  }
  s.n_d = minimize_tree_dag(tree).total_size();
  s.ratio_t_td = static_cast<double>(s.n_t) / static_cast<double>(s.n_td);
  s.ratio_d_td = static_cast<double>(s.n_d) / static_cast<double>(s.n_td);
  return s;
}

std::string stats_tsv_header() { return fmt::format("{}", fmt::join(kStatsFields, "\t")); }

std::string stats_tsv_row(const StatsRecord& s) {
  return fmt::format("{}\t{}\t{}\t{}\t{}\t{}\t{:.6f}\t{:.6f}", s.n_t, s.e_t, s.n_tt, s.tt_height, s.n_td, s.n_d,
                     s.ratio_t_td, s.ratio_d_td);
}

}  // namespace topdag
