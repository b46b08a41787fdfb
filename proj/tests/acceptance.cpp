// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include <fmt/format.h>

#include "support.hpp"
#include "topdag/navigate.hpp"
#include "topdag/oracle.hpp"
#include "topdag/stats.hpp"

using namespace topdag;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  template <typename... Args>
  void note(fmt::format_string<Args...> f, Args&&... args) {
    notes_.push_back(fmt::format(f, std::forward<Args>(args)...));
  }
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (!ok && ++failures_ <= 10) notes_.push_back("FAIL " + what());
  }

  bool report(double seconds) const {
    std::cout << fmt::format("criterion {}: {} {} ({} checks, {} failures, {:.1f}s)\n", id_,
                             failures_ == 0 ? "PASS" : "FAIL", title_, checks_, failures_, seconds);
    for (const auto& n : notes_) std::cout << "    " << n << '\n';
    return failures_ == 0;
  }

 private:
  int id_;
  std::string title_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> notes_;
};

double log2n(std::size_t n) { return std::log2(static_cast<double>(n)); }

std::uint32_t height_bound(std::size_t n) {
  return static_cast<std::uint32_t>(std::ceil(std::log(static_cast<double>(n)) / std::log(8.0 / 7.0))) + 2;
}

template <typename T>
std::string show(const std::optional<T>& v) {
  return v ? std::to_string(*v) : "none";
}

struct Instance {
  std::string name;
  LabeledTree tree;
};

// Criteria 1 and 6 share the query sweep over the corpus.
void query_sweep(const std::vector<testing::CorpusEntry>& corpus, Criterion& c1, Criterion& c6) {
  std::mt19937_64 rng(2024);
  std::size_t worst_cost_slack = 0;
  for (const auto& e : corpus) {
    const LabeledTree& t = e.tree;
    const TopDag d = compress(t);
    const std::uint32_t h = build_top_tree(t).height();
    const std::size_t budget = 4 * static_cast<std::size_t>(h);
    const std::string tag = fmt::format("{} n={} sigma={}", to_string(e.kind), t.size(), e.sigma);

    auto cost_check = [&](const char* op, NodeId x, const QueryCost& q, std::size_t limit) {
      c6.expect(q.visits <= limit, [&] { return fmt::format("{} {}({}) used {} visits > {}", tag, op, x, q.visits, limit); });
      worst_cost_slack = std::max(worst_cost_slack, q.visits);
    };

    for (NodeId x = 1; x <= t.size(); ++x) {
      QueryCost q;
      c1.expect(access(d, x, &q) == oracle::access(t, x), [&] { return fmt::format("{} access({})", tag, x); });
      cost_check("access", x, q, budget);

      q = {};
      const auto dep = depth(d, x, &q);
      c1.expect(dep == oracle::depth(t, x), [&] { return fmt::format("{} depth({}) = {}", tag, x, dep); });
      cost_check("depth", x, q, budget);

      q = {};
      const auto hh = height(d, x, &q);
      c1.expect(hh == oracle::height(t, x), [&] { return fmt::format("{} height({}) = {}", tag, x, hh); });
      cost_check("height", x, q, budget);

      q = {};
      const auto sz = subtree_size(d, x, &q);
      c1.expect(sz == oracle::subtree_size(t, x), [&] { return fmt::format("{} size({}) = {}", tag, x, sz); });
      cost_check("size", x, q, budget);

      q = {};
      const auto p = parent(d, x, &q);
      c1.expect(p == oracle::parent(t, x), [&] { return fmt::format("{} parent({}) = {}", tag, x, show(p)); });
      cost_check("parent", x, q, budget);

      q = {};
      const auto fc = first_child(d, x, &q);
      c1.expect(fc == oracle::first_child(t, x), [&] { return fmt::format("{} first_child({}) = {}", tag, x, show(fc)); });
      cost_check("first_child", x, q, budget);

      q = {};
      const auto ns = next_sibling(d, x, &q);
      c1.expect(ns == oracle::next_sibling(t, x), [&] { return fmt::format("{} next_sibling({}) = {}", tag, x, show(ns)); });
      cost_check("next_sibling", x, q, budget);

      for (std::uint32_t i = 0; i <= dep; ++i) {
        q = {};
        const auto la = level_ancestor(d, x, i, &q);
        c1.expect(la == oracle::level_ancestor(t, x, i),
                  [&] { return fmt::format("{} level_ancestor({}, {}) = {}", tag, x, i, la); });
        cost_check("level_ancestor", x, q, budget);
      }

      q = {};
      const LabeledTree sub = decompress_subtree(d, x, &q);
      c1.expect(sub == oracle::decompress_subtree(t, x), [&] { return fmt::format("{} decompress({})", tag, x); });
      cost_check("decompress", x, q, budget + 8 * static_cast<std::size_t>(t.subtree_size(x)));
    }

    std::uniform_int_distribution<NodeId> pick(1, static_cast<NodeId>(t.size()));
    for (int k = 0; k < 200; ++k) {
      const NodeId x = pick(rng);
      const NodeId y = pick(rng);
      QueryCost q;
      const NodeId z = nca(d, x, y, &q);
      c1.expect(z == oracle::nca(t, x, y), [&] { return fmt::format("{} nca({}, {}) = {}", tag, x, y, z); });
      cost_check("nca", x, q, budget);
    }
  }
  c1.note("{} trees, all four kinds, sigma in {{1,2,4,26}}", corpus.size());
  c6.note("largest visit count of any query: {}", worst_cost_slack);
}

std::vector<Instance> large_instances() {
  std::vector<Instance> out;
  for (TreeKind kind : {TreeKind::kPath, TreeKind::kCaterpillar}) {
    for (std::uint32_t k = 8; k <= 14; ++k) {
      out.push_back({fmt::format("{} n={}", to_string(kind), 1u << k), generate(kind, 1u << k, 1, k)});
    }
  }
  for (std::uint32_t k = 4; k <= 14; ++k) {
    out.push_back({fmt::format("complete_binary k={}", k), generate(TreeKind::kCompleteBinary, (1u << k) - 1, 1, k)});
  }
  return out;
}

}  // namespace

// Usage: acceptance [criterion...]; no arguments runs all nine.
int main(int argc, char** argv) {
  using Clock = std::chrono::steady_clock;
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8, 9};
  auto wanted = [&](std::initializer_list<int> ids) {
    return std::any_of(ids.begin(), ids.end(), [&](int id) { return selected.contains(id); });
  };

  bool all_ok = true;
  auto timed = [&](Criterion& c, const std::function<void()>& body) {
    const auto start = Clock::now();
    body();
    all_ok &= c.report(std::chrono::duration<double>(Clock::now() - start).count());
  };

  const auto corpus = wanted({1, 4, 5, 6, 7}) ? testing::small_corpus(520, 512, 1) : std::vector<testing::CorpusEntry>{};
  const auto extra = wanted({4, 5, 7}) ? large_instances() : std::vector<Instance>{};

  if (wanted({1, 6})) {
    Criterion c1(1, "oracle equivalence of all ten operations");
    Criterion c6(6, "query cost within 4 x top tree height");
    const auto start = Clock::now();
    query_sweep(corpus, c1, c6);
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (wanted({1})) all_ok &= c1.report(seconds);
    if (wanted({6})) all_ok &= c6.report(seconds);
  }

  if (wanted({2})) {
    Criterion c2(2, "separation on paths and caterpillars");
    timed(c2, [&] {
      for (TreeKind kind : {TreeKind::kPath, TreeKind::kCaterpillar}) {
        std::uint64_t prev = 0;
        for (std::uint32_t k = 8; k <= 14; ++k) {
          const std::uint32_t n = 1u << k;
          const StatsRecord s = compute_stats(generate(kind, n, 1, k));
          c2.note("{} n={} n_TD={} n_D={}", to_string(kind), n, s.n_td, s.n_d);
          c2.expect(s.n_d >= s.n_t, [&] { return fmt::format("{} n={}: n_D {} < n_T", to_string(kind), n, s.n_d); });
          c2.expect(static_cast<double>(s.n_td) <= 30 * log2n(n),
                    [&] { return fmt::format("{} n={}: n_TD {} > 30 log2 n", to_string(kind), n, s.n_td); });
          if (prev != 0) {
            c2.expect(s.n_td <= prev + 40,
                      [&] { return fmt::format("{} n={}: n_TD grew by {}", to_string(kind), n, s.n_td - prev); });
          }
          prev = s.n_td;
        }
      }
    });
  }

  if (wanted({3})) {
    Criterion c3(3, "complete binary trees stay logarithmic");
    timed(c3, [&] {
      for (std::uint32_t k = 4; k <= 14; ++k) {
        const StatsRecord s = compute_stats(generate(TreeKind::kCompleteBinary, (1u << k) - 1, 1, k));
        c3.note("k={} n_TD={} n_D={}", k, s.n_td, s.n_d);
        c3.expect(s.n_d <= 5 * k, [&] { return fmt::format("k={}: n_D {} > 5k", k, s.n_d); });
        c3.expect(s.n_td <= 60 * k, [&] { return fmt::format("k={}: n_TD {} > 60k", k, s.n_td); });
      }
    });
  }

  if (wanted({4})) {
    Criterion c4(4, "top DAG never much larger than the minimal DAG");
    timed(c4, [&] {
      const char* report_path = "acceptance_never_much_worse.tsv";
      std::ofstream rep(report_path);
      rep << "instance\tn_T\tn_TD\tn_D\tn_TD/(log2(n_T)*n_D)\n";
      double worst = 0;
      auto check = [&](const std::string& name, const LabeledTree& t) {
        const StatsRecord s = compute_stats(t);
        const double factor = static_cast<double>(s.n_td) / (log2n(s.n_t) * static_cast<double>(s.n_d));
        worst = std::max(worst, factor);
        rep << name << '\t' << s.n_t << '\t' << s.n_td << '\t' << s.n_d << '\t' << fmt::format("{:.4f}", factor) << '\n';
        c4.expect(factor <= 20, [&] { return fmt::format("{}: n_TD {} > 20 log2(n) n_D", name, s.n_td); });
      };
      for (const auto& e : corpus) check(fmt::format("{} n={} sigma={}", to_string(e.kind), e.tree.size(), e.sigma), e.tree);
      for (const auto& x : extra) check(x.name, x.tree);
      c4.note("largest n_TD / (log2 n_T * n_D) = {:.4f}; per-instance table in {}", worst, report_path);
    });
  }

  if (wanted({5})) {
    Criterion c5(5, "top tree height bound");
    timed(c5, [&] {
      std::uint32_t tightest = 0;
      auto check = [&](const std::string& name, const LabeledTree& t) {
        const std::uint32_t h = build_top_tree(t).height();
        const std::uint32_t bound = height_bound(t.size());
        tightest = std::max(tightest, h * 100 / bound);
        c5.expect(h <= bound, [&] { return fmt::format("{}: height {} > {}", name, h, bound); });
      };
      for (const auto& e : corpus) check(fmt::format("{} n={}", to_string(e.kind), e.tree.size()), e.tree);
      for (const auto& x : extra) check(x.name, x.tree);
      c5.note("highest height as a share of the bound: {}%", tightest);
    });
  }

  if (wanted({7})) {
    Criterion c7(7, "round trips");
    timed(c7, [&] {
      auto check = [&](const std::string& name, const LabeledTree& t) {
        const TopDag d = compress(t);
        c7.expect(decompress(d) == t, [&] { return fmt::format("{}: decompress(compress(T)) != T", name); });
        const std::string text = save_topdag(d);
        const TopDag loaded = load_topdag_string(text);
        c7.expect(save_topdag(loaded) == text, [&] { return fmt::format("{}: save/load changed bytes", name); });
        c7.expect(decompress(loaded) == t, [&] { return fmt::format("{}: loaded DAG decompresses wrongly", name); });
        c7.expect(parse_tree(serialize_tree(t)) == t, [&] { return fmt::format("{}: tree text round trip", name); });
      };
      for (const auto& e : corpus) check(fmt::format("{} n={}", to_string(e.kind), e.tree.size()), e.tree);
      for (const auto& x : extra) check(x.name, x.tree);
    });
  }

  if (wanted({8})) {
    Criterion c8(8, "duplicated subtrees are shared");
    timed(c8, [&] {
      for (std::uint32_t k = 4; k <= 10; ++k) {
        for (std::uint32_t sigma : {1u, 4u, 26u}) {
          const std::uint32_t s = 1u << k;
          const std::string text = serialize_tree(generate(TreeKind::kRandom, s, sigma, 100 * k + sigma));
          const LabeledTree one = parse_tree("(r" + text + ")");
          const LabeledTree two = parse_tree("(r" + text + text + ")");
          const auto n1 = compute_stats(one).n_td;
          const auto n2 = compute_stats(two).n_td;
          const double limit = static_cast<double>(n1) + 20 * log2n(two.size()) + 50;
          c8.note("|S|={} sigma={}: one copy {}, two copies {} (+{})", s, sigma, n1, n2,
                  static_cast<std::int64_t>(n2) - static_cast<std::int64_t>(n1));
          c8.expect(static_cast<double>(n2) <= limit,
                    [&] { return fmt::format("|S|={} sigma={}: {} > {:.1f}", s, sigma, n2, limit); });
        }
      }
    });
  }

  if (wanted({9})) {
    Criterion c9(9, "random-tree compression ratio sweep");
    timed(c9, [&] {
      for (std::uint32_t sigma : {1u, 2u, 26u}) {
        double prev_ratio = 0;
        for (std::uint32_t n = 1000; n <= 1'000'000; n *= 2) {
          const StatsRecord s = compute_stats(generate(TreeKind::kRandom, n, sigma, n + sigma));
          c9.note("sigma={} n={} n_TD={} n_T/n_TD={:.4f}", sigma, n, s.n_td, s.ratio_t_td);
          c9.expect(s.n_td <= 3 * s.n_t, [&] { return fmt::format("sigma={} n={}: n_TD {} > 3 n_T", sigma, n, s.n_td); });
          if (sigma == 1) {
            c9.expect(s.ratio_t_td >= prev_ratio, [&] {
              return fmt::format("sigma=1 n={}: ratio {:.4f} fell below {:.4f}", n, s.ratio_t_td, prev_ratio);
            });
          }
          prev_ratio = s.ratio_t_td;
        }
      }
    });
  }

  std::cout << (all_ok ? "all criteria passed\n" : "some criteria failed\n");
  return all_ok ? 0 : 1;
}
