#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "topdag/generate.hpp"
#include "topdag/navigate.hpp"
#include "topdag/stats.hpp"
#include "topdag/top_dag.hpp"
#include "topdag/tree_io.hpp"

namespace topdag::cli {
namespace {

/// Bad input data (unreadable file, malformed content, argument outside the tree).
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad command line that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError(fmt::format("cannot open '{}' for reading", path));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError(fmt::format("cannot open '{}' for writing", path));
  f << data;
  if (!f) throw DataError(fmt::format("failed writing '{}'", path));
}

LabeledTree read_tree(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  try {
    return format == "xml" ? ingest_xml(text) : parse_tree(text);
  } catch (const ParseError& e) {
    throw DataError(fmt::format("{}: {} (byte {})", path, e.what(), e.offset()));
  }
}

TopDag read_dag(const std::string& path) {
  try {
    return load_topdag_string(read_input(path));
  } catch (const FormatError& e) {
    throw DataError(fmt::format("{}: {}", path, e.what()));
  }
}

std::uint32_t parse_number(const std::string& s, const char* what) {
  std::uint32_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError(fmt::format("invalid {} '{}'", what, s));
  return v;
}

std::string node_or_none(std::optional<NodeId> v) { return v ? std::to_string(*v) : "none"; }

std::string run_query(const TopDag& dag, const std::string& op, const std::vector<std::string>& args) {
  auto expect = [&](std::size_t count) {
    if (args.size() != count) throw UsageError(fmt::format("'{}' takes {} argument(s), got {}", op, count, args.size()));
  };
  auto node = [&](std::size_t i) { return parse_number(args[i], "node"); };

  try {
    if (op == "access") return expect(1), access(dag, node(0));
    if (op == "depth") return expect(1), std::to_string(depth(dag, node(0)));
    if (op == "height") return expect(1), std::to_string(height(dag, node(0)));
    if (op == "size") return expect(1), std::to_string(subtree_size(dag, node(0)));
    if (op == "parent") return expect(1), node_or_none(parent(dag, node(0)));
    if (op == "first_child") return expect(1), node_or_none(first_child(dag, node(0)));
    if (op == "next_sibling") return expect(1), node_or_none(next_sibling(dag, node(0)));
    if (op == "level_ancestor") {
      expect(2);
      return std::to_string(level_ancestor(dag, node(0), parse_number(args[1], "level")));
    }
    if (op == "nca") return expect(2), std::to_string(nca(dag, node(0), node(1)));
    if (op == "decompress") return expect(1), serialize_tree(decompress_subtree(dag, node(0)));
  } catch (const std::out_of_range& e) {
    throw DataError(e.what());
  }
  throw UsageError(fmt::format("unknown query '{}'", op));
}

nlohmann::ordered_json stats_json(const StatsRecord& s) {
  nlohmann::ordered_json j;
  j["n_T"] = s.n_t;
  j["e_T"] = s.e_t;
  j["n_TT"] = s.n_tt;
  j["ttHeight"] = s.tt_height;
  j["n_TD"] = s.n_td;
  j["n_D"] = s.n_d;
  j["ratio_T_TD"] = s.ratio_t_td;
  j["ratio_D_TD"] = s.ratio_d_td;
  return j;
}

TreeKind parse_kind(const std::string& name) {
  const auto kind = parse_tree_kind(name);
  if (!kind) throw UsageError(fmt::format("unknown tree kind '{}'", name));
  return *kind;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Top DAG tree compression and compressed navigation"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string format = "tree";
  bool json = false;

  auto* compress_cmd = app.add_subcommand("compress", "Compress a tree to TOPDAG v1");
  compress_cmd->add_option("input", input, "Tree text or XML file ('-' for stdin)")->required();
  compress_cmd->add_option("-o,--output", output, "Output file (default stdout)");
  compress_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"tree", "xml"}));

  auto* decompress_cmd = app.add_subcommand("decompress", "Expand a TOPDAG file to canonical tree text");
  decompress_cmd->add_option("input", input, "TOPDAG file")->required();
  decompress_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string op;
  std::vector<std::string> op_args;
  auto* query_cmd = app.add_subcommand("query", "Answer one navigation query on a TOPDAG file");
  query_cmd->add_option("input", input, "TOPDAG file")->required();
  query_cmd->add_option("op", op,
                        "access|depth|height|size|parent|first_child|next_sibling|level_ancestor|nca|decompress")
      ->required();
  query_cmd->add_option("args", op_args, "Query arguments (preorder numbers, level)");

  auto* stats_cmd = app.add_subcommand("stats", "Report compression statistics for a tree");
  stats_cmd->add_option("input", input, "Tree text or XML file")->required();
  stats_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"tree", "xml"}));
  stats_cmd->add_flag("--json", json, "Emit JSON");

  std::string kind_name;
  std::uint32_t n = 0;
  std::uint32_t sigma = 1;
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark tree");
  gen_cmd->add_option("kind", kind_name, "path|caterpillar|complete_binary|random")->required();
  gen_cmd->add_option("--n", n, "Node count")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--sigma", sigma, "Alphabet size")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::vector<std::string> families;
  std::uint32_t max_n = 1u << 14;
  std::uint32_t min_n = 16;
  auto* bench_cmd = app.add_subcommand("bench", "Compression sweep over benchmark families with doubling n");
  bench_cmd->add_option("--family", families, "Family to run (repeatable; default all)");
  bench_cmd->add_option("--max", max_n, "Largest n")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--min", min_n, "Smallest n")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--sigma", sigma, "Alphabet size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed, "Random seed");
  bench_cmd->add_flag("--json", json, "Emit JSON");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compress_cmd) {
      write_output(output, save_topdag(compress(read_tree(input, format))), out);
    } else if (*decompress_cmd) {
      write_output(output, serialize_tree(decompress(read_dag(input))) + "\n", out);
    } else if (*query_cmd) {
      const TopDag dag = read_dag(input);
      out << run_query(dag, op, op_args) << '\n';
    } else if (*stats_cmd) {
      const StatsRecord s = compute_stats(read_tree(input, format));
      if (json) {
        out << stats_json(s).dump() << '\n';
      } else {
        out << stats_tsv_header() << '\n' << stats_tsv_row(s) << '\n';
      }
    } else if (*gen_cmd) {
      const TreeKind kind = parse_kind(kind_name);
      if (kind == TreeKind::kCompleteBinary && completed_binary_size(n) != n) {
        err << "note: complete_binary size coerced to " << completed_binary_size(n) << '\n';
      }
      write_output(output, serialize_tree(generate(kind, n, sigma, seed)) + "\n", out);
    } else if (*bench_cmd) {
      std::vector<TreeKind> kinds;
      if (families.empty()) {
        kinds = {TreeKind::kPath, TreeKind::kCaterpillar, TreeKind::kCompleteBinary, TreeKind::kRandom};
      } else {
        for (const auto& f : families) kinds.push_back(parse_kind(f));
      }
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      if (!json) out << "family\tsigma\t" << stats_tsv_header() << '\n';
      for (const TreeKind kind : kinds) {
        for (std::uint64_t size = min_n; size <= max_n; size *= 2) {
          const StatsRecord s = compute_stats(generate(kind, static_cast<std::uint32_t>(size), sigma, seed));
          if (json) {
            nlohmann::ordered_json row;
            row["family"] = to_string(kind);
            row["sigma"] = sigma;
            row.update(stats_json(s));
            rows.push_back(std::move(row));
          } else {
            out << to_string(kind) << '\t' << sigma << '\t' << stats_tsv_row(s) << '\n';
          }
        }
      }
      if (json) out << rows.dump(2) << '\n';
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace topdag::cli
