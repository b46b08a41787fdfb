#include "topdag/top_dag.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace topdag {
namespace {

struct NodeKey {
  bool leaf;
  MergeType type;
  std::uint32_t first;
  std::uint32_t second;
  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::uint64_t h = (static_cast<std::uint64_t>(k.first) << 32) | k.second;
    h ^= (static_cast<std::uint64_t>(k.leaf) << 3 | static_cast<std::uint64_t>(k.type)) * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

using Kind = FormatError::Kind;

}  // namespace

TopDag TopDag::single_node(LabelTable labels, LabelId root_label) {
  TopDag d;
  d.labels_ = std::move(labels);
  d.source_n_ = 1;
  d.root_label_ = root_label;
  return d;
}

TopDag TopDag::from_nodes(LabelTable labels, std::vector<Node> nodes, DagId root, std::uint32_t source_n) {
  TopDag d;
  d.labels_ = std::move(labels);
  d.nodes_ = std::move(nodes);
  d.root_ = root;
  d.source_n_ = source_n;

  const auto m = static_cast<DagId>(d.nodes_.size());
  if (m == 0) throw FormatError(Kind::kInconsistent, "top DAG has no nodes");
  if (root >= m) throw FormatError(Kind::kDanglingChild, fmt::format("root id {} out of range", root));

  // Top and bottom boundary labels, for checking that glued nodes agree.
  std::vector<LabelId> top(m), bottom(m);
  d.aug_.resize(m);
  for (DagId id = 0; id < m; ++id) {
    const Node& n = d.nodes_[id];
    Augmentation& g = d.aug_[id];
    if (n.leaf) {
      if (n.first >= d.labels_.size() || n.second >= d.labels_.size()) {
        throw FormatError(Kind::kLabelOutOfRange, fmt::format("node {}: label index out of range", id));
      }
      top[id] = n.first;
      bottom[id] = n.second;
      g = {2, 1, 1, 2, 0};
      continue;
    }
    for (const std::uint32_t child : {n.first, n.second}) {
      if (child >= m) throw FormatError(Kind::kDanglingChild, fmt::format("node {}: child {} does not exist", id, child));
      if (child >= id) {
        throw FormatError(Kind::kTopologicalOrder, fmt::format("node {}: child {} does not precede it", id, child));
      }
    }
    const DagId a = n.first;
    const DagId b = n.second;
    const Node& na = d.nodes_[a];
    const Node& nb = d.nodes_[b];
    auto can_have_bottom = [](const Node& c) { return c.leaf || has_bottom_boundary(c.type); };
    auto can_lack_bottom = [](const Node& c) { return c.leaf || !has_bottom_boundary(c.type); };
    const bool a_bottom = n.type == MergeType::kA || n.type == MergeType::kB || n.type == MergeType::kC;
    const bool b_bottom = n.type == MergeType::kA || n.type == MergeType::kD;
    if (!(a_bottom ? can_have_bottom(na) : can_lack_bottom(na)) || !(b_bottom ? can_have_bottom(nb) : can_lack_bottom(nb))) {
      throw FormatError(Kind::kInconsistent, fmt::format("node {}: children do not fit merge type {}", id, to_char(n.type)));
    }

    const Augmentation& ga = d.aug_[a];
    const Augmentation& gb = d.aug_[b];
    g.size = ga.size + gb.size - 1;
    top[id] = top[a];
    if (is_vertical(n.type)) {
      if (bottom[a] != top[b]) throw FormatError(Kind::kInconsistent, fmt::format("node {}: boundary labels differ", id));
      g.height = std::max(ga.height, ga.spine + gb.height);
      g.dist_to_right_top = ga.spine;
      if (n.type == MergeType::kA) {
        g.spine = ga.spine + gb.spine;
        g.bpos = ga.bpos + gb.bpos - 1;
        bottom[id] = bottom[b];
      }
    } else {
      if (top[a] != top[b]) throw FormatError(Kind::kInconsistent, fmt::format("node {}: top labels differ", id));
      g.height = std::max(ga.height, gb.height);
      if (n.type == MergeType::kC) {
        g.spine = ga.spine;
        g.bpos = ga.bpos;
        bottom[id] = bottom[a];
      } else if (n.type == MergeType::kD) {
        g.spine = gb.spine;
        g.bpos = gb.bpos + ga.size - 1;
        bottom[id] = bottom[b];
      }
    }
  }
  if (d.aug_[root].size != source_n) {
    throw FormatError(Kind::kInconsistent,
                      fmt::format("root cluster has {} nodes, header says {}", d.aug_[root].size, source_n));
  }
  return d;
}

std::size_t TopDag::edge_count() const {
  return 2 * static_cast<std::size_t>(std::count_if(nodes_.begin(), nodes_.end(), [](const Node& n) { return !n.leaf; }));
}

std::size_t TopDag::total_size() const { return is_single_node() ? 1 : node_count() + edge_count(); }

MergeRanges TopDag::ranges(DagId id) const {
  const Node& n = nodes_[id];
  const Augmentation& a = aug_[n.first];
  const Augmentation& b = aug_[n.second];
  if (is_vertical(n.type)) return {a.bpos, a.bpos + b.size - 1, aug_[id].size};
  return {1, aug_[id].size, a.size};
}

TopDag minimize_top_tree(const TopTree& tree, const LabelTable& labels) {
  std::vector<TopDag::Node> nodes;
  std::unordered_map<NodeKey, DagId, NodeKeyHash> ids;
  ids.reserve(tree.nodes.size());
  // Top tree children precede parents, so one forward pass suffices.
  std::vector<DagId> mapped(tree.nodes.size());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const TopTreeNode& t = tree.nodes[i];
    NodeKey key{t.leaf, t.leaf ? MergeType::kA : t.type, t.first, t.second};
    if (!t.leaf) {
      key.first = mapped[t.first];
      key.second = mapped[t.second];
    }
    auto [it, inserted] = ids.try_emplace(key, static_cast<DagId>(nodes.size()));
    if (inserted) nodes.push_back({key.leaf, key.type, key.first, key.second});
    mapped[i] = it->second;
  }
  return TopDag::from_nodes(labels, std::move(nodes), mapped[tree.root], tree.source_n);
}

TopDag compress(const LabeledTree& tree) {
  if (tree.empty()) throw std::invalid_argument("compress: empty tree");
  if (tree.size() == 1) return TopDag::single_node(tree.labels(), tree.label(1));
  return minimize_top_tree(build_top_tree(tree), tree.labels());
}

void save_topdag(const TopDag& dag, std::ostream& out) {
  out << "TOPDAG 1\n" << "n " << dag.source_n() << '\n';
  if (dag.is_single_node()) {
    out << "rootlabel " << dag.labels().text(dag.root_label()) << '\n';
    return;
  }
  out << "labels " << dag.labels().size() << '\n';
  for (const auto& text : dag.labels().texts()) out << text << '\n';
  out << "nodes " << dag.node_count() << '\n';
  for (const auto& n : dag.nodes()) {
    if (n.leaf) {
      out << "L " << n.first << ' ' << n.second << '\n';
    } else {
      out << "M " << to_char(n.type) << ' ' << n.first << ' ' << n.second << '\n';
    }
  }
  out << "root " << dag.root() << '\n';
}

std::string save_topdag(const TopDag& dag) {
  std::ostringstream out;
  save_topdag(dag, out);
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::string next(const char* what) {
    std::string line;
    if (!std::getline(in_, line)) throw FormatError(Kind::kSyntax, fmt::format("unexpected end of input, expected {}", what));
    ++line_no_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  /// Reads `<keyword> <count>`.
  std::uint64_t keyword_number(const char* keyword) {
    std::istringstream ls(next(keyword));
    std::string word;
    std::uint64_t value = 0;
    if (!(ls >> word >> value) || word != keyword || !(ls >> std::ws).eof()) {
      throw error(fmt::format("expected '{} <number>'", keyword));
    }
    return value;
  }

  FormatError error(const std::string& msg) const {
    return FormatError(Kind::kSyntax, fmt::format("line {}: {}", line_no_, msg));
  }

  bool at_end() {
    in_ >> std::ws;
    return in_.eof();
  }

 private:
  std::istream& in_;
  std::size_t line_no_ = 0;
};

}  // namespace

TopDag load_topdag(std::istream& in) {
  LineReader reader(in);
  const std::string header = reader.next("header");
  if (header.rfind("TOPDAG ", 0) != 0) throw FormatError(Kind::kSyntax, "missing TOPDAG header");
  if (header != "TOPDAG 1") throw FormatError(Kind::kVersion, fmt::format("unsupported version '{}'", header.substr(7)));

  const std::uint64_t n = reader.keyword_number("n");
  if (n == 0 || n > UINT32_MAX) throw reader.error("node count out of range");

  if (n == 1) {
    const std::string line = reader.next("rootlabel");
    if (line.rfind("rootlabel ", 0) != 0 || line.size() == 10) throw reader.error("expected 'rootlabel <label>'");
    LabelTable labels;
    const LabelId id = labels.intern(line.substr(10));
    if (!reader.at_end()) throw reader.error("trailing content");
    return TopDag::single_node(std::move(labels), id);
  }

  const std::uint64_t k = reader.keyword_number("labels");
  LabelTable labels;
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::string text = reader.next("label");
    if (text.empty()) throw reader.error("empty label");
    if (labels.intern(text) != i) throw reader.error(fmt::format("duplicate label '{}'", text));
  }

  const std::uint64_t m = reader.keyword_number("nodes");
  std::vector<TopDag::Node> nodes;
  nodes.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::istringstream ls(reader.next("node"));
    std::string tag;
    ls >> tag;
    TopDag::Node node;
    std::int64_t first = -1;
    std::int64_t second = -1;
    if (tag == "L") {
      ls >> first >> second;
    } else if (tag == "M") {
      std::string type;
      ls >> type >> first >> second;
      const auto mt = type.size() == 1 ? merge_type_from_char(type[0]) : std::nullopt;
      if (!mt) throw reader.error(fmt::format("unknown merge type '{}'", type));
      node.leaf = false;
      node.type = *mt;
    } else {
      throw reader.error(fmt::format("unknown node tag '{}'", tag));
    }
    if (ls.fail() || !(ls >> std::ws).eof() || first < 0 || second < 0 || first > UINT32_MAX || second > UINT32_MAX) {
      throw reader.error("malformed node line");
    }
    node.first = static_cast<std::uint32_t>(first);
    node.second = static_cast<std::uint32_t>(second);
    nodes.push_back(node);
  }

  const std::uint64_t root = reader.keyword_number("root");
  if (!reader.at_end()) throw reader.error("trailing content");
  if (root > UINT32_MAX) throw FormatError(Kind::kDanglingChild, "root id out of range");
  return TopDag::from_nodes(std::move(labels), std::move(nodes), static_cast<DagId>(root), static_cast<std::uint32_t>(n));
}

TopDag load_topdag_string(const std::string& text) {
  std::istringstream in(text);
  return load_topdag(in);
}

}  // namespace topdag
