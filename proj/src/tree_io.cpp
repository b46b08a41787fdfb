#include "topdag/tree_io.hpp"

#include <expat.h>

#include <fmt/format.h>

#include <limits>
#include <memory>
#include <vector>

namespace topdag {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }
bool is_label_char(char c) { return c != '(' && c != ')' && !is_space(c); }

}  // namespace

LabeledTree parse_tree(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty input", pos);

  TreeBuilder builder;
  std::vector<NodeId> open;  // nodes whose ')' is still pending
  do {
    skip_ws();
    if (pos == text.size()) {
      throw ParseError(fmt::format("unexpected end of input, {} unclosed node(s)", open.size()), pos);
    }
    if (text[pos] == '(') {
      ++pos;
      skip_ws();
      const std::size_t start = pos;
      while (pos < text.size() && is_label_char(text[pos])) ++pos;
      if (pos == start) throw ParseError("expected a label after '('", pos);
      const NodeId parent = open.empty() ? kNoNode : open.back();
      open.push_back(builder.add(parent, text.substr(start, pos - start)));
    } else if (text[pos] == ')' && !open.empty()) {
      ++pos;
      open.pop_back();
    } else {
      throw ParseError(fmt::format("unexpected character '{}'", text[pos]), pos);
    }
  } while (!open.empty());

  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after the root", pos);
  return std::move(builder).finish();
}

std::string serialize_tree(const LabeledTree& tree) {
  std::string out;
  const auto n = static_cast<NodeId>(tree.size());
  std::vector<NodeId> ends;  // exclusive preorder end of each open node
  for (NodeId x = 1; x <= n; ++x) {
    while (!ends.empty() && ends.back() <= x) {
      out += ')';
      ends.pop_back();
    }
    out += '(';
    out += tree.label_text(x);
    ends.push_back(x + tree.subtree_size(x));
  }
  out.append(ends.size(), ')');
  return out;
}

namespace {

struct XmlState {
  TreeBuilder builder;
  std::vector<NodeId> open;
  bool seen_root = false;
};

void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** /*attrs*/) {
  auto* st = static_cast<XmlState*>(user);
  const NodeId parent = st->open.empty() ? kNoNode : st->open.back();
  st->open.push_back(st->builder.add(parent, name));
  st->seen_root = true;
}

void XMLCALL on_end(void* user, const XML_Char* /*name*/) {
  static_cast<XmlState*>(user)->open.pop_back();
}

}  // namespace

LabeledTree ingest_xml(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
    throw ParseError("XML input too large", 0);
  }
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw std::bad_alloc();

  XmlState state;
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), on_start, on_end);
  if (XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()), XML_TRUE) == XML_STATUS_ERROR) {
    const auto code = XML_GetErrorCode(parser.get());
    throw ParseError(fmt::format("XML error at line {}, column {}: {}",
                                 XML_GetCurrentLineNumber(parser.get()),
                                 XML_GetCurrentColumnNumber(parser.get()), XML_ErrorString(code)),
                     static_cast<std::size_t>(XML_GetCurrentByteIndex(parser.get())));
  }
  if (!state.seen_root) throw ParseError("XML document has no root element", 0);
  return std::move(state.builder).finish();
}

}  // namespace topdag
