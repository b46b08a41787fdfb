#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "topdag/labeled_tree.hpp"

namespace topdag {

/// Malformed tree text or XML. `offset` is a byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses `Tree := '(' Label Tree* ')'`. Whitespace between tokens is ignored.
LabeledTree parse_tree(std::string_view text);

/// Canonical parenthesized preorder form, no whitespace.
std::string serialize_tree(const LabeledTree& tree);

/// Element structure of an XML document; names become labels. Text,
/// attributes, comments and processing instructions are dropped.
LabeledTree ingest_xml(std::string_view text);

}  // namespace topdag
