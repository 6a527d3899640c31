#pragma once

// Finite prefix-closed trees over integer sequences.

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ordramsey {

/// A node is the sequence of child indices from the root; the root is the
/// empty sequence.
using Node = std::vector<std::uint32_t>;

/// True iff `prefix` is an initial segment of `node` (a node is its own prefix).
bool is_prefix(const Node& prefix, const Node& node);

/// Node with the last index dropped. Precondition: !node.empty().
Node parent_of(const Node& node);

/// "<>" for the root, otherwise dot-separated indices such as "0.1.2".
std::string format_node(const Node& node);
/// Inverse of format_node; also accepts "root". Throws std::invalid_argument.
Node parse_node(std::string_view text);

class Tree {
 public:
  /// The one-node tree holding the root.
  Tree();

  bool contains(const Node& node) const { return nodes_.count(node) != 0; }
  /// A terminal node: present and without children.
  bool is_leaf(const Node& node) const;
  std::vector<Node> children(const Node& node) const;
  std::size_t child_count(const Node& node) const;
  /// Number of proper descendants of `node`.
  std::size_t descendant_count(const Node& node) const;
  std::vector<Node> leaves() const;
  std::vector<Node> at_depth(std::size_t depth) const;

  std::size_t size() const { return nodes_.size(); }
  /// Length of the longest node.
  std::size_t height() const;

  /// Lexicographic order, so every node precedes its descendants and
  /// siblings appear in index order.
  const std::set<Node>& nodes() const { return nodes_; }

  /// Throws std::logic_error unless the parent is already present.
  void insert(const Node& node);

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  std::set<Node> nodes_;
};

}  // namespace ordramsey
