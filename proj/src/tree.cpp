#include "ordramsey/tree.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace ordramsey {

bool is_prefix(const Node& prefix, const Node& node) {
  return prefix.size() <= node.size() && std::equal(prefix.begin(), prefix.end(), node.begin());
}

Node parent_of(const Node& node) {
  if (node.empty()) throw std::logic_error("the root has no parent");
  return Node(node.begin(), node.end() - 1);
}

std::string format_node(const Node& node) {
  if (node.empty()) return "<>";
  std::string out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(node[i]);
  }
  return out;
}

Node parse_node(std::string_view text) {
  if (text == "<>" || text == "root") return {};
  Node out;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = text.find('.', start);
    const std::string_view part =
        text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("bad node '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return out;
}

Tree::Tree() { nodes_.insert(Node{}); }

bool Tree::is_leaf(const Node& node) const {
  auto it = nodes_.find(node);
  if (it == nodes_.end()) return false;
  ++it;
  return it == nodes_.end() || !is_prefix(node, *it);
}

std::vector<Node> Tree::children(const Node& node) const {
  std::vector<Node> out;
  auto it = nodes_.upper_bound(node);
  for (; it != nodes_.end() && is_prefix(node, *it); ++it) {
    if (it->size() == node.size() + 1) out.push_back(*it);
  }
  return out;
}

std::size_t Tree::child_count(const Node& node) const { return children(node).size(); }

std::size_t Tree::descendant_count(const Node& node) const {
  std::size_t count = 0;
  for (auto it = nodes_.upper_bound(node); it != nodes_.end() && is_prefix(node, *it); ++it) {
    ++count;
  }
  return count;
}

std::vector<Node> Tree::leaves() const {
  std::vector<Node> out;
  for (auto it = nodes_.begin(); it != nodes_.end(); ++it) {
    auto next = std::next(it);
    if (next == nodes_.end() || !is_prefix(*it, *next)) out.push_back(*it);
  }
  return out;
}

std::vector<Node> Tree::at_depth(std::size_t depth) const {
  std::vector<Node> out;
  for (const auto& n : nodes_) {
    if (n.size() == depth) out.push_back(n);
  }
  return out;
}

std::size_t Tree::height() const {
  std::size_t h = 0;
  for (const auto& n : nodes_) h = std::max(h, n.size());
  return h;
}

void Tree::insert(const Node& node) {
  if (node.empty()) return;
  if (!contains(parent_of(node))) {
    throw std::logic_error("cannot insert " + format_node(node) + ": parent missing");
  }
  nodes_.insert(node);
}

}  // namespace ordramsey
