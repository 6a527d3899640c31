#include "ordramsey/measure.hpp"

#include <set>

namespace ordramsey {

const Ordinal& RankAssignment::at(const Node& node) const {
  auto it = rank.find(node);
  if (it == rank.end()) throw MissingRank("no rank for node " + format_node(node));
  return it->second;
}

std::optional<std::string> RankAssignment::check(const Tree& tree) const {
  for (const auto& node : tree.nodes()) {
    auto it = rank.find(node);
    if (it == rank.end()) return "no rank for node " + format_node(node);
    if (!(it->second < bound)) return "rank of " + format_node(node) + " is not below the bound";
    if (!node.empty()) {
      auto up = rank.find(parent_of(node));
      if (up != rank.end() && !(it->second < up->second)) {
        return "rank does not decrease from " + format_node(parent_of(node)) + " to " +
               format_node(node);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Nodes are visited deepest-first so every child is finished before its
// parent; std::set order puts descendants after ancestors, so walking it
// backwards does exactly that.
template <class LeafValue, class InnerValue>
Ordinal fold_tree(const Tree& tree, LeafValue leaf_value, InnerValue inner_value) {
  std::map<Node, Ordinal> value;
  const auto& nodes = tree.nodes();
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    const Node& node = *it;
    std::vector<const Ordinal*> kids;
    for (const auto& child : tree.children(node)) kids.push_back(&value.at(child));
    value.emplace(node, kids.empty() ? leaf_value(node) : inner_value(node, kids));
  }
  return value.at(Node{});
}

}  // namespace

Ordinal zeta_measure(const Tree& tree, const RankAssignment& ranks) {
  return fold_tree(
      tree, [&](const Node& node) { return omega_pow(ranks.at(node)); },
      [](const Node&, const std::vector<const Ordinal*>& kids) {
        Ordinal sum;
        for (const Ordinal* k : kids) sum = nat_add(sum, *k);
        return sum;
      });
}

const char* to_string(ZetaStatus status) {
  switch (status) {
    case ZetaStatus::ok:
      return "ok";
    case ZetaStatus::not_decreasing:
      return "not-decreasing";
    case ZetaStatus::precondition_violated:
      return "precondition-violated";
  }
  return "?";
}

ZetaCheck zeta_decrease_check(const std::vector<const Tree*>& stages, const RankAssignment& ranks) {
  if (stages.empty()) return {};
  Ordinal previous = zeta_measure(*stages.front(), ranks);
  for (std::size_t s = 1; s < stages.size(); ++s) {
    const Tree& before = *stages[s - 1];
    const Tree& after = *stages[s];
    if (after.size() == before.size()) continue;  // idle stage
    for (const auto& node : after.nodes()) {
      if (before.contains(node)) continue;
      auto own = ranks.rank.find(node);
      auto up = ranks.rank.find(parent_of(node));
      if (own == ranks.rank.end() || up == ranks.rank.end()) {
        return {ZetaStatus::precondition_violated, s, node, "missing rank"};
      }
      if (!(own->second < up->second)) {
        return {ZetaStatus::precondition_violated, s, node,
                "rank " + format(own->second) + " is not below the parent rank " +
                    format(up->second)};
      }
    }
    Ordinal next = zeta_measure(after, ranks);
    if (!(next < previous)) {
      return {ZetaStatus::not_decreasing, s, {},
              "zeta went from " + format(previous) + " to " + format(next)};
    }
    previous = std::move(next);
  }
  return {};
}

Ordinal zeta_pair_measure(const Tree& tree, const PairRankMap& ranks) {
  auto exponent = [&](const Node& node) {
    auto it = ranks.find(node);
    if (it == ranks.end()) throw MissingRank("no rank pair for node " + format_node(node));
    return nat_add(it->second.first, it->second.second);
  };
  for (const auto& node : tree.nodes()) {
    const auto kids = tree.children(node);
    if (kids.size() > 2) {
      throw std::invalid_argument("node " + format_node(node) + " has more than two children");
    }
    for (const auto& k : kids) {
      if (k.back() > 1) {
        throw std::invalid_argument("node " + format_node(k) + " is not a binary child");
      }
    }
  }
  return fold_tree(
      tree, [&](const Node& node) { return nat_mul_k(omega_pow(exponent(node)), 2); },
      [&](const Node& node, const std::vector<const Ordinal*>& kids) {
        Ordinal sum = nat_mul_k(omega_pow(exponent(node)), 2 - kids.size());
        for (const Ordinal* k : kids) sum = nat_add(sum, *k);
        return sum;
      });
}

bool pair_step_inequality(const PairRanks& parent, const PairRanks& child) {
  const Ordinal lhs = omega_pow(nat_add(parent.first, parent.second));
  const Ordinal rhs = nat_mul_k(omega_pow(nat_add(child.first, child.second)), 2);
  return rhs < lhs;
}

bool pair_child_ranks_ok(const PairRanks& parent, const PairRanks& child, std::uint32_t side) {
  if (side == 0) return child.first < parent.first && child.second == parent.second;
  if (side == 1) return child.first == parent.first && child.second < parent.second;
  return false;
}

std::size_t comparable_set_size(const Tree& tree, const Node& node) {
  return node.size() + 1 + tree.descendant_count(node);
}

Node extendible_node(const Tree& tree, std::size_t level) {
  const auto candidates = tree.at_depth(level);
  if (candidates.empty()) {
    throw std::out_of_range("no node at depth " + std::to_string(level));
  }
  const Node* best = &candidates.front();
  std::size_t best_size = comparable_set_size(tree, *best);
  for (const auto& c : candidates) {
    const std::size_t size = comparable_set_size(tree, c);
    if (size > best_size) {
      best = &c;
      best_size = size;
    }
  }
  return *best;
}

}  // namespace ordramsey
