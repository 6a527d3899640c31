#pragma once

// Staged monotone enumerations of finitely branching trees.
//
// Stage 0 holds exactly the root. Each later stage adds finitely many
// nodes, and every node added at stage s+1 must extend a node that was
// terminal (a leaf) in T[s]; nodes added together may chain below the same
// leaf. Any addition set that breaks this is rejected, never repaired.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ordramsey/tree.hpp"

namespace ordramsey {

enum class EnumerationClause {
  root_stage,        // stage 0 is not exactly {root}
  finite_stage,      // a stage enumerates more nodes than the stage limit
  extends_terminal,  // an added node does not hang below a terminal node of T[s]
  bound,             // a node is longer than the length bound b
  branching,         // a node received more than d children
};

const char* to_string(EnumerationClause clause);

struct Rejection {
  EnumerationClause clause;
  std::size_t stage;
  Node node;
  std::string detail;
};

class StepRejected : public std::runtime_error {
 public:
  explicit StepRejected(Rejection r)
      : std::runtime_error("stage " + std::to_string(r.stage) + " rejected (" +
                           to_string(r.clause) + ") at " + format_node(r.node) + ": " + r.detail),
        rejection_(std::move(r)) {}
  const Rejection& rejection() const { return rejection_; }

 private:
  Rejection rejection_;
};

template <class Label = std::monostate>
class MonotoneEnumeration {
 public:
  using Addition = std::pair<Node, Label>;

  explicit MonotoneEnumeration(Label root_label = Label{},
                               std::size_t stage_limit = std::numeric_limits<std::size_t>::max())
      : stage_limit_(stage_limit) {
    stages_.push_back(std::make_shared<const Tree>());
    deltas_.push_back(std::make_shared<const std::vector<Node>>(1, Node{}));
    labels_.emplace(Node{}, std::move(root_label));
  }

  /// Number of stages recorded, counting stage 0.
  std::size_t stage_count() const { return stages_.size(); }
  const Tree& stage(std::size_t s) const { return *stages_.at(s); }
  const Tree& current() const { return *stages_.back(); }
  /// Nodes enumerated during stage s, in the order given.
  const std::vector<Node>& delta(std::size_t s) const { return *deltas_.at(s); }
  const Label& label(const Node& node) const { return labels_.at(node); }
  std::size_t stage_limit() const { return stage_limit_; }

  /// The first violated clause for enumerating `additions` as the next
  /// stage, or nullopt when the stage is acceptable.
  std::optional<Rejection> check_step(const std::vector<Addition>& additions) const {
    const std::size_t s = stages_.size();
    const Tree& tree = current();
    if (additions.size() > stage_limit_) {
      return Rejection{EnumerationClause::finite_stage, s,
                       additions.empty() ? Node{} : additions.front().first,
                       std::to_string(additions.size()) + " nodes exceed the stage limit " +
                           std::to_string(stage_limit_)};
    }
    std::set<Node> batch;
    for (const auto& [node, label] : additions) {
      if (tree.contains(node) || !batch.insert(node).second) {
        return Rejection{EnumerationClause::extends_terminal, s, node, "node already enumerated"};
      }
    }
    for (const auto& [node, label] : additions) {
      Node up = parent_of(node);
      while (!tree.contains(up)) {
        if (batch.count(up) == 0) {
          return Rejection{EnumerationClause::extends_terminal, s, node,
                           "parent " + format_node(up) + " is not enumerated"};
        }
        up = parent_of(up);
      }
      if (!tree.is_leaf(up)) {
        return Rejection{EnumerationClause::extends_terminal, s, node,
                         "extends " + format_node(up) + ", which is not terminal in T[" +
                             std::to_string(s - 1) + "]"};
      }
    }
    return std::nullopt;
  }

  /// A new enumeration with one more stage. Throws StepRejected.
  MonotoneEnumeration step(std::vector<Addition> additions) const& {
    return MonotoneEnumeration(*this).append(std::move(additions));
  }
  MonotoneEnumeration step(std::vector<Addition> additions) && {
    return std::move(*this).append(std::move(additions));
  }

 private:
  MonotoneEnumeration&& append(std::vector<Addition> additions) && {
    if (auto r = check_step(additions)) throw StepRejected(std::move(*r));
    MonotoneEnumeration& next = *this;
    Tree tree = current();
    std::vector<Node> delta;
    delta.reserve(additions.size());
    std::vector<std::size_t> order(additions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return additions[a].first.size() < additions[b].first.size();
    });
    for (std::size_t i : order) tree.insert(additions[i].first);
    for (auto& [node, label] : additions) {
      delta.push_back(node);
      next.labels_.emplace(node, std::move(label));
    }
    next.stages_.push_back(std::make_shared<const Tree>(std::move(tree)));
    next.deltas_.push_back(std::make_shared<const std::vector<Node>>(std::move(delta)));
    return std::move(next);
  }

  // Snapshots are immutable, so copies of an enumeration share them.
  std::vector<std::shared_ptr<const Tree>> stages_;
  std::vector<std::shared_ptr<const std::vector<Node>>> deltas_;
  std::map<Node, Label> labels_;
  std::size_t stage_limit_;
};

/// Builds an enumeration from per-stage node lists. lists[0] must be exactly
/// {root}; throws StepRejected on the first bad stage.
template <class Label>
MonotoneEnumeration<Label> enumeration_from_stages(
    std::vector<std::vector<typename MonotoneEnumeration<Label>::Addition>> stages) {
  if (stages.empty() || stages[0].size() != 1 || !stages[0][0].first.empty()) {
    throw StepRejected(Rejection{EnumerationClause::root_stage, 0,
                                 stages.empty() || stages[0].empty() ? Node{} : stages[0][0].first,
                                 "stage 0 must enumerate exactly the root"});
  }
  MonotoneEnumeration<Label> e(std::move(stages[0][0].second));
  for (std::size_t s = 1; s < stages.size(); ++s) e = std::move(e).step(std::move(stages[s]));
  return e;
}

/// First node (by stage, then enumeration order) longer than `bound`.
template <class Label>
std::optional<Node> check_bounded(const MonotoneEnumeration<Label>& e, std::size_t bound) {
  for (std::size_t s = 0; s < e.stage_count(); ++s) {
    for (const auto& node : e.delta(s)) {
      if (node.size() > bound) return node;
    }
  }
  return std::nullopt;
}

/// (d+1)^(b+1), saturating at SIZE_MAX. Every b-bounded tree that branches
/// at most d ways has fewer nodes than this.
std::size_t bounded_tree_capacity(std::size_t bound, std::size_t branching);

enum class RunStatus { finished, fuel_exhausted, rejected };

const char* to_string(RunStatus status);

template <class Label>
struct RunResult {
  RunStatus status;
  MonotoneEnumeration<Label> enumeration;
  std::optional<Rejection> rejection;
};

/// Returns the next stage's additions, or nullopt once the generator has
/// nothing more to enumerate. An empty vector is an idle stage.
template <class Label>
using StageGenerator = std::function<std::optional<std::vector<typename MonotoneEnumeration<Label>::Addition>>(
    const MonotoneEnumeration<Label>&)>;

/// Drives `gen` stage by stage, checking every stage against the definition
/// and against the length bound b and branching bound d. Finished means the
/// generator went quiet; FuelExhausted means it was still asking for stages
/// after `fuel` of them, which flags a generator that idles forever.
template <class Label>
RunResult<Label> run_to_finiteness(const StageGenerator<Label>& gen, std::size_t bound,
                                   std::size_t branching, std::size_t fuel,
                                   MonotoneEnumeration<Label> start = MonotoneEnumeration<Label>{}) {
  MonotoneEnumeration<Label> e = std::move(start);
  for (std::size_t used = 0;; ++used) {
    auto additions = gen(e);
    if (!additions) break;
    if (used == fuel) return {RunStatus::fuel_exhausted, std::move(e), std::nullopt};
    const std::size_t s = e.stage_count();
    if (auto r = e.check_step(*additions)) return {RunStatus::rejected, std::move(e), std::move(r)};
    for (const auto& [node, label] : *additions) {
      if (node.size() > bound) {
        return {RunStatus::rejected, std::move(e),
                Rejection{EnumerationClause::bound, s, node,
                          "length " + std::to_string(node.size()) + " exceeds bound " +
                              std::to_string(bound)}};
      }
    }
    MonotoneEnumeration<Label> next = e.step(std::move(*additions));  // keeps e for rejection
    for (const auto& node : next.delta(s)) {
      const Node up = parent_of(node);
      if (next.current().child_count(up) > branching) {
        return {RunStatus::rejected, std::move(e),
                Rejection{EnumerationClause::branching, s, node,
                          format_node(up) + " has more than " + std::to_string(branching) +
                              " children"}};
      }
    }
    e = std::move(next);
  }
  if (e.current().size() > bounded_tree_capacity(bound, branching)) {
    throw std::logic_error("bounded enumeration exceeded (d+1)^(b+1) nodes");
  }
  return {RunStatus::finished, std::move(e), std::nullopt};
}

/// Every leaf shorter than b receives d children at once, one stage per
/// level. Quiet when no leaf can grow.
template <class Label>
StageGenerator<Label> full_growth(std::size_t bound, std::size_t branching) {
  return [=](const MonotoneEnumeration<Label>& e)
             -> std::optional<std::vector<typename MonotoneEnumeration<Label>::Addition>> {
    std::vector<typename MonotoneEnumeration<Label>::Addition> out;
    for (const auto& leaf : e.current().leaves()) {
      if (leaf.size() >= bound) continue;
      for (std::size_t i = 0; i < branching; ++i) {
        Node child = leaf;
        child.push_back(static_cast<std::uint32_t>(i));
        out.emplace_back(std::move(child), Label{});
      }
    }
    if (out.empty()) return std::nullopt;
    return out;
  };
}

/// One fresh child under the deepest (leftmost) leaf per stage, up to length b.
template <class Label>
StageGenerator<Label> chain_growth(std::size_t bound) {
  return [=](const MonotoneEnumeration<Label>& e)
             -> std::optional<std::vector<typename MonotoneEnumeration<Label>::Addition>> {
    Node deepest;
    for (const auto& leaf : e.current().leaves())
      if (leaf.size() > deepest.size()) deepest = leaf;
    if (deepest.size() >= bound) return std::nullopt;
    deepest.push_back(0);
    return std::vector<typename MonotoneEnumeration<Label>::Addition>{{std::move(deepest), Label{}}};
  };
}

}  // namespace ordramsey
