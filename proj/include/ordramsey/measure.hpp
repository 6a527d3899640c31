#pragma once

// Ordinal termination measures for growing trees.
//
// zeta_measure gives each leaf w^rank and each internal node the natural
// sum of its children. When every new node ranks strictly below the node it
// extends, replacing a leaf w^r by children w^r1 (+) ... with ri < r lowers
// the total, so a growing enumeration yields a strictly decreasing sequence
// of ordinals and must stop.
//
// zeta_pair_measure is the variant for binary trees whose nodes carry two
// ranks (f0, f1): a node with c children contributes w^(f0 (+) f1) * (2 - c)
// plus the sum of its children.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "ordramsey/enumeration.hpp"
#include "ordramsey/ordinal.hpp"
#include "ordramsey/tree.hpp"

namespace ordramsey {

class MissingRank : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct RankAssignment {
  std::map<Node, Ordinal> rank;
  Ordinal bound;

  /// Throws MissingRank.
  const Ordinal& at(const Node& node) const;

  /// Checks every rank < bound and the strict parent-to-child decrease over
  /// the nodes of `tree`. Returns a description of the first failure.
  std::optional<std::string> check(const Tree& tree) const;
};

/// Throws MissingRank when a leaf has no rank.
Ordinal zeta_measure(const Tree& tree, const RankAssignment& ranks);

enum class ZetaStatus { ok, not_decreasing, precondition_violated };

const char* to_string(ZetaStatus status);

struct ZetaCheck {
  ZetaStatus status = ZetaStatus::ok;
  std::size_t stage = 0;  // first offending stage (s+1 of the s -> s+1 step)
  Node node;              // offending node for precondition violations
  std::string detail;
};

/// Checks zeta(T[s+1]) < zeta(T[s]) at every stage that adds nodes; idle
/// stages are exempt. Before measuring, each new node must rank strictly
/// below the node it extends, otherwise precondition_violated is reported.
ZetaCheck zeta_decrease_check(const std::vector<const Tree*>& stages, const RankAssignment& ranks);

template <class Label>
ZetaCheck zeta_decrease_check(const MonotoneEnumeration<Label>& e, const RankAssignment& ranks) {
  std::vector<const Tree*> stages;
  stages.reserve(e.stage_count());
  for (std::size_t s = 0; s < e.stage_count(); ++s) stages.push_back(&e.stage(s));
  return zeta_decrease_check(stages, ranks);
}

struct PairRanks {
  Ordinal first;   // f0
  Ordinal second;  // f1
};

using PairRankMap = std::map<Node, PairRanks>;

/// Throws std::invalid_argument for a node with more than two children (or
/// a child index other than 0 and 1) and MissingRank for an unranked node.
Ordinal zeta_pair_measure(const Tree& tree, const PairRankMap& ranks);

/// w^(f0 (+) f1)(parent) > w^(f0 (+) f1)(child) * 2, evaluated literally.
bool pair_step_inequality(const PairRanks& parent, const PairRanks& child);

/// Rank discipline for a binary child: a 0-child lowers f0 and keeps f1,
/// a 1-child keeps f0 and lowers f1.
bool pair_child_ranks_ok(const PairRanks& parent, const PairRanks& child, std::uint32_t side);

/// The depth-`level` node whose comparable set (ancestors, itself, and
/// descendants) is largest, leftmost on ties. Throws std::out_of_range when
/// no node sits at that depth.
Node extendible_node(const Tree& tree, std::size_t level);

/// Size of the comparable set used by extendible_node.
std::size_t comparable_set_size(const Tree& tree, const Node& node);

}  // namespace ordramsey
