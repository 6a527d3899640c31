#pragma once

// Text form of a ranked enumeration:
//
//   bound=<ordinal>            (optional; defaults to one past the largest rank)
//   stage 0
//   add <> rank=<ordinal>
//   stage 1
//   add 0 rank=<ordinal>
//   add 1 rank=<ordinal>
//   ...
//
// Stages are numbered 0, 1, 2, ... with no gaps; an empty block is an idle
// stage. Nodes use format_node syntax ("<>" or "root" for the root).

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ordramsey/enumeration.hpp"
#include "ordramsey/measure.hpp"
#include "ordramsey/ordinal.hpp"

namespace ordramsey {

struct EnumerationLog {
  std::optional<Ordinal> bound;
  std::vector<std::vector<std::pair<Node, Ordinal>>> stages;
};

/// Throws std::invalid_argument or ParseError on malformed text.
EnumerationLog read_enumeration_log(std::istream& in);
void write_enumeration_log(std::ostream& out, const EnumerationLog& log);

/// Replays the stages; throws StepRejected on the first bad one.
MonotoneEnumeration<Ordinal> to_enumeration(const EnumerationLog& log);

/// Every logged rank, with the declared bound (or max rank + 1).
RankAssignment ranks_of(const EnumerationLog& log);

/// Inverse of to_enumeration/ranks_of for enumerations labelled by rank.
EnumerationLog to_log(const MonotoneEnumeration<Ordinal>& e, std::optional<Ordinal> bound);

}  // namespace ordramsey
