#include "ordramsey/enumeration.hpp"

namespace ordramsey {

const char* to_string(EnumerationClause clause) {
  switch (clause) {
    case EnumerationClause::root_stage:
      return "clause-1";
    case EnumerationClause::finite_stage:
      return "clause-2";
    case EnumerationClause::extends_terminal:
      return "clause-3";
    case EnumerationClause::bound:
      return "bound";
    case EnumerationClause::branching:
      return "branching";
  }
  return "?";
}

const char* to_string(RunStatus status) {
  switch (status) {
    case RunStatus::finished:
      return "finished";
    case RunStatus::fuel_exhausted:
      return "fuel-exhausted";
    case RunStatus::rejected:
      return "rejected";
  }
  return "?";
}

std::size_t bounded_tree_capacity(std::size_t bound, std::size_t branching) {
  std::size_t out = 1;
  for (std::size_t i = 0; i <= bound; ++i) {
    if (__builtin_mul_overflow(out, branching + 1, &out)) return SIZE_MAX;
  }
  return out;
}

}  // namespace ordramsey
