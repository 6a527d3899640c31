#pragma once

// Finite certificates of ordinal descent, and the combiner that merges k
// independently decreasing streams into a single decreasing sequence.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordramsey/ordinal.hpp"

namespace ordramsey {

/// A candidate descent: every value must lie below `bound` and the values
/// must strictly decrease.
struct DescentTrace {
  OrdinalBound bound;
  std::vector<Ordinal> values;
};

enum class DescentViolationKind { bound, not_strictly_decreasing };

struct DescentViolation {
  std::size_t index;
  DescentViolationKind kind;

  friend bool operator==(const DescentViolation&, const DescentViolation&) = default;
};

/// First offending position, or nullopt when the trace is a valid descent.
std::optional<DescentViolation> validate_descent(const DescentTrace& trace);

const char* to_string(DescentViolationKind kind);

struct StreamEvent {
  std::uint64_t time;
  std::size_t stream;
  Ordinal value;
};

class MalformedLog : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Emissions of k streams, each of which counts down below `bound`.
/// A well-formed log has strictly increasing times, streams in [0, k), and
/// per-stream values that strictly decrease below `bound`.
struct StreamEventLog {
  std::size_t streams = 0;
  Ordinal bound;
  std::vector<StreamEvent> events;
};

/// Description of the first invariant violation, if any.
std::optional<std::string> check_log(const StreamEventLog& log);

/// Last value emitted by `stream` at a time <= `time`, or the bound if the
/// stream has not spoken yet. Throws std::out_of_range for stream >= k.
Ordinal residual(const StreamEventLog& log, std::size_t stream, std::uint64_t time);

/// One output per event: the natural sum of all k residuals right after the
/// event. The result descends strictly below nat_mul_k(bound, k), because
/// each event lowers exactly one residual. Throws MalformedLog.
DescentTrace gamma_combine(const StreamEventLog& log);

// Log text format:
//   k=<int> bound=<ordinal>
//   t=<int> e=<int> v=<ordinal>      (one per event)
// Blank lines and lines starting with '#' are skipped.
StreamEventLog read_event_log(std::istream& in);
void write_event_log(std::ostream& out, const StreamEventLog& log);

// Trace text format: `bound=<ordinal or e0>` followed by one ordinal per line.
DescentTrace read_descent_trace(std::istream& in);
void write_descent_trace(std::ostream& out, const DescentTrace& trace);

}  // namespace ordramsey
