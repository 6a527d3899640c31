#include "ordramsey/descent.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include "text_util.hpp"

namespace ordramsey {

std::optional<DescentViolation> validate_descent(const DescentTrace& trace) {
  for (std::size_t i = 0; i < trace.values.size(); ++i) {
    if (!trace.bound.admits(trace.values[i])) {
      return DescentViolation{i, DescentViolationKind::bound};
    }
    if (i > 0 && !(trace.values[i] < trace.values[i - 1])) {
      return DescentViolation{i, DescentViolationKind::not_strictly_decreasing};
    }
  }
  return std::nullopt;
}

const char* to_string(DescentViolationKind kind) {
  switch (kind) {
    case DescentViolationKind::bound:
      return "bound";
    case DescentViolationKind::not_strictly_decreasing:
      return "not-strictly-decreasing";
  }
  return "?";
}

std::optional<std::string> check_log(const StreamEventLog& log) {
  std::vector<std::optional<Ordinal>> last(log.streams);
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const auto& ev = log.events[i];
    const std::string where = "event " + std::to_string(i) + ": ";
    if (i > 0 && ev.time <= log.events[i - 1].time) {
      return where + "times must strictly increase";
    }
    if (ev.stream >= log.streams) {
      return where + "stream " + std::to_string(ev.stream) + " out of range";
    }
    if (!(ev.value < log.bound)) return where + "value not below the bound";
    auto& prev = last[ev.stream];
    if (prev && !(ev.value < *prev)) return where + "stream does not strictly decrease";
    prev = ev.value;
  }
  return std::nullopt;
}

Ordinal residual(const StreamEventLog& log, std::size_t stream, std::uint64_t time) {
  if (stream >= log.streams) throw std::out_of_range("stream index out of range");
  const Ordinal* found = &log.bound;
  for (const auto& ev : log.events) {
    if (ev.time > time) break;
    if (ev.stream == stream) found = &ev.value;
  }
  return *found;
}

DescentTrace gamma_combine(const StreamEventLog& log) {
  if (auto err = check_log(log)) throw MalformedLog(*err);
  DescentTrace out{nat_mul_k(log.bound, log.streams), {}};
  out.values.reserve(log.events.size());
  std::vector<Ordinal> current(log.streams, log.bound);
  for (const auto& ev : log.events) {
    current[ev.stream] = ev.value;
    Ordinal sum;
    for (const auto& r : current) sum = nat_add(sum, r);
    out.values.push_back(std::move(sum));
  }
  return out;
}

namespace {

std::uint64_t parse_u64(std::string_view s, const std::string& what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw std::invalid_argument("bad " + what + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

StreamEventLog read_event_log(std::istream& in) {
  StreamEventLog log;
  bool have_header = false;
  std::string line;
  while (std::getline(in, line)) {
    const auto text = text::trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!have_header) {
      // k=<int> bound=<ordinal>
      const auto fields = text::split_keyed(text, {"k", "bound"});
      log.streams = parse_u64(fields[0], "k");
      log.bound = parse_ordinal(fields[1]);
      have_header = true;
      continue;
    }
    const auto fields = text::split_keyed(text, {"t", "e", "v"});
    log.events.push_back(StreamEvent{parse_u64(fields[0], "time"),
                                     static_cast<std::size_t>(parse_u64(fields[1], "stream")),
                                     parse_ordinal(fields[2])});
  }
  if (!have_header) throw std::invalid_argument("event log: missing 'k=... bound=...' header");
  return log;
}

void write_event_log(std::ostream& out, const StreamEventLog& log) {
  out << "k=" << log.streams << " bound=" << format(log.bound) << '\n';
  for (const auto& ev : log.events) {
    out << "t=" << ev.time << " e=" << ev.stream << " v=" << format(ev.value) << '\n';
  }
}

DescentTrace read_descent_trace(std::istream& in) {
  std::optional<OrdinalBound> bound;
  std::vector<Ordinal> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto text = text::trim(line);
    if (text.empty() || text.front() == '#') continue;
    if (!bound) {
      bound = parse_bound(text::split_keyed(text, {"bound"})[0]);
      continue;
    }
    values.push_back(parse_ordinal(text));
  }
  if (!bound) throw std::invalid_argument("descent trace: missing 'bound=' header");
  return DescentTrace{*bound, std::move(values)};
}

void write_descent_trace(std::ostream& out, const DescentTrace& trace) {
  out << "bound=" << format(trace.bound) << '\n';
  for (const auto& v : trace.values) out << format(v) << '\n';
}

}  // namespace ordramsey
