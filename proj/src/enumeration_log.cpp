#include "ordramsey/enumeration_log.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>

#include "text_util.hpp"

namespace ordramsey {

EnumerationLog read_enumeration_log(std::istream& in) {
  EnumerationLog log;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("enumeration log line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = text::trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto words = text::tokens(text);
    if (words[0].substr(0, 6) == "bound=") {
      if (!log.stages.empty() || log.bound) fail("'bound=' must come once, before all stages");
      log.bound = parse_ordinal(text::split_keyed(text, {"bound"})[0]);
    } else if (words[0] == "stage") {
      std::size_t s = 0;
      if (words.size() != 2) fail("expected 'stage <s>'");
      auto [ptr, ec] = std::from_chars(words[1].data(), words[1].data() + words[1].size(), s);
      if (ec != std::errc() || ptr != words[1].data() + words[1].size()) fail("bad stage number");
      if (s != log.stages.size()) {
        fail("expected stage " + std::to_string(log.stages.size()) + ", got " + std::to_string(s));
      }
      log.stages.emplace_back();
    } else if (words[0] == "add") {
      if (log.stages.empty()) fail("'add' before any 'stage'");
      if (words.size() < 3) fail("expected 'add <node> rank=<ordinal>'");
      const Node node = parse_node(words[1]);
      const auto rest = text.substr(static_cast<std::size_t>(words[2].data() - text.data()));
      log.stages.back().emplace_back(node, parse_ordinal(text::split_keyed(rest, {"rank"})[0]));
    } else {
      fail("unknown directive '" + std::string(words[0]) + "'");
    }
  }
  return log;
}

void write_enumeration_log(std::ostream& out, const EnumerationLog& log) {
  if (log.bound) out << "bound=" << format(*log.bound) << '\n';
  for (std::size_t s = 0; s < log.stages.size(); ++s) {
    out << "stage " << s << '\n';
    for (const auto& [node, rank] : log.stages[s]) {
      out << "add " << format_node(node) << " rank=" << format(rank) << '\n';
    }
  }
}

MonotoneEnumeration<Ordinal> to_enumeration(const EnumerationLog& log) {
  return enumeration_from_stages<Ordinal>(log.stages);
}

RankAssignment ranks_of(const EnumerationLog& log) {
  RankAssignment ranks;
  Ordinal top;
  for (const auto& stage : log.stages) {
    for (const auto& [node, rank] : stage) {
      ranks.rank.insert_or_assign(node, rank);
      if (top < rank) top = rank;
    }
  }
  ranks.bound = log.bound ? *log.bound : std_add(top, Ordinal::natural(1));
  return ranks;
}

EnumerationLog to_log(const MonotoneEnumeration<Ordinal>& e, std::optional<Ordinal> bound) {
  EnumerationLog log;
  log.bound = std::move(bound);
  for (std::size_t s = 0; s < e.stage_count(); ++s) {
    auto& stage = log.stages.emplace_back();
    for (const auto& node : e.delta(s)) stage.emplace_back(node, e.label(node));
  }
  return log;
}

}  // namespace ordramsey
