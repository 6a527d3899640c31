#include "ordramsey/solvers.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "text_util.hpp"

namespace ordramsey {

CohResult coh_solve(const SetFamily& family, int target) {
  const int n = family.n();
  if (target < 0 || target > n) throw std::invalid_argument("coh target must lie in [0, n]");
  CohResult out;
  VertexSet cell(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) cell[static_cast<std::size_t>(x)] = x;
  int t = -1;
  for (std::size_t i = 0; i < family.size(); ++i) {
    VertexSet above;
    for (int x : cell)
      if (x > t) above.push_back(x);
    if (above.empty()) {
      if (!out.exhausted_prefix) out.exhausted_prefix = out.sides;
      out.sides.push_back(1);
      out.thresholds.push_back(t);
      continue;
    }
    if (static_cast<int>(out.cohesive.size()) < target) {
      out.cohesive.push_back(above.front());
      t = above.front();
    }
    std::size_t inside = 0;
    for (int x : above) inside += family.contains(i, x) ? 1 : 0;
    const int side = inside * 2 >= above.size() ? 1 : 0;
    out.sides.push_back(side);
    out.thresholds.push_back(t);
    VertexSet kept;
    for (int x : cell)
      if (family.contains(i, x) == (side == 1)) kept.push_back(x);
    cell = std::move(kept);
  }
  for (int x : cell) {
    if (static_cast<int>(out.cohesive.size()) >= target) break;
    if (x > t) out.cohesive.push_back(x);
  }
  return out;
}

const char* to_string(LimitClass c) {
  switch (c) {
    case LimitClass::a0:
      return "A0";
    case LimitClass::a1:
      return "A1";
    case LimitClass::undecided:
      return "undecided";
  }
  return "?";
}

int default_window(int n) { return (n + 2) / 3; }

std::vector<LimitClass> limit_classification(const Tournament& r, int window) {
  const int n = r.n();
  if (window < 0 || window > n) throw std::invalid_argument("window must lie in [0, n]");
  std::vector<LimitClass> out(static_cast<std::size_t>(n), LimitClass::undecided);
  for (int x = 0; x < n; ++x) {
    bool any = false, all_out = true, all_in = true;
    for (int y = std::max(n - window, x + 1); y < n; ++y) {
      any = true;
      if (r.beats(x, y)) all_in = false;
      else all_out = false;
    }
    if (any && all_out) out[static_cast<std::size_t>(x)] = LimitClass::a0;
    else if (any && all_in) out[static_cast<std::size_t>(x)] = LimitClass::a1;
  }
  return out;
}

const char* to_string(EmAction a) {
  switch (a) {
    case EmAction::added:
      return "added";
    case EmAction::free_added:
      return "free-added";
    case EmAction::skipped:
      return "skipped";
  }
  return "?";
}

bool fits_minimal_interval(const Tournament& r, const VertexSet& sigma, int x) {
  for (int p : sigma) {
    if (p == x || !r.beats(p, x)) continue;
    for (int s : sigma)
      if (s != x && s != p && r.beats(x, s) && !r.beats(p, s)) return false;
  }
  return true;
}

EmResult em_solve(const Tournament& r, int window) {
  const auto cls = limit_classification(r, window);
  EmResult out;
  VertexSet reservoir(static_cast<std::size_t>(r.n()));
  for (int x = 0; x < r.n(); ++x) reservoir[static_cast<std::size_t>(x)] = x;
  std::size_t head = 0;
  while (head < reservoir.size()) {
    const int x = reservoir[head++];
    const LimitClass c = cls[static_cast<std::size_t>(x)];
    bool beats_all = true, beaten_by_all = true;
    for (std::size_t j = head; j < reservoir.size(); ++j) {
      if (r.beats(x, reservoir[j])) beaten_by_all = false;
      else beats_all = false;
    }
    EmAction action = EmAction::skipped;
    if (c != LimitClass::undecided) {
      action = EmAction::added;
    } else if (beats_all || beaten_by_all) {
      action = EmAction::free_added;
    }
    if (action != EmAction::skipped && !fits_minimal_interval(r, out.transitive, x)) {
      action = EmAction::skipped;
    }
    out.steps.push_back({x, c, action});
    if (action == EmAction::skipped) continue;
    out.transitive.insert(std::upper_bound(out.transitive.begin(), out.transitive.end(), x), x);
    if (action == EmAction::added) {
      const bool keep_beaten = c == LimitClass::a0;
      VertexSet rest;
      for (std::size_t j = head; j < reservoir.size(); ++j)
        if (r.beats(x, reservoir[j]) == keep_beaten) rest.push_back(reservoir[j]);
      reservoir = std::move(rest);
      head = 0;
    }
  }
  return out;
}

const char* to_string(Direction d) { return d == Direction::ascending ? "ascending" : "descending"; }

AdsResult ads_solve(const LinearOrderInstance& l) {
  const int n = l.n();
  AdsResult out;
  out.upper_count = 0;
  VertexSet up, down;
  for (int x = 0; x < n; ++x) {
    if (l.rank(x) * 2 >= n) ++out.upper_count;
    if (up.empty() || l.less(up.back(), x)) up.push_back(x);
    if (down.empty() || l.less(x, down.back())) down.push_back(x);
  }
  if (down.size() > up.size()) {
    out.direction = Direction::descending;
    out.sequence = std::move(down);
  } else {
    out.direction = Direction::ascending;
    out.sequence = std::move(up);
  }
  return out;
}

SolverTrace rt22_solve(const PairColoring& f, std::optional<int> window) {
  const int n = f.n();
  if (n < 1) throw std::invalid_argument("rt22_solve needs n >= 1");
  SolverTrace t;
  t.n = n;
  t.window = window;
  t.coloring = f;

  SetFamily family(n);
  for (int x = 0; x < n; ++x) {
    VertexSet rx;
    for (int y = 0; y < n; ++y)
      if (y != x && f.color(x, y) == 1) rx.push_back(y);
    family.add(rx);
  }
  CohResult coh = coh_solve(family, n);
  t.cohesive = coh.cohesive;
  t.sides = std::move(coh.sides);
  t.thresholds = std::move(coh.thresholds);

  const VertexSet& g0 = t.cohesive;
  const int m = static_cast<int>(g0.size());
  const PairColoring g = induced_coloring(f, g0);
  const int w = window ? std::min(*window, m) : default_window(m);
  EmResult em = em_solve(tournament_from_coloring(g), std::max(w, 0));
  t.em_steps = std::move(em.steps);
  for (int a : em.transitive) t.transitive.push_back(g0[static_cast<std::size_t>(a)]);

  const VertexSet& g1 = em.transitive;  // indices into g0
  const LinearOrderInstance order = order_from_transitive_coloring(induced_coloring(g, g1));
  const AdsResult ads = ads_solve(order);
  t.direction = ads.direction;
  for (int b : ads.sequence) {
    t.monotone.push_back(g0[static_cast<std::size_t>(g1[static_cast<std::size_t>(b)])]);
  }
  t.final_set = t.monotone;
  t.color = t.direction == Direction::ascending ? 1 : 0;
  return t;
}

const char* to_string(TraceStage s) {
  switch (s) {
    case TraceStage::cohesive:
      return "cohesive";
    case TraceStage::transitive:
      return "transitive";
    case TraceStage::monotone:
      return "monotone";
    case TraceStage::final_set:
      return "final";
  }
  return "?";
}

namespace {

bool well_formed_set(const VertexSet& s, int n) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n) return false;
    if (i > 0 && s[i - 1] >= s[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<TraceFailure> verify_trace(const SolverTrace& t, const PairColoring& f) {
  const int n = f.n();
  using S = TraceStage;
  if (t.n != n) return TraceFailure{S::cohesive, "trace is for n=" + std::to_string(t.n)};
  if (!well_formed_set(t.cohesive, n)) return TraceFailure{S::cohesive, "not a sorted subset of [0, n)"};
  if (t.sides.size() != static_cast<std::size_t>(n) || t.thresholds.size() != t.sides.size()) {
    return TraceFailure{S::cohesive, "expected one side and one threshold per vertex"};
  }
  for (int i = 0; i < n; ++i) {
    const int side = t.sides[static_cast<std::size_t>(i)];
    if (side != 0 && side != 1) return TraceFailure{S::cohesive, "side is not 0 or 1"};
    for (int c : t.cohesive) {
      if (c <= t.thresholds[static_cast<std::size_t>(i)]) continue;
      const bool in_ri = c != i && f.color(i, c) == 1;
      if (in_ri != (side == 1)) {
        return TraceFailure{S::cohesive, std::to_string(c) + " is on the wrong side of R_" + std::to_string(i)};
      }
    }
  }

  if (!well_formed_set(t.transitive, n) || !is_subset(t.transitive, t.cohesive)) {
    return TraceFailure{S::transitive, "not a subset of the cohesive set"};
  }
  if (auto w = is_transitive(tournament_from_coloring(f), t.transitive)) {
    return TraceFailure{S::transitive, "cycle " + std::to_string((*w)[0]) + "," + std::to_string((*w)[1]) +
                                           "," + std::to_string((*w)[2])};
  }

  if (!well_formed_set(t.monotone, n) || !is_subset(t.monotone, t.transitive)) {
    return TraceFailure{S::monotone, "not a subset of the transitive set"};
  }
  const int want = t.direction == Direction::ascending ? 1 : 0;
  for (std::size_t i = 0; i < t.monotone.size(); ++i)
    for (std::size_t j = i + 1; j < t.monotone.size(); ++j)
      if (f.color(t.monotone[i], t.monotone[j]) != want) {
        return TraceFailure{S::monotone, "pair " + std::to_string(t.monotone[i]) + "," +
                                             std::to_string(t.monotone[j]) + " is not " + to_string(t.direction)};
      }

  if (!well_formed_set(t.final_set, n) || !is_subset(t.final_set, t.monotone)) {
    return TraceFailure{S::final_set, "not a subset of the monotone set"};
  }
  const auto h = is_homogeneous(f, t.final_set);
  if (!h.ok) {
    return TraceFailure{S::final_set, "pair " + std::to_string(h.witness->first) + "," +
                                          std::to_string(h.witness->second) + " breaks homogeneity"};
  }
  if (t.final_set.size() >= 2 && h.color != t.color) {
    return TraceFailure{S::final_set, "homogeneous for color " + std::to_string(h.color) + ", not " +
                                          std::to_string(t.color)};
  }
  return std::nullopt;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

int to_int(std::string_view t) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw std::invalid_argument("trace: bad integer '" + std::string(t) + "'");
  }
  return v;
}

}  // namespace

void write_trace(std::ostream& out, const SolverTrace& t) {
  out << "trace n=" << t.n << " window=" << (t.window ? std::to_string(*t.window) : "auto") << '\n';
  out << "coloring " << t.coloring.bits().to_string() << '\n';
  out << "cohesive " << format_set(t.cohesive) << '\n';
  out << "sides " << join_ints(t.sides) << '\n';
  out << "thresholds " << join_ints(t.thresholds) << '\n';
  out << "transitive " << format_set(t.transitive) << '\n';
  out << "monotone " << to_string(t.direction) << ' ' << format_set(t.monotone) << '\n';
  out << "final color=" << t.color << ' ' << format_set(t.final_set) << '\n';
}

SolverTrace read_trace(std::istream& in) {
  SolverTrace t;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    const auto s = text::trim(line);
    if (!s.empty() && s.front() != '#') lines.emplace_back(s);
  }
  const char* keys[] = {"trace", "coloring", "cohesive", "sides", "thresholds", "transitive", "monotone", "final"};
  if (lines.size() != std::size(keys)) throw std::invalid_argument("trace: expected 8 lines");
  std::vector<std::vector<std::string_view>> words;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    words.push_back(text::tokens(lines[i]));
    if (words.back().front() != keys[i]) {
      throw std::invalid_argument(std::string("trace: line ") + std::to_string(i + 1) + " must start with '" +
                                  keys[i] + "'");
    }
  }
  auto arg = [&](std::size_t i, std::size_t j) -> std::string_view {
    if (j >= words[i].size()) return "";
    return words[i][j];
  };
  if (words[0].size() != 3) throw std::invalid_argument("trace: bad header");
  const auto head = text::split_keyed(std::string_view(lines[0]).substr(5), {"n", "window"});
  t.n = to_int(head[0]);
  if (head[1] != "auto") t.window = to_int(head[1]);
  t.coloring = PairColoring(PairBits::from_string(t.n, arg(1, 1)));
  t.cohesive = parse_set(arg(2, 1));
  for (std::size_t j = 1; j < words[3].size(); ++j) t.sides.push_back(to_int(words[3][j]));
  for (std::size_t j = 1; j < words[4].size(); ++j) t.thresholds.push_back(to_int(words[4][j]));
  t.transitive = parse_set(arg(5, 1));
  if (arg(6, 1) == "ascending") t.direction = Direction::ascending;
  else if (arg(6, 1) == "descending") t.direction = Direction::descending;
  else throw std::invalid_argument("trace: direction must be ascending or descending");
  t.monotone = parse_set(arg(6, 2));
  t.color = to_int(text::split_keyed(arg(7, 1), {"color"})[0]);
  t.final_set = parse_set(arg(7, 2));
  return t;
}

std::vector<SolverTrace> read_traces(std::istream& in) {
  std::vector<std::string> blocks;
  std::string line;
  while (std::getline(in, line)) {
    const auto s = text::trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (s.substr(0, 6) == "trace " || blocks.empty()) blocks.emplace_back();
    blocks.back().append(s).push_back('\n');
  }
  std::vector<SolverTrace> out;
  for (const auto& b : blocks) {
    std::istringstream block(b);
    out.push_back(read_trace(block));
  }
  return out;
}

}  // namespace ordramsey
