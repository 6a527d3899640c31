#include "ordramsey/instances.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>

#include "text_util.hpp"

namespace ordramsey {

PairBits::PairBits(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  bits_.assign(pair_count(n), 0);
}

PairBits PairBits::from_code(int n, std::uint64_t code) {
  PairBits out(n);
  if (out.bits_.size() > 64) throw std::invalid_argument("more than 64 pairs in a code");
  for (std::size_t i = 0; i < out.bits_.size(); ++i) out.bits_[i] = (code >> i) & 1U;
  return out;
}

PairBits PairBits::from_string(int n, std::string_view bits) {
  PairBits out(n);
  if (bits.size() != out.bits_.size()) {
    throw std::invalid_argument("expected " + std::to_string(out.bits_.size()) + " pair bits, got " +
                                std::to_string(bits.size()));
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw std::invalid_argument("pair bits must be 0 or 1");
    out.bits_[i] = bits[i] == '1';
  }
  return out;
}

bool PairBits::bit(int x, int y) const {
  if (x > y) std::swap(x, y);
  return bits_[pair_index(n_, x, y)] != 0;
}

void PairBits::set_bit(int x, int y, bool value) {
  if (x == y || x < 0 || y < 0 || x >= n_ || y >= n_) throw std::out_of_range("bad pair");
  if (x > y) std::swap(x, y);
  bits_[pair_index(n_, x, y)] = value;
}

std::string PairBits::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = bits_[i] ? '1' : '0';
  return out;
}

PairColoring PairColoring::constant(int n, int color) {
  PairColoring f{PairBits(n)};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) f.set_color(x, y, color);
  return f;
}

PairColoring pentagon_coloring() {
  PairColoring f{PairBits(5)};
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) f.set_color(x, y, (y - x == 1 || y - x == 4) ? 1 : 0);
  return f;
}

Tournament Tournament::natural_order(int n) {
  Tournament r{PairBits(n)};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) r.orient(x, y);
  return r;
}

LinearOrderInstance::LinearOrderInstance(std::vector<int> ranking) : ranking_(std::move(ranking)) {
  std::vector<char> seen(ranking_.size(), 0);
  for (int v : ranking_) {
    if (v < 0 || static_cast<std::size_t>(v) >= ranking_.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("ranking is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

LinearOrderInstance LinearOrderInstance::identity(int n) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i;
  return LinearOrderInstance(std::move(r));
}

void SetFamily::add(const VertexSet& set) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n_), 0);
  for (int x : set) {
    if (x < 0 || x >= n_) throw std::invalid_argument("set element outside [0, n)");
    bits[static_cast<std::size_t>(x)] = 1;
  }
  member_.push_back(std::move(bits));
}

VertexSet SetFamily::set(std::size_t i) const {
  VertexSet out;
  for (int x = 0; x < n_; ++x)
    if (contains(i, x)) out.push_back(x);
  return out;
}

HomogeneityCheck is_homogeneous(const PairColoring& f, const VertexSet& h) {
  HomogeneityCheck out;
  if (h.size() < 2) return out;
  out.color = f.color(h[0], h[1]);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      if (f.color(h[i], h[j]) != out.color) {
        out.ok = false;
        out.witness = std::make_pair(h[i], h[j]);
        return out;
      }
    }
  }
  return out;
}

std::optional<std::array<int, 3>> is_transitive(const Tournament& r, const VertexSet& h) {
  // A tournament is transitive iff it has no 3-cycle.
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      for (std::size_t k = j + 1; k < h.size(); ++k) {
        const int a = h[i], b = h[j], c = h[k];
        const bool ab = r.beats(a, b), bc = r.beats(b, c), ac = r.beats(a, c);
        if (ab == bc && ab != ac) {
          return ab ? std::array<int, 3>{a, b, c} : std::array<int, 3>{a, c, b};
        }
      }
  return std::nullopt;
}

Tournament tournament_from_coloring(const PairColoring& f) { return Tournament(f.bits()); }
PairColoring coloring_from_tournament(const Tournament& r) { return PairColoring(r.bits()); }

bool is_transitive_coloring(const PairColoring& f, const VertexSet& h) {
  return !is_transitive(tournament_from_coloring(f), h).has_value();
}

PairColoring coloring_from_order(const LinearOrderInstance& l) {
  PairColoring f{PairBits(l.n())};
  for (int x = 0; x < l.n(); ++x)
    for (int y = x + 1; y < l.n(); ++y) f.set_color(x, y, l.less(x, y) ? 1 : 0);
  return f;
}

LinearOrderInstance order_from_transitive_coloring(const PairColoring& f) {
  const int n = f.n();
  VertexSet all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  if (!is_transitive_coloring(f, all)) throw std::invalid_argument("coloring is not transitive");
  // x <_L y iff x beats y in the tournament of f; the rank is the number of
  // vertices that beat x.
  const Tournament r = tournament_from_coloring(f);
  std::vector<int> ranking(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (y != x && r.beats(y, x)) ++ranking[static_cast<std::size_t>(x)];
  return LinearOrderInstance(std::move(ranking));
}

PairColoring induced_coloring(const PairColoring& f, const VertexSet& h) {
  const int m = static_cast<int>(h.size());
  PairColoring g{PairBits(m)};
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) g.set_color(a, b, f.color(h[static_cast<std::size_t>(a)], h[static_cast<std::size_t>(b)]));
  return g;
}

Tournament induced_tournament(const Tournament& r, const VertexSet& h) {
  return tournament_from_coloring(induced_coloring(coloring_from_tournament(r), h));
}

bool is_subset(const VertexSet& inner, const VertexSet& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

std::string format_set(const VertexSet& s) {
  if (s.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

namespace {

int parse_int(std::string_view t, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(t) + "'");
  }
  return v;
}

// Non-comment, non-blank lines.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    out.emplace_back(t);
  }
  return out;
}

int read_n(const std::vector<std::string>& lines) {
  if (lines.empty()) throw std::invalid_argument("missing 'n=' header");
  const int n = parse_int(text::split_keyed(lines[0], {"n"})[0], "vertex count");
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  return n;
}

PairBits read_pair_bits(std::istream& in) {
  const auto lines = content_lines(in);
  const int n = read_n(lines);
  if (lines.size() > 2) throw std::invalid_argument("trailing lines after the pair bits");
  return PairBits::from_string(n, lines.size() == 2 ? std::string_view(lines[1]) : std::string_view());
}

}  // namespace

VertexSet parse_set(std::string_view t) {
  t = text::trim(t);
  VertexSet out;
  if (t == "-" || t.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = t.find(',', start);
    out.push_back(parse_int(t.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), "vertex"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("duplicate vertex in set");
  }
  return out;
}

PairColoring read_coloring(std::istream& in) { return PairColoring(read_pair_bits(in)); }

void write_coloring(std::ostream& out, const PairColoring& f) {
  out << "n=" << f.n() << '\n' << f.bits().to_string() << '\n';
}

Tournament read_tournament(std::istream& in) { return Tournament(read_pair_bits(in)); }

void write_tournament(std::ostream& out, const Tournament& r) {
  out << "n=" << r.n() << '\n' << r.bits().to_string() << '\n';
}

LinearOrderInstance read_order(std::istream& in) {
  const auto lines = content_lines(in);
  const int n = read_n(lines);
  std::vector<int> ranking;
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (auto tok : text::tokens(lines[i])) ranking.push_back(parse_int(tok, "rank"));
  if (ranking.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("expected " + std::to_string(n) + " ranks");
  }
  return LinearOrderInstance(std::move(ranking));
}

void write_order(std::ostream& out, const LinearOrderInstance& l) {
  out << "n=" << l.n() << '\n';
  for (int x = 0; x < l.n(); ++x) out << (x ? " " : "") << l.rank(x);
  out << '\n';
}

SetFamily read_family(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw std::invalid_argument("missing 'n= m=' header");
  const auto head = text::split_keyed(lines[0], {"n", "m"});
  const int n = parse_int(head[0], "universe size");
  const int m = parse_int(head[1], "family size");
  if (n < 0 || m < 0 || lines.size() != static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("family: expected " + std::to_string(m) + " set lines");
  }
  SetFamily fam(n);
  for (int i = 0; i < m; ++i) {
    const std::string& row = lines[static_cast<std::size_t>(i) + 1];
    if (row.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("family: set line has wrong length");
    VertexSet s;
    for (int x = 0; x < n; ++x) {
      if (row[static_cast<std::size_t>(x)] == '1') s.push_back(x);
      else if (row[static_cast<std::size_t>(x)] != '0') throw std::invalid_argument("family: bits must be 0 or 1");
    }
    fam.add(s);
  }
  return fam;
}

void write_family(std::ostream& out, const SetFamily& f) {
  out << "n=" << f.n() << " m=" << f.size() << '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (int x = 0; x < f.n(); ++x) out << (f.contains(i, x) ? '1' : '0');
    out << '\n';
  }
}

}  // namespace ordramsey
