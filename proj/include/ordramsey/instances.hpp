#pragma once

// Finite instances: 2-colorings of pairs, tournaments, linear orders and set
// families over the vertex set [0, n), with their checkers and the
// coloring <-> tournament <-> order correspondences.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ordramsey {

using Vertex = int;
/// Sorted, duplicate-free.
using VertexSet = std::vector<Vertex>;

/// Number of unordered pairs of [0, n).
constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Position of {x, y}, x < y, in the order (0,1),(0,2),...,(0,n-1),(1,2),...
constexpr std::size_t pair_index(int n, int x, int y) {
  return static_cast<std::size_t>(x) * static_cast<std::size_t>(2 * n - x - 1) / 2 +
         static_cast<std::size_t>(y - x - 1);
}

/// Bits in pair order. Shared storage for colorings and tournaments.
class PairBits {
 public:
  PairBits() = default;
  /// All pairs 0. Throws std::invalid_argument for n < 0.
  explicit PairBits(int n);
  /// Bit i of `code` is pair i. Requires pair_count(n) <= 64.
  static PairBits from_code(int n, std::uint64_t code);
  /// A string of '0'/'1' of length pair_count(n).
  static PairBits from_string(int n, std::string_view bits);

  int n() const { return n_; }
  bool bit(int x, int y) const;  // x != y, either order
  void set_bit(int x, int y, bool value);
  std::string to_string() const;
  const std::vector<std::uint8_t>& raw() const { return bits_; }

  friend bool operator==(const PairBits&, const PairBits&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// f : [n]^2 -> {0, 1}.
class PairColoring {
 public:
  PairColoring() = default;
  explicit PairColoring(PairBits bits) : bits_(std::move(bits)) {}
  static PairColoring constant(int n, int color);
  int n() const { return bits_.n(); }
  int color(int x, int y) const { return bits_.bit(x, y) ? 1 : 0; }
  void set_color(int x, int y, int c) { bits_.set_bit(x, y, c != 0); }
  const PairBits& bits() const { return bits_; }

  friend bool operator==(const PairColoring&, const PairColoring&) = default;

 private:
  PairBits bits_;
};

/// The 5-cycle coloring: color 1 iff |x - y| is 1 or 4.
PairColoring pentagon_coloring();

/// Exactly one of beats(a, b), beats(b, a) for a != b. The bit at (x, y),
/// x < y, is set iff x beats y.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(PairBits bits) : bits_(std::move(bits)) {}
  /// x beats y iff x < y.
  static Tournament natural_order(int n);
  int n() const { return bits_.n(); }
  bool beats(int a, int b) const { return a < b ? bits_.bit(a, b) : !bits_.bit(b, a); }
  /// Orients the pair so that `winner` beats `loser`.
  void orient(int winner, int loser) { bits_.set_bit(winner, loser, winner < loser); }
  const PairBits& bits() const { return bits_; }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  PairBits bits_;
};

/// ranking[x] is the L-position of x (the number of L-predecessors).
class LinearOrderInstance {
 public:
  LinearOrderInstance() = default;
  /// Throws std::invalid_argument unless `ranking` is a permutation of [0, n).
  explicit LinearOrderInstance(std::vector<int> ranking);
  static LinearOrderInstance identity(int n);
  int n() const { return static_cast<int>(ranking_.size()); }
  int rank(int x) const { return ranking_.at(static_cast<std::size_t>(x)); }
  bool less(int x, int y) const { return rank(x) < rank(y); }
  const std::vector<int>& ranking() const { return ranking_; }

  friend bool operator==(const LinearOrderInstance&, const LinearOrderInstance&) = default;

 private:
  std::vector<int> ranking_;
};

/// R_0, ..., R_{m-1} subsets of [0, n).
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int n) : n_(n) {}
  /// Throws std::invalid_argument when an element lies outside [0, n).
  void add(const VertexSet& set);
  int n() const { return n_; }
  std::size_t size() const { return member_.size(); }
  bool contains(std::size_t i, int x) const { return member_.at(i).at(static_cast<std::size_t>(x)) != 0; }
  VertexSet set(std::size_t i) const;

 private:
  int n_ = 0;
  std::vector<std::vector<std::uint8_t>> member_;
};

/// Pairs of H that disagree with the first pair's color. For |H| <= 1 the
/// set is homogeneous for color 0.
struct HomogeneityCheck {
  bool ok = true;
  int color = 0;
  std::optional<std::pair<int, int>> witness;  // first offending pair, lexicographic
};

HomogeneityCheck is_homogeneous(const PairColoring& f, const VertexSet& h);

/// nullopt when H is transitive; otherwise the first triple (a, b, c) in
/// lexicographic order of distinct elements with a->b, b->c and c->a.
std::optional<std::array<int, 3>> is_transitive(const Tournament& r, const VertexSet& h);

/// f(x, y) = 1 iff (R(x, y) <-> x < y). In pair order the bits coincide.
Tournament tournament_from_coloring(const PairColoring& f);
PairColoring coloring_from_tournament(const Tournament& r);

/// H is f-transitive iff the tournament of f is transitive on H; that is, no
/// x < y < z in H has colors (1, 1, 0) or (0, 0, 1) on (xy, yz, xz).
bool is_transitive_coloring(const PairColoring& f, const VertexSet& h);

/// f(x, y) = 1 iff (x < y <-> x <_L y).
PairColoring coloring_from_order(const LinearOrderInstance& l);
/// The unique L inducing f. Throws std::invalid_argument when f is not
/// transitive.
LinearOrderInstance order_from_transitive_coloring(const PairColoring& f);

/// The coloring of [|h|]^2 given by g(a, b) = f(h[a], h[b]).
PairColoring induced_coloring(const PairColoring& f, const VertexSet& h);
Tournament induced_tournament(const Tournament& r, const VertexSet& h);

/// True iff `inner` is a subset of `outer` (both sorted).
bool is_subset(const VertexSet& inner, const VertexSet& outer);
std::string format_set(const VertexSet& s);  // "a,b,c" or "-"
VertexSet parse_set(std::string_view text);  // inverse; sorts and rejects duplicates

// File formats. Coloring and tournament: `n=<int>` then one line of
// pair_count(n) bits in pair order. Order: `n=<int>` then the ranking as a
// space-separated permutation. Family: `n=<int> m=<int>` then m lines of n
// bits, bit x of line i set iff x is in R_i.
PairColoring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const PairColoring& f);
Tournament read_tournament(std::istream& in);
void write_tournament(std::ostream& out, const Tournament& r);
LinearOrderInstance read_order(std::istream& in);
void write_order(std::ostream& out, const LinearOrderInstance& l);
SetFamily read_family(std::istream& in);
void write_family(std::ostream& out, const SetFamily& f);

}  // namespace ordramsey
