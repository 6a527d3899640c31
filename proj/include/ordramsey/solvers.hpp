#pragma once

// Greedy finite-scale solvers for COH, EM, ADS and the composed RT(2,2)
// pipeline COH -> EM -> ADS. Outputs are always valid; their size is only
// as good as the greedy run.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ordramsey/instances.hpp"

namespace ordramsey {

// ---- cohesiveness ----

struct CohResult {
  VertexSet cohesive;
  std::vector<int> sides;       // sides[i] == 1: C above thresholds[i] lies in R_i
  std::vector<int> thresholds;  // -1 means "no threshold"
  /// Sides chosen before the first set that found no element above the
  /// current threshold, if that ever happened.
  std::optional<std::vector<int>> exhausted_prefix;
};

/// Mathias-style greedy. Walk the sets in order, keeping a reservoir X (the
/// current cell R_sigma) and a threshold t. At set i, commit the least
/// element of X above t to C while |C| < target and make it the new
/// threshold; then keep whichever side of R_i holds more of X above the
/// previous threshold (ties keep R_i). Finally top C up from X above t.
/// For every i, each c in C with c > thresholds[i] lies in R_i iff
/// sides[i] == 1. Throws std::invalid_argument when target > n.
CohResult coh_solve(const SetFamily& family, int target);

// ---- Erdos-Moser ----

enum class LimitClass { a0, a1, undecided };

const char* to_string(LimitClass c);

/// Default tail window ceil(n / 3).
int default_window(int n);

/// x is in A0 iff x beats every y > x of the window [n - w, n), and in A1
/// iff every such y beats x; with no such y, x is undecided. Throws
/// std::invalid_argument when w is outside [0, n].
std::vector<LimitClass> limit_classification(const Tournament& r, int window);

enum class EmAction { added, free_added, skipped };

const char* to_string(EmAction a);

struct EmStep {
  int vertex;
  LimitClass cls;
  EmAction action;
};

struct EmResult {
  VertexSet transitive;
  std::vector<EmStep> steps;
};

/// True iff every element of `sigma` that beats x beats every element of
/// `sigma` that x beats, that is, x sits in a minimal interval of sigma.
bool fits_minimal_interval(const Tournament& r, const VertexSet& sigma, int x);

/// Greedy valid-node construction. Repeatedly take the least vertex x left
/// in the reservoir. An A0 vertex is added and the reservoir shrinks to the
/// vertices x beats; A1 symmetrically. An undecided vertex is added only
/// when the rest of the reservoir already lies on one side of it, otherwise
/// it is skipped. Every addition is checked with fits_minimal_interval.
EmResult em_solve(const Tournament& r, int window);

// ---- ascending / descending sequences ----

enum class Direction { ascending, descending };

const char* to_string(Direction d);

struct AdsResult {
  Direction direction = Direction::ascending;
  VertexSet sequence;  // in increasing natural order
  /// Size of V, the x with at least n/2 L-predecessors (the finite stand-in
  /// for the w* part). U is the rest.
  int upper_count = 0;
};

/// One pass in natural order grows two first-fit chains: sigma takes x when
/// x lies L-above its last element, tau when x lies L-below its last
/// element. Returns the longer, ties ascending. For n >= 2 the result has
/// length at least 2, since 0 and 1 always share a chain.
AdsResult ads_solve(const LinearOrderInstance& l);

// ---- RT(2,2) ----

struct SolverTrace {
  int n = 0;
  std::optional<int> window;  // nullopt: default window on the cohesive set
  PairColoring coloring;
  // Cohesive stage, over the family R_x = { y != x : f(x, y) = 1 }.
  VertexSet cohesive;
  std::vector<int> sides;
  std::vector<int> thresholds;
  // Transitive stage (original vertex ids) and the steps that built it.
  VertexSet transitive;
  std::vector<EmStep> em_steps;
  // Monotone stage.
  Direction direction = Direction::ascending;
  VertexSet monotone;
  // Final homogeneous set.
  VertexSet final_set;
  int color = 0;
};

/// COH on R_x, then EM on the coloring induced on the cohesive set, then
/// ADS on the order that the transitive set induces, mapped back to the
/// original vertices: ascending gives color 1 and descending color 0.
/// Throws std::invalid_argument for n < 1.
SolverTrace rt22_solve(const PairColoring& f, std::optional<int> window = std::nullopt);

enum class TraceStage { cohesive, transitive, monotone, final_set };

const char* to_string(TraceStage s);

struct TraceFailure {
  TraceStage stage;
  std::string reason;
};

/// Re-checks every stage from scratch against f: inclusion into the previous
/// stage and the stage's own property.
std::optional<TraceFailure> verify_trace(const SolverTrace& t, const PairColoring& f);

// Trace text format, one field per line, sets as "a,b,c" or "-":
//   trace n=<n> window=<w|auto>
//   coloring <pair bits>
//   cohesive <set>
//   sides <s0 s1 ...>
//   thresholds <t0 t1 ...>
//   transitive <set>
//   monotone ascending|descending <set>
//   final color=<c> <set>
// The EM steps are not stored; they do not take part in verification.
void write_trace(std::ostream& out, const SolverTrace& t);
/// Throws std::invalid_argument on malformed text.
SolverTrace read_trace(std::istream& in);

/// Several traces back to back, each starting at its `trace` line.
std::vector<SolverTrace> read_traces(std::istream& in);

}  // namespace ordramsey
