#pragma once

// Sweeps over instance spaces, and the reports they produce.
//
// A sweep runs the solver for its kind on every instance (exhaustive) or on
// `count` seeded samples, and checks the output from scratch:
//   coloring    rt22_solve, verify_trace + is_homogeneous
//   tournament  em_solve, is_transitive
//   order       ads_solve, monotone in both orders
//   family      coh_solve, the per-set threshold condition
// When an exact optimum is available (brute force up to `brute_limit`
// vertices; exact longest monotone subsequence for orders) a valid row must
// also not exceed it.
//
// Sample i is generate(kind, n, s_i) where s_i is the i-th output of
// SplitMix64(seed), so `gen` reproduces any sampled instance.
//
// TSV columns, tab separated, one header row:
//   index kind n instance solver_size optimum valid
// instance is the pair bits (coloring, tournament), the comma-separated
// ranking (order) or the membership rows joined by '/' (family); an empty
// value is "-". optimum is "-" when not computed; valid is 1 or 0.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordramsey/random.hpp"
#include "ordramsey/solvers.hpp"

namespace ordramsey {

struct SweepConfig {
  InstanceKind kind = InstanceKind::coloring;
  int n = 1;
  bool exhaustive = true;
  std::uint64_t count = 0;  // samples
  std::uint64_t seed = 0;
  std::optional<int> window;
  std::optional<int> target;  // coh target, default n
  int brute_limit = 10;
  bool keep_rows = true;  // aggregates are kept either way
};

struct InstanceResult {
  std::uint64_t index = 0;
  std::string instance;
  int solver_size = 0;
  std::optional<int> optimum;
  bool valid = true;
  std::string detail;               // solver output, for the trace format
  std::optional<SolverTrace> trace;  // colorings only
};

struct Report {
  InstanceKind kind = InstanceKind::coloring;
  int n = 0;
  bool exhaustive = true;
  std::optional<std::uint64_t> seed;
  std::optional<int> window;
  std::vector<InstanceResult> rows;
  std::uint64_t instances = 0;
  std::uint64_t valid = 0;
  std::uint64_t invalid = 0;
  std::map<int, std::uint64_t> size_histogram;
  double wall_seconds = 0;  // never emitted on stdout

  /// Records a result in the aggregates (and in rows when keep).
  void add(InstanceResult r, bool keep = true);
};

/// Throws std::invalid_argument for n < 1 or an exhaustive space over the
/// limit: pair_count(n) <= 28 for colorings, tournaments and orders, n*n <=
/// 28 for families.
Report sweep(const SweepConfig& config);

/// Number of instances an exhaustive sweep visits.
std::uint64_t exhaustive_size(InstanceKind kind, int n);

enum class ReportFormat { summary, trace, tsv };

ReportFormat parse_report_format(std::string_view name);

std::string report_emit(const Report& r, ReportFormat format);

/// Reads rows back from the tsv format and recomputes the aggregates.
Report parse_tsv(std::string_view tsv);

/// The summary without its first (configuration) line.
std::string summary_counts(const Report& r);

/// Per-kind evaluation of single instances, as used by sweep.
InstanceResult evaluate(const PairColoring& f, const SweepConfig& c);
InstanceResult evaluate(const Tournament& r, const SweepConfig& c);
InstanceResult evaluate(const LinearOrderInstance& l, const SweepConfig& c);
InstanceResult evaluate(const SetFamily& f, const SweepConfig& c);

/// Longest subsequence of 0..n-1 monotone in both natural order and L.
int longest_monotone_subsequence(const LinearOrderInstance& l);

}  // namespace ordramsey
