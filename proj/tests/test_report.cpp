#include <numeric>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "ordramsey/report.hpp"

using namespace ordramsey;

namespace {

SweepConfig exhaustive(InstanceKind kind, int n) {
  SweepConfig c;
  c.kind = kind;
  c.n = n;
  return c;
}

SweepConfig sampled(InstanceKind kind, int n, std::uint64_t count, std::uint64_t seed) {
  SweepConfig c = exhaustive(kind, n);
  c.exhaustive = false;
  c.count = count;
  c.seed = seed;
  return c;
}

void check_aggregates(const Report& r) {
  CHECK(r.valid + r.invalid == r.instances);
  std::uint64_t hist = 0;
  for (const auto& [size, count] : r.size_histogram) hist += count;
  CHECK(hist == r.instances);
  if (r.rows.size() == r.instances) {
    std::uint64_t valid = 0;
    std::map<int, std::uint64_t> sizes;
    for (const auto& row : r.rows) {
      valid += row.valid ? 1 : 0;
      ++sizes[row.solver_size];
    }
    CHECK(valid == r.valid);
    CHECK(sizes == r.size_histogram);
  }
}

// Longest subset monotone in both orders, over all subsets.
int monotone_by_subsets(const LinearOrderInstance& l) {
  const int n = l.n();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<int> s;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1U) s.push_back(x);
    bool up = true, down = true;
    for (std::size_t i = 1; i < s.size(); ++i) {
      up = up && l.less(s[i - 1], s[i]);
      down = down && l.less(s[i], s[i - 1]);
    }
    if (up || down) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

}  // namespace

TEST_CASE("exhaustive sweep of 5-vertex colorings") {
  const Report r = sweep(exhaustive(InstanceKind::coloring, 5));
  CHECK(r.instances == 1024);
  CHECK(r.invalid == 0);
  check_aggregates(r);
  for (const auto& row : r.rows) {
    REQUIRE(row.optimum);
    CHECK(row.solver_size >= 2);
    CHECK(*row.optimum == oracle::max_homogeneous(PairColoring(PairBits::from_string(5, row.instance))));
  }
}

TEST_CASE("exhaustive sweep of 4-vertex tournaments") {
  const Report r = sweep(exhaustive(InstanceKind::tournament, 4));
  CHECK(r.instances == 64);
  CHECK(r.invalid == 0);
  check_aggregates(r);
  for (const auto& row : r.rows) {
    const Tournament t{PairBits::from_string(4, row.instance)};
    CHECK(*row.optimum == oracle::max_transitive(t));
  }
}

TEST_CASE("two-vertex colorings are trivially homogeneous") {
  const Report r = sweep(exhaustive(InstanceKind::coloring, 2));
  CHECK(r.instances == 2);
  CHECK(r.valid == 2);
  CHECK(r.size_histogram == std::map<int, std::uint64_t>{{2, 2}});
  CHECK(r.rows[0].instance == "0");
  CHECK(r.rows[1].instance == "1");
}

TEST_CASE("one vertex") {
  for (auto kind : {InstanceKind::coloring, InstanceKind::tournament, InstanceKind::order, InstanceKind::family}) {
    const Report r = sweep(exhaustive(kind, 1));
    CHECK(r.invalid == 0);
    CHECK(r.instances == exhaustive_size(kind, 1));
  }
}

TEST_CASE("order sweeps visit permutations in lexicographic order") {
  const Report r = sweep(exhaustive(InstanceKind::order, 5));
  CHECK(r.instances == 120);
  CHECK(r.invalid == 0);
  CHECK(r.rows.front().instance == "0,1,2,3,4");
  CHECK(r.rows.back().instance == "4,3,2,1,0");
  for (std::size_t i = 1; i < r.rows.size(); ++i) CHECK(r.rows[i - 1].instance < r.rows[i].instance);
}

TEST_CASE("family sweeps") {
  const Report r = sweep(exhaustive(InstanceKind::family, 3));
  CHECK(r.instances == 512);
  CHECK(r.invalid == 0);
  check_aggregates(r);
  const Report s = sweep(sampled(InstanceKind::family, 12, 50, 5));
  CHECK(s.invalid == 0);
}

TEST_CASE("over-limit exhaustive requests are rejected") {
  CHECK(exhaustive_size(InstanceKind::coloring, 8) == (std::uint64_t{1} << 28));
  CHECK(exhaustive_size(InstanceKind::order, 8) == 40320);
  CHECK(exhaustive_size(InstanceKind::family, 5) == (std::uint64_t{1} << 25));
  CHECK_THROWS_AS(sweep(exhaustive(InstanceKind::coloring, 9)), std::invalid_argument);
  CHECK_THROWS_AS(sweep(exhaustive(InstanceKind::tournament, 9)), std::invalid_argument);
  CHECK_THROWS_AS(sweep(exhaustive(InstanceKind::order, 9)), std::invalid_argument);
  CHECK_THROWS_AS(sweep(exhaustive(InstanceKind::family, 6)), std::invalid_argument);
  CHECK_THROWS_AS(sweep(exhaustive(InstanceKind::coloring, 0)), std::invalid_argument);
  CHECK_NOTHROW(sweep(sampled(InstanceKind::coloring, 30, 3, 1)));
}

TEST_CASE("sampled instance i is generate(kind, n, s_i)") {
  for (auto kind : {InstanceKind::coloring, InstanceKind::tournament, InstanceKind::order, InstanceKind::family}) {
    SweepConfig c = sampled(kind, 7, 20, 42);
    const Report r = sweep(c);
    SplitMix64 seeds(42);
    for (const auto& row : r.rows) {
      SweepConfig one = c;
      const std::string file = generate(kind, 7, seeds.next());
      std::istringstream in(file);
      InstanceResult again;
      switch (kind) {
        case InstanceKind::coloring:
          again = evaluate(read_coloring(in), one);
          break;
        case InstanceKind::tournament:
          again = evaluate(read_tournament(in), one);
          break;
        case InstanceKind::order:
          again = evaluate(read_order(in), one);
          break;
        case InstanceKind::family:
          again = evaluate(read_family(in), one);
          break;
      }
      CHECK(again.instance == row.instance);
      CHECK(again.solver_size == row.solver_size);
    }
  }
}

TEST_CASE("reports are byte-deterministic") {
  for (auto f : {ReportFormat::summary, ReportFormat::tsv, ReportFormat::trace}) {
    const auto c = sampled(InstanceKind::coloring, 9, 30, 11);
    CHECK(report_emit(sweep(c), f) == report_emit(sweep(c), f));
  }
}

TEST_CASE("tsv emission") {
  Report empty;
  CHECK(report_emit(empty, ReportFormat::tsv) == "index\tkind\tn\tinstance\tsolver_size\toptimum\tvalid\n");
  Report one;
  one.kind = InstanceKind::order;
  one.n = 3;
  InstanceResult row;
  row.instance = "2,0,1";
  row.solver_size = 2;
  row.optimum = 2;
  one.add(row);
  CHECK(report_emit(one, ReportFormat::tsv) ==
        "index\tkind\tn\tinstance\tsolver_size\toptimum\tvalid\n0\torder\t3\t2,0,1\t2\t2\t1\n");
  CHECK(parse_tsv(report_emit(empty, ReportFormat::tsv)).instances == 0);
  CHECK_THROWS_AS(parse_tsv("index\tkind\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tsv("index\tkind\tn\tinstance\tsolver_size\toptimum\tvalid\n0\torder\t3\n"),
                  std::invalid_argument);
}

TEST_CASE("summary equals recomputation from the tsv rows") {
  const SweepConfig configs[] = {
      exhaustive(InstanceKind::coloring, 4),     exhaustive(InstanceKind::tournament, 5),
      exhaustive(InstanceKind::order, 6),        exhaustive(InstanceKind::family, 2),
      sampled(InstanceKind::coloring, 14, 40, 3), sampled(InstanceKind::tournament, 12, 40, 4),
  };
  for (const auto& c : configs) {
    const Report r = sweep(c);
    const Report back = parse_tsv(report_emit(r, ReportFormat::tsv));
    CHECK(summary_counts(back) == summary_counts(r));
    CHECK(back.kind == r.kind);
    CHECK(back.n == r.n);
    CHECK(report_emit(back, ReportFormat::tsv) == report_emit(r, ReportFormat::tsv));
    const std::string summary = report_emit(r, ReportFormat::summary);
    CHECK(summary.substr(summary.find('\n') + 1) == summary_counts(back));
  }
}

TEST_CASE("trace format replays through verify_trace") {
  const Report r = sweep(sampled(InstanceKind::coloring, 10, 25, 8));
  std::istringstream in(report_emit(r, ReportFormat::trace));
  const auto traces = read_traces(in);
  REQUIRE(traces.size() == r.rows.size());
  for (std::size_t i = 0; i < traces.size(); ++i) {
    CHECK(!verify_trace(traces[i], traces[i].coloring));
    CHECK(traces[i].final_set.size() == static_cast<std::size_t>(r.rows[i].solver_size));
  }
}

TEST_CASE("summary-only sweeps keep aggregates without rows") {
  SweepConfig c = exhaustive(InstanceKind::coloring, 4);
  c.keep_rows = false;
  const Report r = sweep(c);
  CHECK(r.rows.empty());
  CHECK(r.instances == 64);
  CHECK(report_emit(r, ReportFormat::summary) == report_emit(sweep(exhaustive(InstanceKind::coloring, 4)),
                                                             ReportFormat::summary));
}

TEST_CASE("longest_monotone_subsequence matches subset search") {
  SplitMix64 rng(17);
  for (int n = 0; n <= 9; ++n)
    for (int i = 0; i < 40; ++i) {
      const auto l = random_order(n, rng);
      CHECK(longest_monotone_subsequence(l) == monotone_by_subsets(l));
    }
}
