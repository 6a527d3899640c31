#include "ordramsey/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <sstream>

#include "ordramsey/brute.hpp"
#include "text_util.hpp"

namespace ordramsey {

void Report::add(InstanceResult r, bool keep) {
  ++instances;
  if (r.valid) ++valid;
  else ++invalid;
  ++size_histogram[r.solver_size];
  if (keep) rows.push_back(std::move(r));
}

namespace {

std::string or_dash(std::string s) { return s.empty() ? "-" : s; }

std::string ranking_text(const LinearOrderInstance& l) {
  std::string out;
  for (int x = 0; x < l.n(); ++x) {
    if (x > 0) out += ',';
    out += std::to_string(l.rank(x));
  }
  return or_dash(out);
}

std::string family_text(const SetFamily& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += '/';
    for (int x = 0; x < f.n(); ++x) out += f.contains(i, x) ? '1' : '0';
  }
  return or_dash(out);
}

}  // namespace

int longest_monotone_subsequence(const LinearOrderInstance& l) {
  const int n = l.n();
  if (n == 0) return 0;
  std::vector<int> up(static_cast<std::size_t>(n), 1), down(static_cast<std::size_t>(n), 1);
  int best = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      auto& u = up[static_cast<std::size_t>(i)];
      auto& d = down[static_cast<std::size_t>(i)];
      if (l.less(j, i)) u = std::max(u, up[static_cast<std::size_t>(j)] + 1);
      else d = std::max(d, down[static_cast<std::size_t>(j)] + 1);
      best = std::max({best, u, d});
    }
  return best;
}

InstanceResult evaluate(const PairColoring& f, const SweepConfig& c) {
  InstanceResult out;
  out.instance = or_dash(f.bits().to_string());
  SolverTrace t = rt22_solve(f, c.window);
  out.solver_size = static_cast<int>(t.final_set.size());
  const auto failure = verify_trace(t, f);
  out.valid = !failure && is_homogeneous(f, t.final_set).ok;
  if (f.n() <= c.brute_limit) {
    out.optimum = brute_max_homogeneous(f).size;
    out.valid = out.valid && out.solver_size <= *out.optimum;
  }
  out.detail = "color=" + std::to_string(t.color) + " set=" + format_set(t.final_set);
  if (failure) out.detail += " failure=" + std::string(to_string(failure->stage)) + ":" + failure->reason;
  out.trace = std::move(t);
  return out;
}

InstanceResult evaluate(const Tournament& r, const SweepConfig& c) {
  InstanceResult out;
  out.instance = or_dash(r.bits().to_string());
  const EmResult em = em_solve(r, c.window ? std::min(*c.window, r.n()) : default_window(r.n()));
  out.solver_size = static_cast<int>(em.transitive.size());
  out.valid = !is_transitive(r, em.transitive);
  if (r.n() <= c.brute_limit) {
    out.optimum = brute_max_transitive(r).size;
    out.valid = out.valid && out.solver_size <= *out.optimum;
  }
  out.detail = "set=" + format_set(em.transitive);
  return out;
}

InstanceResult evaluate(const LinearOrderInstance& l, const SweepConfig&) {
  InstanceResult out;
  out.instance = ranking_text(l);
  const AdsResult a = ads_solve(l);
  out.solver_size = static_cast<int>(a.sequence.size());
  bool ok = true;
  for (std::size_t i = 1; i < a.sequence.size(); ++i) {
    ok = ok && a.sequence[i - 1] < a.sequence[i] &&
         l.less(a.sequence[i - 1], a.sequence[i]) == (a.direction == Direction::ascending);
  }
  out.optimum = longest_monotone_subsequence(l);
  out.valid = ok && out.solver_size <= *out.optimum;
  out.detail = std::string("direction=") + to_string(a.direction) + " set=" + format_set(a.sequence);
  return out;
}

InstanceResult evaluate(const SetFamily& f, const SweepConfig& c) {
  InstanceResult out;
  out.instance = family_text(f);
  const CohResult r = coh_solve(f, c.target ? std::min(*c.target, f.n()) : f.n());
  out.solver_size = static_cast<int>(r.cohesive.size());
  bool ok = r.sides.size() == f.size() && r.thresholds.size() == f.size();
  for (std::size_t i = 0; ok && i < f.size(); ++i)
    for (int x : r.cohesive)
      if (x > r.thresholds[i] && f.contains(i, x) != (r.sides[i] == 1)) ok = false;
  out.valid = ok;
  out.detail = "set=" + format_set(r.cohesive);
  return out;
}

std::uint64_t exhaustive_size(InstanceKind kind, int n) {
  if (kind == InstanceKind::family) {
    if (n * n > 28) throw std::invalid_argument("exhaustive family sweeps need n*n <= 28");
    return std::uint64_t{1} << (n * n);
  }
  if (pair_count(n) > 28) throw std::invalid_argument("exhaustive sweeps need C(n,2) <= 28");
  if (kind == InstanceKind::order) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  }
  return std::uint64_t{1} << pair_count(n);
}

Report sweep(const SweepConfig& c) {
  if (c.n < 1) throw std::invalid_argument("sweeps need n >= 1");
  const auto started = std::chrono::steady_clock::now();
  Report rep;
  rep.kind = c.kind;
  rep.n = c.n;
  rep.exhaustive = c.exhaustive;
  rep.window = c.window;
  if (!c.exhaustive) rep.seed = c.seed;

  auto run = [&](std::uint64_t index, auto&& instance) {
    InstanceResult r = evaluate(instance, c);
    r.index = index;
    rep.add(std::move(r), c.keep_rows);
  };
  const int n = c.n;
  if (c.exhaustive) {
    const std::uint64_t total = exhaustive_size(c.kind, n);
    if (c.kind == InstanceKind::order) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      std::uint64_t index = 0;
      do run(index++, LinearOrderInstance(perm));
      while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      for (std::uint64_t code = 0; code < total; ++code) {
        switch (c.kind) {
          case InstanceKind::coloring:
            run(code, PairColoring(PairBits::from_code(n, code)));
            break;
          case InstanceKind::tournament:
            run(code, Tournament(PairBits::from_code(n, code)));
            break;
          case InstanceKind::family: {
            SetFamily f(n);
            for (int i = 0; i < n; ++i) {
              VertexSet s;
              for (int x = 0; x < n; ++x)
                if ((code >> (i * n + x)) & 1U) s.push_back(x);
              f.add(s);
            }
            run(code, f);
            break;
          }
          case InstanceKind::order:
            break;
        }
      }
    }
  } else {
    SplitMix64 seeds(c.seed);
    for (std::uint64_t i = 0; i < c.count; ++i) {
      SplitMix64 rng(seeds.next());
      switch (c.kind) {
        case InstanceKind::coloring:
          run(i, random_coloring(n, rng));
          break;
        case InstanceKind::tournament:
          run(i, random_tournament(n, rng));
          break;
        case InstanceKind::order:
          run(i, random_order(n, rng));
          break;
        case InstanceKind::family:
          run(i, random_family(n, rng));
          break;
      }
    }
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return rep;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "summary") return ReportFormat::summary;
  if (name == "trace") return ReportFormat::trace;
  if (name == "tsv") return ReportFormat::tsv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string summary_counts(const Report& r) {
  std::ostringstream out;
  out << "instances=" << r.instances << " valid=" << r.valid << " invalid=" << r.invalid << '\n';
  for (const auto& [size, count] : r.size_histogram) out << "size=" << size << " count=" << count << '\n';
  return out.str();
}

std::string report_emit(const Report& r, ReportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ReportFormat::summary:
      out << "kind=" << to_string(r.kind) << " n=" << r.n << " mode=" << (r.exhaustive ? "exhaustive" : "sample")
          << " seed=" << (r.seed ? std::to_string(*r.seed) : "-")
          << " window=" << (r.window ? std::to_string(*r.window) : "auto") << '\n';
      out << summary_counts(r);
      break;
    case ReportFormat::tsv:
      out << "index\tkind\tn\tinstance\tsolver_size\toptimum\tvalid\n";
      for (const auto& row : r.rows) {
        out << row.index << '\t' << to_string(r.kind) << '\t' << r.n << '\t' << row.instance << '\t'
            << row.solver_size << '\t' << (row.optimum ? std::to_string(*row.optimum) : "-") << '\t'
            << (row.valid ? 1 : 0) << '\n';
      }
      break;
    case ReportFormat::trace:
      for (const auto& row : r.rows) {
        out << "# instance " << row.index << " valid=" << (row.valid ? 1 : 0) << ' ' << row.detail << '\n';
        if (row.trace) write_trace(out, *row.trace);
        else out << to_string(r.kind) << ' ' << row.instance << '\n';
      }
      break;
  }
  return out.str();
}

Report parse_tsv(std::string_view tsv) {
  Report rep;
  std::istringstream in{std::string(tsv)};
  std::string line;
  if (!std::getline(in, line) || line != "index\tkind\tn\tinstance\tsolver_size\toptimum\tvalid") {
    throw std::invalid_argument("tsv: missing header row");
  }
  auto num = [](std::string_view t) {
    long long v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || p != t.data() + t.size()) {
      throw std::invalid_argument("tsv: bad number '" + std::string(t) + "'");
    }
    return v;
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> cols;
    std::string_view rest(line);
    while (true) {
      const auto tab = rest.find('\t');
      cols.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (cols.size() != 7) throw std::invalid_argument("tsv: expected 7 columns");
    rep.kind = parse_instance_kind(cols[1]);
    rep.n = static_cast<int>(num(cols[2]));
    InstanceResult r;
    r.index = static_cast<std::uint64_t>(num(cols[0]));
    r.instance = std::string(cols[3]);
    r.solver_size = static_cast<int>(num(cols[4]));
    if (cols[5] != "-") r.optimum = static_cast<int>(num(cols[5]));
    r.valid = num(cols[6]) != 0;
    rep.add(std::move(r));
  }
  return rep;
}

}  // namespace ordramsey
