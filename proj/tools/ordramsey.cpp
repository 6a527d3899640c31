// ordramsey: command-line front end.
//
// Exit codes: 0 success, 1 a checker rejected its input (invalid trace,
// enumeration, descent, or a sweep with failures), 2 usage or malformed
// input. Everything on stdout is deterministic; --timing adds wall-clock to
// stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ordramsey/brute.hpp"
#include "ordramsey/descent.hpp"
#include "ordramsey/enumeration_log.hpp"
#include "ordramsey/measure.hpp"
#include "ordramsey/ordinal.hpp"
#include "ordramsey/ordinal_index.hpp"
#include "ordramsey/random.hpp"
#include "ordramsey/report.hpp"
#include "ordramsey/solvers.hpp"

using namespace ordramsey;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "-" reads stdin.
std::string slurp(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

template <class Reader>
auto read_file(const std::string& path, Reader reader) {
  std::istringstream in(slurp(path));
  return reader(in);
}

const char* order_symbol(std::strong_ordering c) {
  if (c < 0) return "<";
  if (c > 0) return ">";
  return "=";
}

class Timer {
 public:
  explicit Timer(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    if (!on_) return;
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "wall_seconds=" << s << '\n';
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

struct Options {
  // ord
  std::string a, b;
  unsigned long long k = 0;
  // files
  std::string file, coloring_file;
  // enum
  std::string mode = "random";
  std::size_t bound = 4, branching = 2, fuel = 100000;
  std::string root_rank = "w*2+3";
  std::string log_format = "summary";
  // ramsey and sweep
  std::string format = "summary";
  std::string kind = "coloring";
  int n = 5;
  std::optional<int> window, target;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> count;
  int brute_limit = 10;
  bool timing = false;
};

int cmd_ord(const std::string& op, const Options& o) {
  auto A = [&] { return parse_ordinal(o.a); };
  auto B = [&] { return parse_ordinal(o.b); };
  if (op == "format") std::cout << format(A()) << '\n';
  else if (op == "encode") std::cout << encode(A()).to_decimal() << '\n';
  else if (op == "decode") std::cout << format(decode(OrdinalIndex::from_decimal(o.a))) << '\n';
  else if (op == "compare") std::cout << order_symbol(compare(A(), B())) << '\n';
  else if (op == "add") std::cout << format(std_add(A(), B())) << '\n';
  else if (op == "nat-add") std::cout << format(nat_add(A(), B())) << '\n';
  else if (op == "nat-mul") std::cout << format(nat_mul_k(A(), o.k)) << '\n';
  else if (op == "nat-mul-omega") std::cout << format(nat_mul_omega(A())) << '\n';
  else if (op == "omega-pow") std::cout << format(omega_pow(A())) << '\n';
  else if (op == "tower") std::cout << format(tower(A(), static_cast<unsigned>(o.k))) << '\n';
  return 0;
}

int cmd_descent_validate(const Options& o) {
  const DescentTrace t = read_file(o.file, read_descent_trace);
  if (const auto v = validate_descent(t)) {
    std::cout << "invalid index=" << v->index << " kind=" << to_string(v->kind) << '\n';
    return 1;
  }
  std::cout << "valid length=" << t.values.size() << '\n';
  return 0;
}

int cmd_descent_combine(const Options& o) {
  const StreamEventLog log = read_file(o.file, read_event_log);
  if (const auto bad = check_log(log)) {
    std::cerr << "malformed log: " << *bad << '\n';
    return 1;
  }
  const DescentTrace t = gamma_combine(log);
  write_descent_trace(std::cout, t);
  return validate_descent(t) ? 1 : 0;
}

void print_rejection(const Rejection& r) {
  std::cout << "rejected stage=" << r.stage << " clause=" << to_string(r.clause) << " node=" << format_node(r.node)
            << " detail=" << r.detail << '\n';
}

int cmd_enum_check(const Options& o) {
  const EnumerationLog log = read_file(o.file, read_enumeration_log);
  try {
    const auto e = to_enumeration(log);
    if (const auto too_long = check_bounded(e, o.bound)) {
      std::cout << "unbounded node=" << format_node(*too_long) << " bound=" << o.bound << '\n';
      return 1;
    }
    std::cout << "ok stages=" << e.stage_count() << " nodes=" << e.current().size() << '\n';
    return 0;
  } catch (const StepRejected& ex) {
    print_rejection(ex.rejection());
    return 1;
  }
}

int cmd_enum_measure(const Options& o) {
  const EnumerationLog log = read_file(o.file, read_enumeration_log);
  MonotoneEnumeration<Ordinal> e;
  try {
    e = to_enumeration(log);
  } catch (const StepRejected& ex) {
    print_rejection(ex.rejection());
    return 1;
  }
  const RankAssignment ranks = ranks_of(log);
  if (const auto bad = ranks.check(e.current())) {
    std::cout << "precondition-violated detail=" << *bad << '\n';
    return 1;
  }
  for (std::size_t s = 0; s < e.stage_count(); ++s) {
    std::cout << "stage " << s << " zeta=" << format(zeta_measure(e.stage(s), ranks)) << '\n';
  }
  const ZetaCheck c = zeta_decrease_check(e, ranks);
  std::cout << to_string(c.status);
  if (c.status != ZetaStatus::ok) std::cout << " stage=" << c.stage << " node=" << format_node(c.node) << " detail=" << c.detail;
  std::cout << '\n';
  return c.status == ZetaStatus::ok ? 0 : 1;
}

int cmd_enum_run(const Options& o) {
  SplitMix64 rng(o.seed);
  StageGenerator<Ordinal> gen;
  Ordinal root = Ordinal::natural(o.bound);
  if (o.mode == "full") gen = full_growth<Ordinal>(o.bound, o.branching);
  else if (o.mode == "chain") gen = chain_growth<Ordinal>(o.bound);
  else if (o.mode == "random") {
    root = parse_ordinal(o.root_rank);
    gen = random_ranked_growth(rng, o.bound, o.branching);
  } else {
    throw UsageError("--mode must be full, chain or random");
  }
  const auto r = run_to_finiteness<Ordinal>(gen, o.bound, o.branching, o.fuel, MonotoneEnumeration<Ordinal>(root));
  const auto& e = r.enumeration;
  // Fixed-shape modes carry rank b - |node|, which decreases along every edge.
  EnumerationLog log = to_log(e, std_add(root, Ordinal::natural(1)));
  if (o.mode != "random") {
    for (auto& stage : log.stages)
      for (auto& [node, rank] : stage) rank = Ordinal::natural(o.bound - node.size());
  }
  if (o.log_format == "log") {
    write_enumeration_log(std::cout, log);
  } else {
    std::cout << "mode=" << o.mode << " b=" << o.bound << " d=" << o.branching << " fuel=" << o.fuel
              << " seed=" << o.seed << '\n';
    std::cout << "status=" << to_string(r.status) << " stages=" << e.stage_count() << " nodes=" << e.current().size()
              << " capacity=" << bounded_tree_capacity(o.bound, o.branching) << '\n';
    if (r.rejection) print_rejection(*r.rejection);
    const ZetaCheck c = zeta_decrease_check(e, ranks_of(log));
    std::cout << "zeta " << to_string(c.status) << " from=" << format(zeta_measure(e.stage(0), ranks_of(log)))
              << " to=" << format(zeta_measure(e.current(), ranks_of(log))) << '\n';
    if (c.status != ZetaStatus::ok) return 1;
  }
  return r.status == RunStatus::finished ? 0 : 1;
}

SweepConfig sweep_config(const Options& o) {
  SweepConfig c;
  c.kind = parse_instance_kind(o.kind);
  c.n = o.n;
  c.exhaustive = !o.count.has_value();
  c.count = o.count.value_or(0);
  c.seed = o.seed;
  c.window = o.window;
  c.target = o.target;
  c.brute_limit = o.brute_limit;
  return c;
}

int cmd_sweep(const Options& o) {
  SweepConfig c = sweep_config(o);
  const ReportFormat f = parse_report_format(o.format);
  c.keep_rows = f != ReportFormat::summary;
  const Report r = sweep(c);
  if (f == ReportFormat::trace) {
    const std::string head = report_emit(r, ReportFormat::summary);
    std::cout << "# " << head.substr(0, head.find('\n') + 1);
  }
  std::cout << report_emit(r, f);
  return r.invalid == 0 ? 0 : 1;
}

int cmd_solve(const Options& o) {
  const PairColoring f = read_file(o.file, read_coloring);
  const SolverTrace t = rt22_solve(f, o.window);
  const auto failure = verify_trace(t, f);
  if (o.format == "trace") {
    write_trace(std::cout, t);
  } else {
    std::cout << "homogeneous color=" << t.color << " size=" << t.final_set.size() << " set=" << format_set(t.final_set)
              << '\n';
    std::cout << "cohesive=" << t.cohesive.size() << " transitive=" << t.transitive.size()
              << " monotone=" << t.monotone.size() << " direction=" << to_string(t.direction) << '\n';
  }
  if (failure) {
    std::cerr << "trace failed at " << to_string(failure->stage) << ": " << failure->reason << '\n';
    return 1;
  }
  return 0;
}

int cmd_em(const Options& o) {
  const Tournament r = read_file(o.file, read_tournament);
  const EmResult em = em_solve(r, o.window ? std::min(*o.window, r.n()) : default_window(r.n()));
  if (o.format == "trace") {
    for (const auto& s : em.steps)
      std::cout << "step vertex=" << s.vertex << " class=" << to_string(s.cls) << " action=" << to_string(s.action) << '\n';
  }
  std::cout << "transitive size=" << em.transitive.size() << " set=" << format_set(em.transitive) << '\n';
  if (const auto cycle = is_transitive(r, em.transitive)) {
    std::cerr << "cycle " << (*cycle)[0] << "->" << (*cycle)[1] << "->" << (*cycle)[2] << '\n';
    return 1;
  }
  return 0;
}

int cmd_ads(const Options& o) {
  const LinearOrderInstance l = read_file(o.file, read_order);
  const AdsResult a = ads_solve(l);
  std::cout << "monotone direction=" << to_string(a.direction) << " size=" << a.sequence.size()
            << " set=" << format_set(a.sequence) << '\n';
  if (o.format == "trace") std::cout << "upper_count=" << a.upper_count << '\n';
  return 0;
}

int cmd_coh(const Options& o) {
  const SetFamily f = read_file(o.file, read_family);
  const CohResult r = coh_solve(f, o.target.value_or(f.n()));
  std::cout << "cohesive size=" << r.cohesive.size() << " set=" << format_set(r.cohesive) << '\n';
  if (o.format == "trace") {
    std::cout << "sides";
    for (int s : r.sides) std::cout << ' ' << s;
    std::cout << "\nthresholds";
    for (int t : r.thresholds) std::cout << ' ' << t;
    std::cout << '\n';
    if (r.exhausted_prefix) std::cout << "exhausted after " << r.exhausted_prefix->size() << " sets\n";
  }
  return 0;
}

int cmd_brute(const Options& o) {
  const std::string text = slurp(o.file);
  std::istringstream in(text);
  BruteResult r;
  const char* what = "homogeneous";
  if (o.kind == "coloring") {
    r = brute_max_homogeneous(read_coloring(in));
  } else if (o.kind == "tournament") {
    r = brute_max_transitive(read_tournament(in));
    what = "transitive";
  } else {
    throw UsageError("--kind must be coloring or tournament");
  }
  std::cout << "optimum " << what << " size=" << r.size << " set=" << format_set(r.witness) << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  const auto traces = read_file(o.file, read_traces);
  std::optional<PairColoring> given;
  if (!o.coloring_file.empty()) given = read_file(o.coloring_file, read_coloring);
  int bad = 0;
  for (std::size_t i = 0; i < traces.size(); ++i) {
    const auto failure = verify_trace(traces[i], given ? *given : traces[i].coloring);
    std::cout << "trace " << i;
    if (failure) {
      ++bad;
      std::cout << " failed stage=" << to_string(failure->stage) << " reason=" << failure->reason << '\n';
    } else {
      std::cout << " ok\n";
    }
  }
  std::cout << "traces=" << traces.size() << " failed=" << bad << '\n';
  return bad == 0 ? 0 : 1;
}

int cmd_gen(const Options& o) {
  std::cout << generate(parse_instance_kind(o.kind), o.n, o.seed);
  return 0;
}

void add_sweep_options(CLI::App* app, Options& o) {
  app->add_option("--kind", o.kind, "coloring, tournament, order or family")->capture_default_str();
  app->add_option("--n", o.n, "vertices")->capture_default_str();
  app->add_option("--count", o.count, "sample this many instances (default: exhaustive)");
  app->add_option("--seed", o.seed, "seed for sampled instances")->capture_default_str();
  app->add_option("--window", o.window, "EM tail window (default ceil(n/3))");
  app->add_option("--target", o.target, "COH target size (default n)");
  app->add_option("--brute-limit", o.brute_limit, "compare with brute force up to this n")->capture_default_str();
  app->add_option("--format", o.format, "summary, trace or tsv")->capture_default_str();
  app->add_flag("--timing", o.timing, "wall-clock on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal arithmetic, bounded monotone enumerations and RT(2,2) solvers"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* ord = app.add_subcommand("ord", "ordinal arithmetic below epsilon_0");
  ord->require_subcommand(1);
  struct OrdVerb {
    const char* name;
    const char* help;
    int arity;  // 1: a, 2: a b, 3: a k
  };
  const OrdVerb verbs[] = {
      {"format", "canonical form", 1},          {"encode", "natural-number index", 1},
      {"decode", "ordinal of an index", 1},     {"compare", "print <, = or >", 2},
      {"add", "ordinary sum a + b", 2},         {"nat-add", "natural sum", 2},
      {"nat-mul", "natural product with k", 3}, {"nat-mul-omega", "natural product with w", 1},
      {"omega-pow", "w^a", 1},                  {"tower", "a^^k in base w", 3},
  };
  for (const auto& v : verbs) {
    auto* sub = ord->add_subcommand(v.name, v.help);
    sub->add_option("a", o.a, "ordinal (index for decode)")->required();
    if (v.arity == 2) sub->add_option("b", o.b, "ordinal")->required();
    if (v.arity == 3) sub->add_option("k", o.k, "natural number")->required();
    const std::string name = v.name;
    sub->callback([&, name] { action = [&, name] { return cmd_ord(name, o); }; });
  }

  auto* descent = app.add_subcommand("descent", "descent traces and the stream combiner");
  descent->require_subcommand(1);
  auto* validate = descent->add_subcommand("validate", "check a descent trace");
  validate->add_option("trace", o.file, "trace file or -")->required();
  validate->callback([&] { action = [&] { return cmd_descent_validate(o); }; });
  auto* combine = descent->add_subcommand("combine", "merge a stream event log into one descent");
  combine->add_option("log", o.file, "event log file or -")->required();
  combine->callback([&] { action = [&] { return cmd_descent_combine(o); }; });

  auto* en = app.add_subcommand("enum", "bounded monotone enumerations");
  en->require_subcommand(1);
  auto* check = en->add_subcommand("check", "replay an enumeration log against the definition");
  check->add_option("log", o.file, "enumeration log or -")->required();
  o.bound = std::numeric_limits<std::size_t>::max();
  check->add_option("--bound", o.bound, "also require every node length <= bound");
  check->callback([&] { action = [&] { return cmd_enum_check(o); }; });
  auto* measure = en->add_subcommand("measure", "zeta at every stage, and its strict decrease");
  measure->add_option("log", o.file, "enumeration log or -")->required();
  measure->callback([&] { action = [&] { return cmd_enum_measure(o); }; });
  auto* run = en->add_subcommand("run", "drive a generator until it goes quiet");
  run->add_option("--mode", o.mode, "full, chain or random")->capture_default_str();
  run->add_option("--bound,-b", o.bound, "length bound b");
  run->add_option("--branching,-d", o.branching, "branching bound d")->capture_default_str();
  run->add_option("--fuel", o.fuel, "maximum number of stages")->capture_default_str();
  run->add_option("--seed", o.seed, "seed for random mode")->capture_default_str();
  run->add_option("--root-rank", o.root_rank, "root rank for random mode")->capture_default_str();
  run->add_option("--format", o.log_format, "summary or log")->capture_default_str();
  run->callback([&] {
    if (o.bound == std::numeric_limits<std::size_t>::max()) o.bound = 4;
    action = [&] { return cmd_enum_run(o); };
  });

  auto* ramsey = app.add_subcommand("ramsey", "RT(2,2) and its parts on finite instances");
  ramsey->require_subcommand(1);
  auto file_verb = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* sub = ramsey->add_subcommand(name, help);
    sub->add_option("file", o.file, "instance file or -")->required();
    sub->add_option("--format", o.format, "summary or trace")->capture_default_str();
    sub->add_flag("--timing", o.timing, "wall-clock on stderr");
    sub->callback([&, fn] { action = [&, fn] { return fn(o); }; });
    return sub;
  };
  file_verb("solve", "homogeneous set for a coloring", cmd_solve)
      ->add_option("--window", o.window, "EM tail window");
  file_verb("em", "transitive subtournament", cmd_em)->add_option("--window", o.window, "tail window");
  file_verb("ads", "monotone subsequence of an order", cmd_ads);
  file_verb("coh", "cohesive set for a family", cmd_coh)->add_option("--target", o.target, "target size");
  file_verb("brute", "exact optimum by exhaustive search", cmd_brute)
      ->add_option("--kind", o.kind, "coloring or tournament")
      ->capture_default_str();
  file_verb("verify", "replay traces against their colorings", cmd_verify)
      ->add_option("--coloring", o.coloring_file, "check against this coloring instead");
  auto* rsweep = ramsey->add_subcommand("sweep", "same as the top-level sweep");
  add_sweep_options(rsweep, o);
  rsweep->callback([&] { action = [&] { return cmd_sweep(o); }; });

  auto* sw = app.add_subcommand("sweep", "run solver and checker over many instances");
  add_sweep_options(sw, o);
  sw->callback([&] { action = [&] { return cmd_sweep(o); }; });

  auto* gen = app.add_subcommand("gen", "seeded random instance");
  gen->add_option("--kind", o.kind, "coloring, tournament, order or family")->capture_default_str();
  gen->add_option("--n", o.n, "vertices")->capture_default_str();
  gen->add_option("--seed", o.seed, "seed")->capture_default_str();
  gen->callback([&] { action = [&] { return cmd_gen(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    Timer timer(o.timing);
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
