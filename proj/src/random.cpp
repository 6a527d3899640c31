#include "ordramsey/random.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace ordramsey {

namespace {

// Terms with distinct exponents below `cap` (or anything of depth < depth
// when cap is null), sorted into CNF.
Ordinal random_tail(SplitMix64& rng, const Ordinal* cap, std::size_t depth, std::size_t max_terms,
                    Ordinal::Coefficient max_coefficient) {
  const std::size_t count = rng.uniform(max_terms + 1);
  std::vector<Ordinal> exps;
  for (std::size_t i = 0; i < count; ++i) {
    if (cap) {
      if (cap->is_zero()) break;
      exps.push_back(random_below(rng, *cap, max_terms, max_coefficient));
    } else {
      exps.push_back(random_ordinal(rng, depth, max_terms, max_coefficient));
    }
  }
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<Term> terms;
  for (auto& e : exps) terms.push_back(Term{std::move(e), 1 + rng.uniform(max_coefficient)});
  return Ordinal::from_terms(std::move(terms));
}

}  // namespace

Ordinal random_ordinal(SplitMix64& rng, std::size_t depth, std::size_t max_terms,
                       Ordinal::Coefficient max_coefficient) {
  if (depth == 0) return Ordinal::zero();
  return random_tail(rng, nullptr, depth - 1, max_terms, max_coefficient);
}

Ordinal random_below(SplitMix64& rng, const Ordinal& a, std::size_t max_terms,
                     Ordinal::Coefficient max_coefficient) {
  if (a.is_zero()) throw std::invalid_argument("nothing lies below 0");
  const auto terms = a.terms();
  const std::size_t j = rng.uniform(terms.size());
  std::vector<Term> head(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(j));
  const Term& pivot = terms[j];
  if (pivot.coefficient > 1 && rng.bit()) {
    head.push_back(Term{pivot.exponent, 1 + rng.uniform(pivot.coefficient - 1)});
  }
  const Ordinal tail = random_tail(rng, &pivot.exponent, 0, max_terms, max_coefficient);
  for (const auto& t : tail.terms()) head.push_back(t);
  return Ordinal::from_terms(std::move(head));
}

StreamEventLog random_event_log(SplitMix64& rng, std::size_t streams, const Ordinal& bound,
                                std::size_t events) {
  StreamEventLog log;
  log.streams = streams;
  log.bound = bound;
  std::vector<Ordinal> ceiling(streams, bound);
  std::uint64_t time = rng.uniform(3);
  for (std::size_t i = 0; i < events; ++i) {
    std::vector<std::size_t> live;
    for (std::size_t e = 0; e < streams; ++e)
      if (!ceiling[e].is_zero()) live.push_back(e);
    if (live.empty()) break;
    const std::size_t e = live[rng.uniform(live.size())];
    ceiling[e] = random_below(rng, ceiling[e]);
    log.events.push_back(StreamEvent{time, e, ceiling[e]});
    time += 1 + rng.uniform(3);
  }
  return log;
}

namespace {

PairBits random_bits(int n, SplitMix64& rng) {
  PairBits bits(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) bits.set_bit(x, y, rng.bit());
  return bits;
}

}  // namespace

PairColoring random_coloring(int n, SplitMix64& rng) { return PairColoring(random_bits(n, rng)); }
Tournament random_tournament(int n, SplitMix64& rng) { return Tournament(random_bits(n, rng)); }

LinearOrderInstance random_order(int n, SplitMix64& rng) {
  std::vector<int> r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i >= 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform(static_cast<std::uint64_t>(i) + 1));
    std::swap(r[static_cast<std::size_t>(i)], r[j]);
  }
  return LinearOrderInstance(std::move(r));
}

SetFamily random_family(int n, SplitMix64& rng) {
  SetFamily f(n);
  for (int i = 0; i < n; ++i) {
    VertexSet s;
    for (int x = 0; x < n; ++x)
      if (rng.bit()) s.push_back(x);
    f.add(s);
  }
  return f;
}

const char* to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::coloring:
      return "coloring";
    case InstanceKind::tournament:
      return "tournament";
    case InstanceKind::order:
      return "order";
    case InstanceKind::family:
      return "family";
  }
  return "?";
}

InstanceKind parse_instance_kind(std::string_view name) {
  for (auto k : {InstanceKind::coloring, InstanceKind::tournament, InstanceKind::order, InstanceKind::family}) {
    if (name == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown instance kind '" + std::string(name) + "'");
}

std::string generate(InstanceKind kind, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("instances need n >= 1");
  SplitMix64 rng(seed);
  std::ostringstream out;
  switch (kind) {
    case InstanceKind::coloring:
      write_coloring(out, random_coloring(n, rng));
      break;
    case InstanceKind::tournament:
      write_tournament(out, random_tournament(n, rng));
      break;
    case InstanceKind::order:
      write_order(out, random_order(n, rng));
      break;
    case InstanceKind::family:
      write_family(out, random_family(n, rng));
      break;
  }
  return out.str();
}

StageGenerator<Ordinal> random_ranked_growth(SplitMix64& rng, std::size_t b, std::size_t d) {
  return [&rng, b, d](const MonotoneEnumeration<Ordinal>& e)
             -> std::optional<std::vector<MonotoneEnumeration<Ordinal>::Addition>> {
    std::vector<Node> growable;
    for (const auto& leaf : e.current().leaves()) {
      if (leaf.size() < b && !e.label(leaf).is_zero()) growable.push_back(leaf);
    }
    if (growable.empty() || d == 0) return std::nullopt;
    if (rng.uniform(8) == 0) return std::vector<MonotoneEnumeration<Ordinal>::Addition>{};  // idle
    const Node& leaf = growable[rng.uniform(growable.size())];
    const Ordinal& rank = e.label(leaf);
    std::vector<MonotoneEnumeration<Ordinal>::Addition> out;
    const std::size_t k = 1 + rng.uniform(d);
    for (std::size_t i = 0; i < k; ++i) {
      Node child = leaf;
      child.push_back(static_cast<std::uint32_t>(i));
      out.emplace_back(std::move(child), random_below(rng, rank));
    }
    return out;
  };
}

}  // namespace ordramsey
