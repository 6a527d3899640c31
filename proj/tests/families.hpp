#pragma once

// Exhaustive families of small instances shared by the unit and acceptance
// tests.

#include <functional>
#include <vector>

#include "ordramsey/descent.hpp"
#include "ordramsey/ordinal.hpp"

namespace family {

using ordramsey::Ordinal;

inline Ordinal omega_times_plus(std::uint64_t a, std::uint64_t b) {
  std::vector<ordramsey::Term> terms;
  if (a > 0) terms.push_back({Ordinal::natural(1), a});
  if (b > 0) terms.push_back({Ordinal::zero(), b});
  return Ordinal::from_terms(std::move(terms));
}

/// Every well-formed log with k in {1, 2}, bound beta in (0, w*3], at most
/// four events at times 0, 1, 2, 3, and every value of the form w*a + b
/// with a <= 2, b <= 3.
inline void for_each_small_log(const std::function<void(const ordramsey::StreamEventLog&)>& fn) {
  std::vector<Ordinal> pool;
  for (std::uint64_t a = 0; a <= 2; ++a)
    for (std::uint64_t b = 0; b <= 3; ++b) pool.push_back(omega_times_plus(a, b));
  std::vector<Ordinal> bounds;
  for (std::uint64_t a = 0; a <= 3; ++a)
    for (std::uint64_t b = 0; b <= 3; ++b)
      if ((a > 0 || b > 0) && (a < 3 || b == 0)) bounds.push_back(omega_times_plus(a, b));

  for (std::size_t k = 1; k <= 2; ++k) {
    for (const auto& beta : bounds) {
      ordramsey::StreamEventLog log{k, beta, {}};
      std::vector<Ordinal> ceiling(k, beta);
      std::function<void()> grow = [&]() {
        fn(log);
        if (log.events.size() == 4) return;
        for (std::size_t e = 0; e < k; ++e) {
          for (const auto& v : pool) {
            if (!(v < ceiling[e])) continue;
            const Ordinal saved = ceiling[e];
            ceiling[e] = v;
            log.events.push_back({log.events.size(), e, v});
            grow();
            log.events.pop_back();
            ceiling[e] = saved;
          }
        }
      };
      grow();
    }
  }
}

}  // namespace family

#include <string>

#include "ordramsey/tree.hpp"

namespace family {

/// Stage lists after stage 0, each of whose last stage breaks the
/// extends-a-terminal-node clause while every earlier stage is legal.
struct Adversary {
  const char* name;
  std::vector<std::vector<const char*>> stages;
};

inline const std::vector<Adversary>& clause3_adversaries() {
  static const std::vector<Adversary> all = {
      {"re-extend root", {{"0"}, {"1"}}},
      {"re-extend root after fan", {{"0", "1"}, {"2"}}},
      {"missing parent", {{"0.0"}}},
      {"re-extend inner node", {{"0"}, {"0.0"}, {"0.1"}}},
      {"re-add node", {{"0"}, {"0"}}},
      {"duplicate in batch", {{"0", "0"}}},
      {"mixed batch", {{"0"}, {"0.0", "1"}}},
      {"sibling under grown node", {{"0", "1"}, {"0.0"}, {"0.0.0", "0.1"}}},
      {"offense after idle stage", {{"0"}, {}, {"1"}}},
      {"skipped level", {{"0"}, {"0.0.0"}}},
      {"deep re-extension", {{"0", "1", "2"}, {"1.0"}, {"1.0.0"}, {"1.1"}}},
      {"spine sibling", {{"0"}, {"0.0"}, {"0.0.0"}, {"0.0.1"}}},
      {"re-add root", {{"0"}, {"<>"}}},
      {"root after single child", {{"1"}, {"1.0", "0"}}},
      {"sibling of a chain", {{"0", "0.0", "0.0.0"}, {"0.1"}}},
      {"two-front offense", {{"0", "1"}, {"0.0", "1.0"}, {"0.0.0", "0.1"}}},
      {"third child later", {{"0"}, {"0.0", "0.1"}, {"0.2"}}},
      {"duplicate deep batch", {{"3"}, {"3.5"}, {"3.5.1", "3.5.1"}}},
      {"re-add after idles", {{"0"}, {"0.0"}, {}, {}, {"0.0.0", "0.0"}}},
      {"orphan", {{"0"}, {"1.0"}}},
  };
  return all;
}

}  // namespace family

#include <map>

#include "ordramsey/measure.hpp"
#include "ordramsey/random.hpp"

namespace family {

struct PairGrowthEvent {
  ordramsey::Node parent;
  ordramsey::Node child;
  ordramsey::Tree before;
  ordramsey::Tree after;
};

/// Grows a binary tree from a root with random ranks (depth <= 2): each step
/// picks a node missing child i whose f_i is positive and adds that child
/// with f_i lowered and f_{1-i} kept. Stops when nothing can grow or after
/// `max_steps`.
inline std::vector<PairGrowthEvent> random_pair_growth(ordramsey::SplitMix64& rng, std::size_t max_steps,
                                                       ordramsey::PairRankMap& ranks) {
  using namespace ordramsey;
  ranks.clear();
  ranks[Node{}] = PairRanks{random_ordinal(rng, 2, 2, 3), random_ordinal(rng, 2, 2, 3)};
  Tree tree;
  std::vector<PairGrowthEvent> out;
  for (std::size_t step = 0; step < max_steps; ++step) {
    std::vector<std::pair<Node, std::uint32_t>> open;
    for (const auto& node : tree.nodes()) {
      const PairRanks& r = ranks.at(node);
      for (std::uint32_t i = 0; i < 2; ++i) {
        Node child = node;
        child.push_back(i);
        const Ordinal& fi = i == 0 ? r.first : r.second;
        if (!tree.contains(child) && !fi.is_zero()) open.emplace_back(node, i);
      }
    }
    if (open.empty()) break;
    const auto& [parent, side] = open[rng.uniform(open.size())];
    Node child = parent;
    child.push_back(side);
    const PairRanks& pr = ranks.at(parent);
    PairRanks cr = pr;
    if (side == 0) cr.first = random_below(rng, pr.first, 2, 3);
    else cr.second = random_below(rng, pr.second, 2, 3);
    ranks[child] = cr;
    PairGrowthEvent ev{parent, child, tree, tree};
    ev.after.insert(child);
    tree = ev.after;
    out.push_back(std::move(ev));
  }
  return out;
}

}  // namespace family
