#pragma once

// Seeded random objects: ordinals, instances, and enumeration runs.

#include <cstdint>
#include <string>
#include <string_view>

#include "ordramsey/descent.hpp"
#include "ordramsey/enumeration.hpp"
#include "ordramsey/instances.hpp"
#include "ordramsey/ordinal.hpp"
#include "ordramsey/rng.hpp"

namespace ordramsey {

/// An ordinal of depth at most `depth` with at most `max_terms` terms per
/// level and coefficients in [1, max_coefficient].
Ordinal random_ordinal(SplitMix64& rng, std::size_t depth, std::size_t max_terms = 3,
                       Ordinal::Coefficient max_coefficient = 5);

/// A random ordinal strictly below `a`. Precondition: a > 0.
Ordinal random_below(SplitMix64& rng, const Ordinal& a, std::size_t max_terms = 3,
                     Ordinal::Coefficient max_coefficient = 5);

/// A well-formed log: `events` emissions spread over k streams, each stream
/// descending from below `bound`. Streams that reach 0 fall silent, so the
/// log may be shorter than asked.
StreamEventLog random_event_log(SplitMix64& rng, std::size_t streams, const Ordinal& bound,
                                std::size_t events);

// Instances. Pair bits are drawn in pair order; an order is Fisher-Yates on
// the identity with i running from n-1 down to 1 and j = uniform(i + 1); a
// family has n sets, set i drawing its n membership bits in order x = 0..n-1.
PairColoring random_coloring(int n, SplitMix64& rng);
Tournament random_tournament(int n, SplitMix64& rng);
LinearOrderInstance random_order(int n, SplitMix64& rng);
SetFamily random_family(int n, SplitMix64& rng);

enum class InstanceKind { coloring, tournament, order, family };

const char* to_string(InstanceKind kind);
/// Throws std::invalid_argument for an unknown name.
InstanceKind parse_instance_kind(std::string_view name);

/// The file text of a fresh instance, deterministic in (kind, n, seed).
/// Throws std::invalid_argument for n < 1.
std::string generate(InstanceKind kind, int n, std::uint64_t seed);

/// Random rank-decreasing growth: each stage extends one random leaf whose
/// rank is positive by 1..d children ranked below it, while the length stays
/// within b. Labels are ranks. Quiet once no leaf can grow.
StageGenerator<Ordinal> random_ranked_growth(SplitMix64& rng, std::size_t b, std::size_t d);

}  // namespace ordramsey
