#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "linearr/arrangement.hpp"

namespace linearr {

/// Uniform integer in [0, bound) by rejection on a 64-bit engine. Used instead
/// of std::uniform_int_distribution, whose output differs between standard
/// libraries, so that seeded runs reproduce byte for byte everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform integer in [lo, hi].
std::int64_t uniform_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform_unit(std::mt19937_64& rng);

/// Engine for trial `trial` of a run seeded with `seed`: std::seed_seq over
/// the words (seed low, seed high, trial). seed_seq's mixing is fixed by the
/// standard, so trials are independent and reproducible.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial);

/// Random combinatorial arrangements on `lines` lines. Each of `lines`
/// attempts keeps a candidate multiple point with probability `density`; a
/// candidate is grown greedily from shuffled lines using only pairs that no
/// accepted point covers yet, up to a random target size in [3, max(3, lines/2 + 1)].
/// Remaining pairs become double points. density = 0 yields the generic
/// arrangement. Requires lines >= 3 and density in [0, 1].
std::vector<Arrangement> random_arrangements(int lines, double density, std::uint64_t seed, int count);

Arrangement random_arrangement(int lines, double density, std::mt19937_64& rng);

}  // namespace linearr
