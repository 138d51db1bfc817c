#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "supercong/rational.hpp"

namespace supercong {

/// Generator keyed by (seed, tag, p) so that every (case, prime) work item
/// draws the same samples no matter which thread runs it.
std::mt19937_64 keyed_rng(std::uint64_t seed, std::string_view tag, std::uint64_t p);

/// Integer in [lo, hi], built from raw engine output (distribution objects
/// are implementation-defined, which would break cross-platform replay).
std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// A rational a/b in Z_p with 1 <= b <= max_den, p not dividing b, and
/// |a| <= num_bound.
Rational draw_zp(std::mt19937_64& rng, std::uint64_t p, std::int64_t max_den = 12,
                 std::int64_t num_bound = 60);

}  // namespace supercong
