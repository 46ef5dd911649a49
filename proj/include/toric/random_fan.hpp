#ifndef TORIC_RANDOM_FAN_HPP
#define TORIC_RANDOM_FAN_HPP

#include <cstdint>

#include "toric/fan.hpp"

namespace toric {

struct RandomFanOptions {
  bool force_complete = false;
  bool force_non_full = false;
};

/// Deterministic per seed. dim 1: one of the three 1-dimensional fans.
/// dim 2: angularly sorted random primitive rays, consecutive pairs (or a
/// subset of them). dim 3: a random unimodular image of a stock complete fan
/// (orthants, simplex, weighted simplex, cube), or a subfan of one.
/// Non-full fans are lower-dimensional constructions embedded and twisted.
Fan generate_random_fan(std::uint64_t seed, std::size_t dim,
                        std::size_t max_rays,
                        const RandomFanOptions& opts = {});

}  // namespace toric

#endif
