#pragma once

#include <cstdint>

#include "popc/word.hpp"

namespace popc {

/// Generator identity recorded in CSV headers; runs are deterministic for a
/// fixed seed within one build.
inline constexpr const char* kGeneratorId = "mt19937_64/floyd";

/// splitmix64-style mixing of a seed with up to three tags. Used to derive
/// independent per-trial seeds so every algorithm sees identical inputs for
/// the same (width, ones, trial) cell.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c);

/// Word of `width` bits with exactly `ones` set bits, positions drawn
/// without replacement from a seeded mt19937_64 (Floyd's sampling).
/// Throws std::invalid_argument if ones > width.
Word gen_input(std::size_t width, std::size_t ones, std::uint64_t seed);

/// Uniformly random word of `width` bits (every bit independent).
Word gen_uniform(std::size_t width, std::uint64_t seed);

} // namespace popc
