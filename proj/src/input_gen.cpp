#include "popc/input_gen.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace popc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Bounded draw via modulo: biased by < 2^-40 for our ranges, and unlike
// std::uniform_int_distribution identical across standard libraries.
std::size_t draw_below(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

} // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                       std::uint64_t c) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    h = splitmix64(h ^ c);
    return h;
}

Word gen_input(std::size_t width, std::size_t ones, std::uint64_t seed) {
    if (ones > width)
        throw std::invalid_argument("gen_input: more ones than bits");

    std::mt19937_64 rng(seed);
    std::unordered_set<std::size_t> positions;
    positions.reserve(ones * 2);
    // Floyd's sampling: `ones` distinct positions in [0, width).
    for (std::size_t i = width - ones; i < width; ++i) {
        const std::size_t r = draw_below(rng, i + 1);
        positions.insert(positions.count(r) ? i : r);
    }

    std::vector<Word::Limb> limbs(Word::limb_count(width), 0);
    for (std::size_t pos : positions)
        limbs[pos / Word::kLimbBits] |= Word::Limb{1} << (pos % Word::kLimbBits);
    return Word::from_limbs(std::move(limbs), width);
}

Word gen_uniform(std::size_t width, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Word::Limb> limbs(Word::limb_count(width));
    for (auto& limb : limbs)
        limb = rng();
    return Word::from_limbs(std::move(limbs), width);
}

} // namespace popc
