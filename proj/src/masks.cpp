#include "popc/masks.hpp"

#include <stdexcept>
#include <vector>

namespace popc {

namespace {

using Limb = Word::Limb;

// Patterns with a period of at most one limb, indexed by level.
constexpr Limb kSelectPattern[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};
constexpr Limb kMsbPattern[7] = {
    0xFFFFFFFFFFFFFFFFull, 0xAAAAAAAAAAAAAAAAull, 0x8888888888888888ull,
    0x8080808080808080ull, 0x8000800080008000ull, 0x8000000080000000ull,
    0x8000000000000000ull,
};

Limb select_limb(unsigned level, std::size_t limb_index) {
    if (level < 6)
        return kSelectPattern[level];
    if (level >= 64)
        return ~Limb{0}; // block 0 swallows every representable bit
    // Blocks are whole multiples of a limb: even block index means ones.
    const std::size_t block = (limb_index * Word::kLimbBits) >> level;
    return (block & 1u) ? Limb{0} : ~Limb{0};
}

Limb msb_limb(unsigned level, std::size_t limb_index) {
    if (level < 7)
        return kMsbPattern[level];
    if (level >= 64)
        return 0;
    // One set bit per block, always the top bit of the block's last limb.
    const std::size_t limbs_per_block = (std::size_t{1} << level) / Word::kLimbBits;
    return ((limb_index + 1) % limbs_per_block == 0) ? 0x8000000000000000ull : 0;
}

} // namespace

std::uint64_t pow2(unsigned k) {
    if (k > 63)
        throw std::out_of_range("pow2: exponent past 63");
    return std::uint64_t{1} << k;
}

Word block_select_mask(unsigned level, std::size_t width) {
    std::vector<Limb> limbs(Word::limb_count(width));
    for (std::size_t i = 0; i < limbs.size(); ++i)
        limbs[i] = select_limb(level, i);
    return Word::from_limbs(std::move(limbs), width);
}

Word block_msb_mask(unsigned level, std::size_t width) {
    std::vector<Limb> limbs(Word::limb_count(width));
    for (std::size_t i = 0; i < limbs.size(); ++i)
        limbs[i] = msb_limb(level, i);
    return Word::from_limbs(std::move(limbs), width);
}

Word fold_multiplier(unsigned level, std::size_t width) {
    return (block_msb_mask(level, width) << 1) + Word(1, width);
}

} // namespace popc
