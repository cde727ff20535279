#pragma once

#include <cstdint>

#include "popc/word.hpp"

namespace popc {

/// 2^k. Requires k <= 63.
std::uint64_t pow2(unsigned k);

/// Alternating blocks of 2^k ones and 2^k zeros with ones in the lowest
/// block: bit i is set iff floor(i / 2^k) is even. Truncated to `width`
/// bits; at width 64 the first three levels are the classic
/// 0x5555..., 0x3333..., 0x0F0F... constants.
Word block_select_mask(unsigned level, std::size_t width);

/// The most significant bit of every 2^k-bit block: bit i is set iff
/// i mod 2^k == 2^k - 1. Truncated to `width` bits, so the mask is all
/// zeros once the block length exceeds the width.
Word block_msb_mask(unsigned level, std::size_t width);

/// (2 * block_msb_mask(level, width) + 1) mod 2^width: ones exactly at the
/// bit positions that are multiples of 2^level. Multiplying by it makes
/// every block of the double-width product accumulate a running sum of the
/// operand's blocks.
Word fold_multiplier(unsigned level, std::size_t width);

} // namespace popc
