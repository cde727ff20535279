#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "popc/word.hpp"

namespace popc {

/// Unit-cost operation counters. Every word-level primitive costs one unit
/// regardless of width: bitwise op, add or negate, shift, multiply, compare
/// against zero. Mask and multiplier constants are precomputed tables and
/// cost nothing.
struct OpStats {
    std::uint64_t logical_ops = 0;
    std::uint64_t add_ops = 0;
    std::uint64_t shift_ops = 0;
    std::uint64_t mul_ops = 0;
    std::uint64_t compare_ops = 0;
    std::uint64_t iterations = 0;

    std::uint64_t total_unit_ops() const {
        return logical_ops + add_ops + shift_ops + mul_ops + compare_ops;
    }
};

/// Snapshot taken at the end of each adaptive-loop iteration.
struct TraceStep {
    unsigned level = 0;  // block-length exponent after the increment
    Word x_after;        // width W; each 2^level block holds a partial count
    Word p_after;        // width 2W folded product
    bool guard = false;  // whether the loop continues from here
};

struct CountResult {
    std::uint64_t count = 0;
    OpStats stats;
    std::optional<std::vector<TraceStep>> trace;
};

/// Ground-truth oracle: walks every bit. No instrumentation.
std::uint64_t popcount_reference(const Word& x);

/// Clears the lowest set bit with x & (x - 1) until none remain; exactly
/// one iteration per one.
CountResult popcount_wegner(const Word& x);

/// Oblivious pairwise block summing, log2(width) levels. Width must be a
/// power of two >= 2.
CountResult popcount_tree(const Word& x);

/// Oblivious multiply-based count with the fixed schedule
/// k = 0 .. oblivious_levels(width) - 1. Width must be a power of two >= 4.
CountResult popcount_gm_oblivious(const Word& x);

/// Value-adaptive multiply-based count: block length doubles only until the
/// running sums fit their blocks, so the iteration count depends on the
/// number of ones, not the width. Width must be a power of two >= 4.
/// With record_trace, every loop iteration appends a TraceStep.
CountResult popcount_nonoblivious(const Word& x, bool record_trace = false);

/// One reduction level: adjacent 2^level-bit blocks are added pairwise into
/// 2^(level+1)-bit blocks, each holding the sum of its two halves.
/// Requires 2^(level+1) <= x.width().
Word step_reduce(const Word& x, unsigned level);

/// Product of x with fold_multiplier(level, x.width()) at twice the width.
/// When x consists of 2^level-bit blocks, block t of the product holds the
/// sum of the blocks x_i over i + i' = t, i.e. running prefix/suffix sums;
/// the block just below the midpoint holds the grand total.
/// Requires 2^level <= x.width().
Word fold_multiply(const Word& x, unsigned level);

/// True iff some 2^level-bit block of p has its top bit set, meaning
/// 2^level - 1 bits no longer suffice for every running sum.
bool overflow_guard(const Word& p, unsigned level);

/// The 2^level-bit block of the double-width product ending just below the
/// input-width midpoint; once the guard is clear it holds the exact total.
/// Requires p.width() == 2 * input_width and 2^level <= input_width.
std::uint64_t extract_total(const Word& p, unsigned level, std::size_t input_width);

/// Smallest k >= 1 with ones < 2^(2^k - 1): the exact number of loop
/// iterations popcount_nonoblivious performs on any input with that many
/// ones. Requires ones >= 1 (zero inputs never enter the loop).
unsigned exit_level(std::uint64_t ones);

/// Level count of the fixed oblivious schedule: min{k : 2^(2^k) > width}.
unsigned oblivious_levels(std::size_t width);

} // namespace popc
