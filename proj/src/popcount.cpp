#include "popc/popcount.hpp"

#include <stdexcept>

#include "popc/masks.hpp"

namespace popc {

namespace {

bool is_pow2(std::size_t v) {
    return v != 0 && (v & (v - 1)) == 0;
}

void require_algo_width(const Word& x, std::size_t min_width) {
    if (!is_pow2(x.width()) || x.width() < min_width)
        throw std::invalid_argument("popcount: width must be a power of two >= " +
                                    std::to_string(min_width));
}

unsigned log2_width(std::size_t width) {
    unsigned k = 0;
    while ((std::size_t{1} << k) < width)
        ++k;
    return k;
}

} // namespace

std::uint64_t popcount_reference(const Word& x) {
    std::uint64_t n = 0;
    for (Word::Limb limb : x.limbs())
        for (; limb != 0; limb >>= 1)
            n += limb & 1u;
    return n;
}

CountResult popcount_wegner(const Word& x) {
    CountResult r;
    const Word minus_one = -Word(1, x.width());
    Word v = x;
    for (;;) {
        r.stats.compare_ops += 1;
        if (v.is_zero())
            break;
        v = v & (v + minus_one);
        r.stats.add_ops += 1;
        r.stats.logical_ops += 1;
        r.stats.iterations += 1;
        r.count += 1;
    }
    return r;
}

CountResult popcount_tree(const Word& x) {
    require_algo_width(x, 2);
    CountResult r;
    Word v = x;
    const unsigned levels = log2_width(x.width());
    for (unsigned k = 0; k < levels; ++k) {
        v = step_reduce(v, k);
        r.stats.logical_ops += 2;
        r.stats.shift_ops += 1;
        r.stats.add_ops += 1;
        r.stats.iterations += 1;
    }
    r.count = v.to_u64();
    return r;
}

CountResult popcount_gm_oblivious(const Word& x) {
    require_algo_width(x, 4);
    CountResult r;
    Word v = x;
    const unsigned levels = oblivious_levels(x.width());
    for (unsigned k = 0; k < levels; ++k) {
        v = step_reduce(v, k);
        r.stats.logical_ops += 2;
        r.stats.shift_ops += 1;
        r.stats.add_ops += 1;
        r.stats.iterations += 1;
    }
    const Word p = fold_multiply(v, levels);
    r.stats.mul_ops += 1;
    r.count = extract_total(p, levels, x.width());
    r.stats.shift_ops += 1;
    r.stats.logical_ops += 1;
    return r;
}

CountResult popcount_nonoblivious(const Word& x, bool record_trace) {
    require_algo_width(x, 4);
    CountResult r;
    if (record_trace)
        r.trace.emplace();

    Word v = x;
    unsigned level = 0;
    Word p = (-v).zero_extend(2 * x.width());
    r.stats.add_ops += 1;

    bool guard = overflow_guard(p, level);
    r.stats.logical_ops += 1;
    r.stats.compare_ops += 1;
    while (guard) {
        v = step_reduce(v, level);
        r.stats.logical_ops += 2;
        r.stats.shift_ops += 1;
        r.stats.add_ops += 1;
        p = fold_multiply(v, level + 1);
        r.stats.mul_ops += 1;
        ++level;
        r.stats.iterations += 1;
        guard = overflow_guard(p, level);
        r.stats.logical_ops += 1;
        r.stats.compare_ops += 1;
        if (record_trace)
            r.trace->push_back(TraceStep{level, v, p, guard});
    }
    r.count = extract_total(p, level, x.width());
    r.stats.shift_ops += 1;
    r.stats.logical_ops += 1;
    return r;
}

Word step_reduce(const Word& x, unsigned level) {
    const std::size_t block = pow2(level);
    if (2 * block > x.width())
        throw std::invalid_argument("step_reduce: paired blocks exceed width");
    const Word mask = block_select_mask(level, x.width());
    return (x & mask) + ((x >> block) & mask);
}

Word fold_multiply(const Word& x, unsigned level) {
    if (pow2(level) > x.width())
        throw std::invalid_argument("fold_multiply: block exceeds width");
    return mul_wide(x, fold_multiplier(level, x.width()));
}

bool overflow_guard(const Word& p, unsigned level) {
    return !(p & block_msb_mask(level, p.width())).is_zero();
}

std::uint64_t extract_total(const Word& p, unsigned level, std::size_t input_width) {
    const std::size_t block = pow2(level);
    if (p.width() != 2 * input_width)
        throw std::invalid_argument("extract_total: product width must be twice the input width");
    if (block > input_width)
        throw std::invalid_argument("extract_total: block exceeds input width");
    return p.extract(input_width - block, block).to_u64();
}

unsigned exit_level(std::uint64_t ones) {
    if (ones == 0)
        throw std::invalid_argument("exit_level: defined for ones >= 1");
    for (unsigned k = 1;; ++k) {
        const unsigned bits = (1u << k) - 1;
        if (bits >= 64 || ones < (std::uint64_t{1} << bits))
            return k;
    }
}

unsigned oblivious_levels(std::size_t width) {
    for (unsigned k = 0;; ++k) {
        const std::size_t block = std::size_t{1} << k;
        if (block >= 64 || (std::size_t{1} << block) > width)
            return k;
    }
}

} // namespace popc
