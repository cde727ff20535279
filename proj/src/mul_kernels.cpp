#include "popc/mul_kernels.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#ifndef __SIZEOF_INT128__
#error "popc requires a compiler with unsigned __int128"
#endif

namespace popc::kernels {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace {

// out += a[rows_begin, rows_end) * b, rows at their natural offsets.
// Never writes outside [rows_begin, rows_end + b.size()), so disjoint row
// ranges can accumulate into disjoint buffers.
void mul_rows(std::span<const u64> a, std::span<const u64> b,
              std::span<u64> out, std::size_t rows_begin, std::size_t rows_end) {
    for (std::size_t i = rows_begin; i < rows_end; ++i) {
        const u64 ai = a[i];
        if (ai == 0)
            continue; // sparse multipliers make zero rows common
        u128 carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            carry += static_cast<u128>(ai) * b[j] + out[i + j];
            out[i + j] = static_cast<u64>(carry);
            carry >>= 64;
        }
        out[i + b.size()] = static_cast<u64>(carry);
    }
}

} // namespace

void mul_serial(std::span<const u64> a, std::span<const u64> b,
                std::span<u64> out) {
    assert(out.size() == a.size() + b.size());
    std::fill(out.begin(), out.end(), 0);
    mul_rows(a, b, out, 0, a.size());
}

void mul_parallel(std::span<const u64> a, std::span<const u64> b,
                  std::span<u64> out) {
#ifndef _OPENMP
    mul_serial(a, b, out);
#else
    assert(out.size() == a.size() + b.size());
    const int max_threads =
        std::min<int>(omp_get_max_threads(), static_cast<int>(a.size()));
    // Inside an enclosing parallel region a nested team serializes anyway;
    // trials are the parallel dimension there.
    if (max_threads <= 1 || omp_in_parallel()) {
        mul_serial(a, b, out);
        return;
    }

    std::vector<std::vector<u64>> partial(
        static_cast<std::size_t>(max_threads), std::vector<u64>(out.size(), 0));

#pragma omp parallel num_threads(max_threads)
    {
        // Partition by the team size actually granted, not the one requested.
        const std::size_t team = static_cast<std::size_t>(omp_get_num_threads());
        const std::size_t t = static_cast<std::size_t>(omp_get_thread_num());
        const std::size_t chunk = (a.size() + team - 1) / team;
        const std::size_t begin = std::min(t * chunk, a.size());
        const std::size_t end = std::min(begin + chunk, a.size());
        mul_rows(a, b, partial[t], begin, end);
    }

    // Partials are summed in thread order, so the result does not depend on
    // scheduling.
    std::fill(out.begin(), out.end(), 0);
    for (const auto& buf : partial) {
        u128 carry = 0;
        for (std::size_t j = 0; j < out.size(); ++j) {
            carry += static_cast<u128>(out[j]) + buf[j];
            out[j] = static_cast<u64>(carry);
            carry >>= 64;
        }
        assert(carry == 0);
    }
#endif
}

void mul_auto(std::span<const u64> a, std::span<const u64> b,
              std::span<u64> out) {
#ifdef _OPENMP
    if (a.size() * b.size() >= kParallelThreshold && omp_get_max_threads() > 1 &&
        !omp_in_parallel()) {
        mul_parallel(a, b, out);
        return;
    }
#endif
    mul_serial(a, b, out);
}

} // namespace popc::kernels
