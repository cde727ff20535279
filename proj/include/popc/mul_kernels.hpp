#pragma once

#include <cstdint>
#include <span>

namespace popc::kernels {

/// Schoolbook product of little-endian limb vectors, serial reference
/// version. out must have exactly a.size() + b.size() limbs; it is
/// overwritten.
void mul_serial(std::span<const std::uint64_t> a,
                std::span<const std::uint64_t> b,
                std::span<std::uint64_t> out);

/// Row-partitioned product: threads multiply disjoint blocks of a's limbs
/// into private accumulators which are then summed in fixed order.
/// Bit-identical to mul_serial; falls back to it when OpenMP is absent.
void mul_parallel(std::span<const std::uint64_t> a,
                  std::span<const std::uint64_t> b,
                  std::span<std::uint64_t> out);

/// Dispatches to mul_parallel once the limb-product count makes the thread
/// and buffer overhead worthwhile, mul_serial otherwise.
void mul_auto(std::span<const std::uint64_t> a,
              std::span<const std::uint64_t> b,
              std::span<std::uint64_t> out);

/// Limb-product count above which mul_auto goes parallel.
inline constexpr std::size_t kParallelThreshold = 1u << 15;

} // namespace popc::kernels
