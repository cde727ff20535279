#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace popc {

/// Fixed-width unsigned binary word.
///
/// The width is a runtime parameter in bits, stored alongside the value so
/// experiments can scale word length independently of the host machine.
/// Values live in little-endian 64-bit limbs; bits above the width are kept
/// at zero. Words are immutable: every operation returns a new Word, so they
/// are safe to share across threads.
///
/// Arithmetic is exact. Addition and shifts are modular within the width;
/// mul_wide never truncates. Width mismatches and range violations throw
/// (std::invalid_argument, std::out_of_range, std::overflow_error).
class Word {
public:
    using Limb = std::uint64_t;
    static constexpr std::size_t kLimbBits = 64;

    /// Zero of the given width. width >= 1.
    explicit Word(std::size_t width);

    /// Word holding `value`; throws std::overflow_error if value >= 2^width.
    Word(std::uint64_t value, std::size_t width);

    /// Parses hex text with an optional "0x"/"0X" prefix, case-insensitive.
    /// Throws std::invalid_argument for malformed text, std::overflow_error
    /// if the value does not fit the width.
    static Word from_hex(std::string_view hex, std::size_t width);

    /// Builds a Word from little-endian limbs. `limbs` is resized to the
    /// limb count of `width`; bits above the width are discarded.
    static Word from_limbs(std::vector<Limb> limbs, std::size_t width);

    /// Uppercase hex with "0x" prefix, zero-padded to ceil(width/4) digits.
    std::string to_hex() const;

    std::size_t width() const { return width_; }
    std::span<const Limb> limbs() const { return limbs_; }

    bool is_zero() const;
    bool bit(std::size_t i) const;

    /// The numeric value; throws std::overflow_error if it needs > 64 bits.
    std::uint64_t to_u64() const;

    // Bitwise operations require equal widths.
    Word operator&(const Word& other) const;
    Word operator|(const Word& other) const;
    Word operator^(const Word& other) const;

    /// Addition mod 2^width; equal widths required.
    Word operator+(const Word& other) const;

    /// Two's-complement negation: (2^width - value) mod 2^width.
    Word operator-() const;

    /// Shifts within the width, s <= width. Left shift drops bits past the
    /// top; right shift is floor division by 2^s.
    Word operator<<(std::size_t s) const;
    Word operator>>(std::size_t s) const;

    /// Field extraction: floor(value / 2^offset) mod 2^len as a Word of
    /// width `len`. Requires len >= 1 and offset + len <= width.
    Word extract(std::size_t offset, std::size_t len) const;

    /// Same value at a wider width. new_width >= width.
    Word zero_extend(std::size_t new_width) const;

    bool operator==(const Word& other) const = default;

    static std::size_t limb_count(std::size_t width);

    friend Word mul_wide(const Word& a, const Word& b);

private:
    std::size_t width_;
    std::vector<Limb> limbs_;

    void trim();
    void check_same_width(const Word& other) const;
};

/// Exact product of two equal-width Words as a Word of twice the width.
Word mul_wide(const Word& a, const Word& b);

} // namespace popc
