#include "popc/word.hpp"

#include <cassert>
#include <stdexcept>

#include "popc/mul_kernels.hpp"

namespace popc {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

} // namespace

std::size_t Word::limb_count(std::size_t width) {
    return (width + kLimbBits - 1) / kLimbBits;
}

Word::Word(std::size_t width) : width_(width), limbs_(limb_count(width), 0) {
    if (width == 0)
        throw std::invalid_argument("Word: width must be positive");
}

Word::Word(std::uint64_t value, std::size_t width) : Word(width) {
    if (width < 64 && (value >> width) != 0)
        throw std::overflow_error("Word: value does not fit width");
    limbs_[0] = value;
}

Word Word::from_limbs(std::vector<Limb> limbs, std::size_t width) {
    Word w(width);
    limbs.resize(limb_count(width), 0);
    w.limbs_ = std::move(limbs);
    w.trim();
    return w;
}

Word Word::from_hex(std::string_view hex, std::size_t width) {
    if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X'))
        hex.remove_prefix(2);
    if (hex.empty())
        throw std::invalid_argument("Word: empty hex literal");

    Word w(width);
    for (char c : hex) {
        const int d = hex_digit(c);
        if (d < 0)
            throw std::invalid_argument(std::string("Word: bad hex digit '") + c + "'");
        // w = w * 16 + d
        Limb carry = static_cast<Limb>(d);
        for (auto& limb : w.limbs_) {
            const Limb top = limb >> (kLimbBits - 4);
            limb = (limb << 4) | carry;
            carry = top;
        }
        if (carry != 0)
            throw std::overflow_error("Word: hex value does not fit width");
    }
    Word trimmed = w;
    trimmed.trim();
    if (trimmed.limbs_ != w.limbs_)
        throw std::overflow_error("Word: hex value does not fit width");
    return trimmed;
}

std::string Word::to_hex() const {
    const std::size_t digits = (width_ + 3) / 4;
    std::string out(digits + 2, '0');
    out[1] = 'x';
    static const char* kDigits = "0123456789ABCDEF";
    for (std::size_t d = 0; d < digits; ++d) {
        const std::size_t bit = 4 * d;
        const Limb nibble = (limbs_[bit / kLimbBits] >> (bit % kLimbBits)) & 0xFu;
        out[2 + (digits - 1 - d)] = kDigits[nibble];
    }
    return out;
}

bool Word::is_zero() const {
    for (Limb limb : limbs_)
        if (limb != 0)
            return false;
    return true;
}

bool Word::bit(std::size_t i) const {
    if (i >= width_)
        throw std::out_of_range("Word: bit index past width");
    return (limbs_[i / kLimbBits] >> (i % kLimbBits)) & 1u;
}

std::uint64_t Word::to_u64() const {
    for (std::size_t i = 1; i < limbs_.size(); ++i)
        if (limbs_[i] != 0)
            throw std::overflow_error("Word: value exceeds 64 bits");
    return limbs_[0];
}

void Word::trim() {
    const std::size_t top_bits = width_ % kLimbBits;
    if (top_bits != 0)
        limbs_.back() &= (Limb{1} << top_bits) - 1;
}

void Word::check_same_width(const Word& other) const {
    if (width_ != other.width_)
        throw std::invalid_argument("Word: width mismatch");
}

Word Word::operator&(const Word& other) const {
    check_same_width(other);
    Word out(width_);
    for (std::size_t i = 0; i < limbs_.size(); ++i)
        out.limbs_[i] = limbs_[i] & other.limbs_[i];
    return out;
}

Word Word::operator|(const Word& other) const {
    check_same_width(other);
    Word out(width_);
    for (std::size_t i = 0; i < limbs_.size(); ++i)
        out.limbs_[i] = limbs_[i] | other.limbs_[i];
    return out;
}

Word Word::operator^(const Word& other) const {
    check_same_width(other);
    Word out(width_);
    for (std::size_t i = 0; i < limbs_.size(); ++i)
        out.limbs_[i] = limbs_[i] ^ other.limbs_[i];
    return out;
}

Word Word::operator+(const Word& other) const {
    check_same_width(other);
    Word out(width_);
    Limb carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const Limb sum = limbs_[i] + other.limbs_[i];
        const Limb with_carry = sum + carry;
        out.limbs_[i] = with_carry;
        carry = (sum < limbs_[i]) | (with_carry < sum);
    }
    out.trim();
    return out;
}

Word Word::operator-() const {
    Word out(width_);
    Limb carry = 1;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        out.limbs_[i] = ~limbs_[i] + carry;
        carry = carry & (out.limbs_[i] == 0);
    }
    out.trim();
    return out;
}

Word Word::operator<<(std::size_t s) const {
    if (s > width_)
        throw std::out_of_range("Word: shift past width");
    Word out(width_);
    const std::size_t limb_shift = s / kLimbBits;
    const std::size_t bit_shift = s % kLimbBits;
    for (std::size_t i = limbs_.size(); i-- > limb_shift;) {
        Limb v = limbs_[i - limb_shift] << bit_shift;
        if (bit_shift != 0 && i > limb_shift)
            v |= limbs_[i - limb_shift - 1] >> (kLimbBits - bit_shift);
        out.limbs_[i] = v;
    }
    out.trim();
    return out;
}

Word Word::operator>>(std::size_t s) const {
    if (s > width_)
        throw std::out_of_range("Word: shift past width");
    Word out(width_);
    const std::size_t limb_shift = s / kLimbBits;
    const std::size_t bit_shift = s % kLimbBits;
    for (std::size_t i = 0; i + limb_shift < limbs_.size(); ++i) {
        Limb v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift != 0 && i + limb_shift + 1 < limbs_.size())
            v |= limbs_[i + limb_shift + 1] << (kLimbBits - bit_shift);
        out.limbs_[i] = v;
    }
    return out;
}

Word Word::extract(std::size_t offset, std::size_t len) const {
    if (len == 0)
        throw std::invalid_argument("Word: extract length must be positive");
    if (offset + len > width_)
        throw std::out_of_range("Word: extract range past width");
    const Word shifted = *this >> offset;
    std::vector<Limb> limbs(shifted.limbs_.begin(),
                            shifted.limbs_.begin() +
                                static_cast<std::ptrdiff_t>(limb_count(len)));
    return from_limbs(std::move(limbs), len);
}

Word Word::zero_extend(std::size_t new_width) const {
    if (new_width < width_)
        throw std::invalid_argument("Word: zero_extend cannot narrow");
    Word out(new_width);
    for (std::size_t i = 0; i < limbs_.size(); ++i)
        out.limbs_[i] = limbs_[i];
    return out;
}

Word mul_wide(const Word& a, const Word& b) {
    a.check_same_width(b);
    const std::size_t product_width = 2 * a.width_;
    std::vector<Word::Limb> out(a.limbs_.size() + b.limbs_.size(), 0);
    kernels::mul_auto(a.limbs_, b.limbs_, out);
#ifndef NDEBUG
    // a, b < 2^W, so the product always fits 2W bits.
    for (std::size_t i = Word::limb_count(product_width); i < out.size(); ++i)
        assert(out[i] == 0);
#endif
    return Word::from_limbs(std::move(out), product_width);
}

} // namespace popc
