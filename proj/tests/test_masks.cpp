#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "popc/masks.hpp"
#include "popc/popcount.hpp"
#include "popc/word.hpp"

using popc::block_msb_mask;
using popc::block_select_mask;
using popc::fold_multiplier;
using popc::pow2;
using popc::Word;

TEST_CASE("pow2") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(3) == 8);
    CHECK(pow2(10) == 1024);
    CHECK(pow2(63) == 1ull << 63);
    CHECK_THROWS_AS(pow2(64), std::out_of_range);
}

TEST_CASE("select mask, known patterns") {
    CHECK(block_select_mask(0, 8) == Word(0x55, 8));
    CHECK(block_select_mask(1, 8) == Word(0x33, 8));
    CHECK(block_select_mask(2, 8) == Word(0x0F, 8));
    CHECK(block_select_mask(0, 64) == Word(0x5555555555555555ull, 64));
    CHECK(block_select_mask(6, 128).to_hex() ==
          "0x0000000000000000FFFFFFFFFFFFFFFF");
    // block longer than the word: the low all-ones block is truncated
    CHECK(block_select_mask(4, 8) == Word(0xFF, 8));
    CHECK(block_select_mask(70, 8) == Word(0xFF, 8));
}

TEST_CASE("msb mask, known patterns") {
    CHECK(block_msb_mask(0, 8) == Word(0xFF, 8));
    CHECK(block_msb_mask(1, 8) == Word(0xAA, 8));
    CHECK(block_msb_mask(3, 8) == Word(0x80, 8));
    CHECK(block_msb_mask(6, 128).to_hex() ==
          "0x80000000000000008000000000000000");
    CHECK(block_msb_mask(7, 128).to_hex() ==
          "0x80000000000000000000000000000000");
    // block longer than the word: no block top bit falls inside it
    CHECK(block_msb_mask(4, 8) == Word(0, 8));
    CHECK(block_msb_mask(70, 8) == Word(0, 8));
}

TEST_CASE("per-bit definition, exhaustive at small widths") {
    for (std::size_t width = 1; width <= 64; ++width) {
        for (unsigned level = 0; level <= 8; ++level) {
            const Word select = block_select_mask(level, width);
            const Word msb = block_msb_mask(level, width);
            const std::uint64_t block = 1ull << level;
            for (std::size_t i = 0; i < width; ++i) {
                CAPTURE(width);
                CAPTURE(level);
                CAPTURE(i);
                CHECK(select.bit(i) == ((i / block) % 2 == 0));
                CHECK(msb.bit(i) == (i % block == block - 1));
            }
        }
    }
}

TEST_CASE("per-bit definition, spot checks at large widths") {
    for (std::size_t width : {256u, 1024u, 4096u}) {
        for (unsigned level : {5u, 6u, 7u, 10u, 12u}) {
            const Word select = block_select_mask(level, width);
            const Word msb = block_msb_mask(level, width);
            const std::uint64_t block = 1ull << level;
            for (std::size_t i = 0; i < width; i += 37) {
                CHECK(select.bit(i) == ((i / block) % 2 == 0));
                CHECK(msb.bit(i) == (i % block == block - 1));
            }
            // block boundaries are where mistakes would hide
            for (std::uint64_t b = block - 1; b < width; b += block) {
                CHECK(msb.bit(b));
                if (b + 1 < width)
                    CHECK_FALSE(msb.bit(b + 1));
            }
        }
    }
}

TEST_CASE("select mask and its shift tile the word") {
    for (std::size_t width : {8u, 64u, 256u, 4096u}) {
        for (unsigned level = 0; (2ull << level) <= width; ++level) {
            if (width % (2ull << level) != 0)
                continue;
            const Word select = block_select_mask(level, width);
            const Word all_ones = -Word(1, width);
            CHECK((select | (select << pow2(level))) == all_ones);
            CHECK(popc::popcount_reference(select) == width / 2);
        }
    }
}

TEST_CASE("msb mask density") {
    for (std::size_t width : {8u, 64u, 256u, 4096u}) {
        for (unsigned level = 0; (1ull << level) <= width; ++level) {
            if (width % (1ull << level) != 0)
                continue;
            CHECK(popc::popcount_reference(block_msb_mask(level, width)) ==
                  width >> level);
        }
    }
}

TEST_CASE("fold multiplier has ones at block starts only") {
    CHECK(fold_multiplier(1, 8) == Word(0x55, 8));
    CHECK(fold_multiplier(2, 8) == Word(0x11, 8));
    CHECK(fold_multiplier(3, 8) == Word(0x01, 8));
    CHECK(fold_multiplier(2, 4) == Word(0x1, 4)); // top bit wraps off
    for (std::size_t width : {8u, 16u, 64u, 1024u}) {
        for (unsigned level = 1; (1ull << level) <= width; ++level) {
            const Word m = fold_multiplier(level, width);
            for (std::size_t i = 0; i < width; ++i)
                CHECK(m.bit(i) == (i % (1ull << level) == 0));
        }
    }
}
