#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cubewalk {

// An n-bit string x_{n-1}...x_1x_0 stored as an unsigned integer.
// Bit j of `value` is x_j; text rendering is big-endian (x_{n-1} first).
struct BitString {
    std::uint64_t value = 0;
    int width = 1;

    BitString() = default;
    BitString(std::uint64_t v, int w);

    bool bit(int j) const { return (value >> j) & 1u; }
    int weight() const;
    bool is_zero() const { return value == 0; }

    std::string text() const;

    friend bool operator==(const BitString& a, const BitString& b) = default;
};

// Max width accepted anywhere; the walk itself is further capped by kMaxWalkWires.
inline constexpr int kMaxBitWidth = 62;

// Parses a big-endian 0/1 string; width is the character count.
BitString parse_bits(std::string_view text);

// XOR of two strings of equal width.
BitString operator^(const BitString& a, const BitString& b);

// Ordering by integer value (equal widths assumed); this is lexicographic
// order of the big-endian text for fixed width.
inline bool operator<(const BitString& a, const BitString& b) { return a.value < b.value; }

} // namespace cubewalk
