#include "cubewalk/bitstring.hpp"

#include <bit>

#include "cubewalk/error.hpp"

namespace cubewalk {

BitString::BitString(std::uint64_t v, int w) : value(v), width(w) {
    if (w < 1 || w > kMaxBitWidth)
        fail(ErrorCode::InvalidArgument, "bit width " + std::to_string(w) + " outside 1.." + std::to_string(kMaxBitWidth));
    if (w < 64 && (v >> w) != 0)
        fail(ErrorCode::InvalidArgument, "value does not fit in " + std::to_string(w) + " bits");
}

int BitString::weight() const {
    return std::popcount(value);
}

std::string BitString::text() const {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int j = 0; j < width; ++j)
        if (bit(j)) out[static_cast<std::size_t>(width - 1 - j)] = '1';
    return out;
}

BitString parse_bits(std::string_view text) {
    if (text.empty())
        fail(ErrorCode::ParseError, "empty bit string");
    if (text.size() > static_cast<std::size_t>(kMaxBitWidth))
        fail(ErrorCode::ParseError, "bit string longer than " + std::to_string(kMaxBitWidth));
    std::uint64_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1')
            fail(ErrorCode::ParseError, "invalid character '" + std::string(1, c) + "' in bit string");
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString(v, static_cast<int>(text.size()));
}

BitString operator^(const BitString& a, const BitString& b) {
    if (a.width != b.width)
        fail(ErrorCode::WidthMismatch, "xor of widths " + std::to_string(a.width) + " and " + std::to_string(b.width));
    return BitString(a.value ^ b.value, a.width);
}

} // namespace cubewalk
