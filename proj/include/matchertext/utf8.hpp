#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace matchertext::utf8 {

struct Decoded {
    char32_t scalar;
    unsigned length; // bytes consumed, 1..4
};

/// Decodes the scalar value starting at byte `pos`. Returns nullopt for any
/// malformed sequence: truncation, overlong form, surrogate, or > U+10FFFF.
std::optional<Decoded> decode(std::string_view text, std::size_t pos);

/// Appends the UTF-8 encoding of `scalar` to `out`. `scalar` must be a valid
/// Unicode scalar value.
void append(std::string& out, char32_t scalar);

std::string encode(char32_t scalar);

/// Byte offset of the first malformed sequence, or npos if the whole input
/// is well-formed UTF-8.
std::size_t find_invalid(std::string_view text);

inline bool is_valid(std::string_view text) {
    return find_invalid(text) == std::string_view::npos;
}

} // namespace matchertext::utf8
