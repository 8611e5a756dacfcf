#include "matchertext/utf8.hpp"

namespace matchertext::utf8 {

namespace {

inline bool is_continuation(unsigned char b) {
    return (b & 0xC0) == 0x80;
}

} // namespace

std::optional<Decoded> decode(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        return std::nullopt;
    const unsigned char b0 = static_cast<unsigned char>(text[pos]);

    if (b0 < 0x80)
        return Decoded{b0, 1};
    if (b0 < 0xC2) // continuation byte or overlong 2-byte lead
        return std::nullopt;

    if (b0 < 0xE0) {
        if (pos + 1 >= text.size())
            return std::nullopt;
        const unsigned char b1 = static_cast<unsigned char>(text[pos + 1]);
        if (!is_continuation(b1))
            return std::nullopt;
        return Decoded{static_cast<char32_t>(((b0 & 0x1Fu) << 6) | (b1 & 0x3Fu)), 2};
    }

    if (b0 < 0xF0) {
        if (pos + 2 >= text.size())
            return std::nullopt;
        const unsigned char b1 = static_cast<unsigned char>(text[pos + 1]);
        const unsigned char b2 = static_cast<unsigned char>(text[pos + 2]);
        if (!is_continuation(b1) || !is_continuation(b2))
            return std::nullopt;
        const char32_t v = static_cast<char32_t>(((b0 & 0x0Fu) << 12) | ((b1 & 0x3Fu) << 6) | (b2 & 0x3Fu));
        if (v < 0x800)
            return std::nullopt; // overlong
        if (v >= 0xD800 && v <= 0xDFFF)
            return std::nullopt; // surrogate
        return Decoded{v, 3};
    }

    if (b0 < 0xF5) {
        if (pos + 3 >= text.size())
            return std::nullopt;
        const unsigned char b1 = static_cast<unsigned char>(text[pos + 1]);
        const unsigned char b2 = static_cast<unsigned char>(text[pos + 2]);
        const unsigned char b3 = static_cast<unsigned char>(text[pos + 3]);
        if (!is_continuation(b1) || !is_continuation(b2) || !is_continuation(b3))
            return std::nullopt;
        const char32_t v = static_cast<char32_t>(((b0 & 0x07u) << 18) | ((b1 & 0x3Fu) << 12) |
                                                 ((b2 & 0x3Fu) << 6) | (b3 & 0x3Fu));
        if (v < 0x10000 || v > 0x10FFFF)
            return std::nullopt;
        return Decoded{v, 4};
    }

    return std::nullopt;
}

void append(std::string& out, char32_t scalar) {
    const std::uint32_t v = scalar;
    if (v < 0x80) {
        out.push_back(static_cast<char>(v));
    } else if (v < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (v >> 6)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else if (v < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (v >> 12)));
        out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (v >> 18)));
        out.push_back(static_cast<char>(0x80 | ((v >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((v >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (v & 0x3F)));
    }
}

std::string encode(char32_t scalar) {
    std::string s;
    append(s, scalar);
    return s;
}

std::size_t find_invalid(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
        auto d = decode(text, i);
        if (!d)
            return i;
        i += d->length;
    }
    return std::string_view::npos;
}

} // namespace matchertext::utf8
