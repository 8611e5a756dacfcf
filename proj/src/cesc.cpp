#include "matchertext/cesc.hpp"

#include "matchertext/core.hpp"
#include "matchertext/utf8.hpp"

#include <cstdio>

namespace matchertext::cesc {

namespace {

const char* kind_name(CodecError::Kind k) {
    switch (k) {
    case CodecError::Kind::InvalidEscape: return "invalid escape";
    case CodecError::Kind::UnterminatedEmbed: return "unterminated embed";
    case CodecError::Kind::NotMatchertext: return "not matchertext";
    }
    return "?";
}

int hex_value(char c) {
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

bool is_select_pair(char open, char close) {
    return (open == '(' && close == ')') || (open == '[' && close == ']') ||
           (open == '{' && close == '}');
}

std::size_t first_violation_offset(std::string_view text, const MatcherConfig& config) {
    const auto vs = validate(text, config);
    return vs.empty() ? 0 : vs.front().offset;
}

void append_hex_escape(std::string& out, char32_t scalar) {
    char buf[12];
    std::snprintf(buf, sizeof(buf), "\\x%02X", static_cast<unsigned>(scalar) & 0xFFu);
    out.append(buf);
}

void append_universal_escape(std::string& out, char32_t scalar) {
    char buf[12];
    std::snprintf(buf, sizeof(buf), "\\u%04X", static_cast<unsigned>(scalar) & 0xFFFFu);
    out.append(buf);
}

} // namespace

CodecError::CodecError(Kind k, std::size_t off)
    : std::runtime_error(std::string(kind_name(k)) + " at byte offset " + std::to_string(off)),
      kind(k), offset(off) {}

std::string decode(std::string_view body) {
    if (!is_matchertext(body, MatcherConfig::standard()))
        throw CodecError(CodecError::Kind::NotMatchertext,
                         first_violation_offset(body, MatcherConfig::standard()));

    std::string out;
    out.reserve(body.size());
    std::size_t i = 0;
    while (i < body.size()) {
        const char b = body[i];
        if (b != '\\') {
            out.push_back(b);
            ++i;
            continue;
        }
        if (i + 1 >= body.size())
            throw CodecError(CodecError::Kind::InvalidEscape, i);
        const char e = body[i + 1];
        switch (e) {
        case 'n': out.push_back('\n'); i += 2; break;
        case 't': out.push_back('\t'); i += 2; break;
        case 'r': out.push_back('\r'); i += 2; break;
        case '0': out.push_back('\0'); i += 2; break;
        case '\\': out.push_back('\\'); i += 2; break;
        case '"': out.push_back('"'); i += 2; break;
        case '\'': out.push_back('\''); i += 2; break;
        case 'x': {
            if (i + 3 >= body.size())
                throw CodecError(CodecError::Kind::InvalidEscape, i);
            const int hi = hex_value(body[i + 2]);
            const int lo = hex_value(body[i + 3]);
            if (hi < 0 || lo < 0)
                throw CodecError(CodecError::Kind::InvalidEscape, i);
            utf8::append(out, static_cast<char32_t>(hi * 16 + lo));
            i += 4;
            break;
        }
        case 'u': {
            if (i + 5 >= body.size())
                throw CodecError(CodecError::Kind::InvalidEscape, i);
            unsigned v = 0;
            for (int k = 0; k < 4; ++k) {
                const int h = hex_value(body[i + 2 + k]);
                if (h < 0)
                    throw CodecError(CodecError::Kind::InvalidEscape, i);
                v = v * 16 + static_cast<unsigned>(h);
            }
            if (v >= 0xD800 && v <= 0xDFFF) // surrogate, not a scalar value
                throw CodecError(CodecError::Kind::InvalidEscape, i);
            utf8::append(out, static_cast<char32_t>(v));
            i += 6;
            break;
        }
        case 'o':
        case 'c': {
            if (i + 3 >= body.size() || !is_select_pair(body[i + 2], body[i + 3]))
                throw CodecError(CodecError::Kind::InvalidEscape, i);
            out.push_back(e == 'o' ? body[i + 2] : body[i + 3]);
            i += 4;
            break;
        }
        case '[': {
            std::size_t end;
            try {
                end = scan_embedded(body, i + 1, MatcherConfig::standard());
            } catch (const ScanError&) {
                // Unreachable once the body passed validation; kept so the
                // error contract holds if that precondition is ever relaxed.
                throw CodecError(CodecError::Kind::UnterminatedEmbed, i);
            }
            out.append(body.substr(i + 2, end - (i + 2)));
            i = end + 1;
            break;
        }
        default:
            throw CodecError(CodecError::Kind::InvalidEscape, i);
        }
    }
    return out;
}

std::string encode(std::string_view text, EscapeStyle style, bool single_quoted) {
    const auto invalid = utf8::find_invalid(text);
    if (invalid != std::string_view::npos)
        throw EncodingError(invalid);

    const auto& config = MatcherConfig::standard();
    const auto matched = matched_matchers(text, config);

    std::string out;
    out.reserve(text.size() + text.size() / 4);
    const char quote = single_quoted ? '\'' : '"';

    std::size_t i = 0;
    while (i < text.size()) {
        const auto d = utf8::decode(text, i);
        const char32_t c = d->scalar;
        if (c == U'\\') {
            out.append("\\\\");
        } else if (c == static_cast<char32_t>(quote)) {
            out.push_back('\\');
            out.push_back(quote);
        } else if (c == U'\n') {
            out.append("\\n");
        } else if (c == U'\t') {
            out.append("\\t");
        } else if (c == U'\r') {
            out.append("\\r");
        } else if (c == U'\0') {
            out.append("\\0");
        } else if (config.is_matcher(c) && !matched[i]) {
            switch (style) {
            case EscapeStyle::MatcherSelect: {
                const auto closer = config.closer_for(c);
                out.push_back('\\');
                if (closer) {
                    out.push_back('o');
                    out.push_back(static_cast<char>(c));
                    out.push_back(static_cast<char>(*closer));
                } else {
                    out.push_back('c');
                    out.push_back(static_cast<char>(*config.opener_for(c)));
                    out.push_back(static_cast<char>(c));
                }
                break;
            }
            case EscapeStyle::NumericHex: append_hex_escape(out, c); break;
            case EscapeStyle::NumericUniversal: append_universal_escape(out, c); break;
            }
        } else if (c < 0x20 || c == 0x7F || (c >= 0x80 && c <= 0x9F)) {
            append_hex_escape(out, c);
        } else {
            out.append(text.substr(i, d->length));
        }
        i += d->length;
    }
    return out;
}

std::string embed(std::string_view m) {
    if (!is_matchertext(m, MatcherConfig::standard()))
        throw CodecError(CodecError::Kind::NotMatchertext,
                         first_violation_offset(m, MatcherConfig::standard()));
    std::string out;
    out.reserve(m.size() + 3);
    out.append("\\[");
    out.append(m);
    out.push_back(']');
    return out;
}

} // namespace matchertext::cesc
