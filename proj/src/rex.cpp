#include "matchertext/rex.hpp"

#include "matchertext/core.hpp"

#include <cstdio>

namespace matchertext::rex {

namespace {

constexpr std::string_view kMetachars = ".^$*+?()[]{}|\\";

bool is_metachar(char c) {
    return kMetachars.find(c) != std::string_view::npos;
}

bool is_ascii_matcher(char c) {
    return c == '(' || c == ')' || c == '[' || c == ']' || c == '{' || c == '}';
}

char closer_of(char open) {
    switch (open) {
    case '(': return ')';
    case '[': return ']';
    case '{': return '}';
    }
    return 0;
}

void append_literal(std::string& out, std::string_view text) {
    for (const char c : text) {
        if (is_metachar(c))
            out.push_back('\\');
        out.push_back(c);
    }
}

void append_hex(std::string& out, char c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "\\x%02X", static_cast<unsigned char>(c));
    out.append(buf);
}

// Class interiors: matchers become \xNN so no engine can confuse them with
// the class delimiters; arrow selectors pick one matcher of a pair.
void translate_class(std::string& out, std::string_view pattern, std::size_t open,
                     std::size_t close) {
    out.push_back('[');
    std::size_t q = open + 1;
    if (q < close && pattern[q] == '^') {
        out.push_back('^');
        ++q;
    }
    while (q < close) {
        const char c = pattern[q];
        if ((c == '(' || c == '[' || c == '{') && q + 2 < close &&
            (pattern[q + 1] == '<' || pattern[q + 1] == '>') && pattern[q + 2] == closer_of(c)) {
            append_hex(out, pattern[q + 1] == '<' ? c : closer_of(c));
            q += 3;
            continue;
        }
        if (is_ascii_matcher(c)) {
            append_hex(out, c);
            ++q;
            continue;
        }
        out.push_back(c);
        ++q;
    }
    out.push_back(']');
}

} // namespace

TranslateError::TranslateError(Kind k, std::size_t off)
    : std::runtime_error(std::string(k == Kind::NotMatchertext ? "pattern is not matchertext"
                                     : k == Kind::UnterminatedQuote
                                         ? "unterminated verbatim quote"
                                         : "bad character-class selector") +
                         " at byte offset " + std::to_string(off)),
      kind(k), offset(off) {}

std::string translate(std::string_view pattern) {
    {
        const auto violations = validate(pattern, MatcherConfig::standard());
        if (!violations.empty())
            throw TranslateError(TranslateError::Kind::NotMatchertext,
                                 violations.front().offset);
    }

    std::string out;
    out.reserve(pattern.size() + pattern.size() / 4);
    std::size_t i = 0;
    const std::size_t n = pattern.size();
    while (i < n) {
        const char c = pattern[i];

        if (c == '{' && i + 1 < n && pattern[i + 1] == '{') {
            // {{m}}: the inner brace pair frames the quote. The inner brace's
            // own match must sit directly before the outer's closer.
            const std::size_t inner_close = scan_embedded(pattern, i + 1, MatcherConfig::standard());
            if (inner_close + 1 >= n || pattern[inner_close + 1] != '}')
                throw TranslateError(TranslateError::Kind::UnterminatedQuote, i);
            append_literal(out, pattern.substr(i + 2, inner_close - (i + 2)));
            i = inner_close + 2;
            continue;
        }

        if (c == '\\' && i + 3 < n && (pattern[i + 1] == 'o' || pattern[i + 1] == 'c') &&
            closer_of(pattern[i + 2]) == pattern[i + 3] && closer_of(pattern[i + 2]) != 0) {
            out.push_back('\\');
            out.push_back(pattern[i + 1] == 'o' ? pattern[i + 2] : pattern[i + 3]);
            i += 4;
            continue;
        }

        if (c == '\\') { // any other escape passes through untouched
            out.push_back(c);
            if (i + 1 < n) {
                out.push_back(pattern[i + 1]);
                i += 2;
            } else {
                ++i;
            }
            continue;
        }

        if (c == '[') {
            const std::size_t close = scan_embedded(pattern, i, MatcherConfig::standard());
            translate_class(out, pattern, i, close);
            i = close + 1;
            continue;
        }

        out.push_back(c);
        ++i;
    }
    return out;
}

} // namespace matchertext::rex
