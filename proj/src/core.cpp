#include "matchertext/core.hpp"

#include "matchertext/utf8.hpp"

#include <algorithm>

namespace matchertext {

bool in_alphabet(char32_t scalar, Alphabet alphabet) {
    if (alphabet == Alphabet::AllUnicodeScalars)
        return true;
    // Graphical only: drop space, DEL and the C0/C1 control blocks.
    if (scalar <= 0x20 || scalar == 0x7F)
        return false;
    if (scalar >= 0x80 && scalar <= 0x9F)
        return false;
    return true;
}

EncodingError::EncodingError(std::size_t off)
    : std::runtime_error("malformed UTF-8 at byte offset " + std::to_string(off)), offset(off) {}

MatcherConfig::MatcherConfig(std::vector<std::pair<char32_t, char32_t>> pairs, Alphabet alphabet)
    : pairs_(std::move(pairs)), alphabet_(alphabet) {
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        const auto [o, c] = pairs_[i];
        if (o == c)
            throw ConfigError("matcher pair uses the same character for both roles");
        if (!in_alphabet(o) || !in_alphabet(c))
            throw ConfigError("matcher pair member outside the configured alphabet");
        for (std::size_t j = 0; j < pairs_.size(); ++j) {
            if (i == j)
                continue;
            const auto [o2, c2] = pairs_[j];
            if (o == o2 || o == c2 || c == o2 || c == c2)
                throw ConfigError("character appears in more than one matcher pair role");
        }
    }
}

const MatcherConfig& MatcherConfig::standard() {
    static const MatcherConfig config({{U'(', U')'}, {U'[', U']'}, {U'{', U'}'}},
                                      Alphabet::AllUnicodeScalars);
    return config;
}

const MatcherConfig& MatcherConfig::graphical() {
    static const MatcherConfig config({{U'(', U')'}, {U'[', U']'}, {U'{', U'}'}},
                                      Alphabet::GraphicalOnly);
    return config;
}

bool MatcherConfig::is_opener(char32_t scalar) const {
    for (const auto& [o, c] : pairs_)
        if (o == scalar)
            return true;
    return false;
}

bool MatcherConfig::is_closer(char32_t scalar) const {
    for (const auto& [o, c] : pairs_)
        if (c == scalar)
            return true;
    return false;
}

std::optional<char32_t> MatcherConfig::closer_for(char32_t opener) const {
    for (const auto& [o, c] : pairs_)
        if (o == opener)
            return c;
    return std::nullopt;
}

std::optional<char32_t> MatcherConfig::opener_for(char32_t closer) const {
    for (const auto& [o, c] : pairs_)
        if (c == closer)
            return o;
    return std::nullopt;
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::UnmatchedOpener: return "UnmatchedOpener";
    case ViolationKind::UnexpectedCloser: return "UnexpectedCloser";
    case ViolationKind::MismatchedPair: return "MismatchedPair";
    case ViolationKind::ForbiddenChar: return "ForbiddenChar";
    }
    return "?";
}

std::vector<Violation> validate(std::string_view text, const MatcherConfig& config) {
    struct Open {
        char32_t scalar;
        std::size_t offset;
        std::size_t line;
        std::size_t column;
    };
    std::vector<Violation> out;
    std::vector<Open> stack;

    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto d = utf8::decode(text, i);
        if (!d)
            throw EncodingError(i);
        const char32_t c = d->scalar;

        if (!config.in_alphabet(c)) {
            out.push_back({i, line, column, ViolationKind::ForbiddenChar, c, std::nullopt});
        } else if (config.is_opener(c)) {
            stack.push_back({c, i, line, column});
        } else if (config.is_closer(c)) {
            if (stack.empty()) {
                out.push_back({i, line, column, ViolationKind::UnexpectedCloser, c, std::nullopt});
            } else {
                const auto want = config.closer_for(stack.back().scalar);
                if (want && *want == c) {
                    stack.pop_back();
                } else {
                    out.push_back({i, line, column, ViolationKind::MismatchedPair, c, want});
                    stack.pop_back(); // recover so later problems surface independently
                }
            }
        }

        if (c == U'\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        i += d->length;
    }

    for (const auto& open : stack)
        out.push_back({open.offset, open.line, open.column, ViolationKind::UnmatchedOpener,
                       open.scalar, std::nullopt});

    std::stable_sort(out.begin(), out.end(),
                     [](const Violation& a, const Violation& b) { return a.offset < b.offset; });
    return out;
}

bool is_matchertext(std::string_view text, const MatcherConfig& config) {
    std::vector<char32_t> stack;
    std::size_t i = 0;
    while (i < text.size()) {
        const auto d = utf8::decode(text, i);
        if (!d)
            throw EncodingError(i);
        const char32_t c = d->scalar;
        if (!config.in_alphabet(c))
            return false;
        if (config.is_opener(c)) {
            stack.push_back(c);
        } else if (config.is_closer(c)) {
            if (stack.empty() || config.closer_for(stack.back()) != c)
                return false;
            stack.pop_back();
        }
        i += d->length;
    }
    return stack.empty();
}

ScanError::ScanError(Kind k, std::size_t off, std::size_t dep)
    : std::runtime_error(std::string(k == Kind::NoMatchingCloser
                                         ? "no matching closer; innermost opener at byte "
                                         : "mismatched closer inside embedded scan at byte ") +
                         std::to_string(off) + " (depth " + std::to_string(dep) + ")"),
      kind(k), offset(off), depth(dep) {}

std::size_t scan_embedded(std::string_view text, std::size_t open_index,
                          const MatcherConfig& config) {
    const auto first = utf8::decode(text, open_index);
    if (!first)
        throw EncodingError(open_index);
    if (!config.is_opener(first->scalar))
        throw std::invalid_argument("scan_embedded: open_index does not point at an opener");

    struct Open {
        char32_t scalar;
        std::size_t offset;
    };
    std::vector<Open> stack{{first->scalar, open_index}};

    std::size_t i = open_index + first->length;
    while (i < text.size()) {
        const auto d = utf8::decode(text, i);
        if (!d)
            throw EncodingError(i);
        const char32_t c = d->scalar;
        if (config.is_opener(c)) {
            stack.push_back({c, i});
        } else if (config.is_closer(c)) {
            if (config.closer_for(stack.back().scalar) == c) {
                stack.pop_back();
                if (stack.empty())
                    return i;
            } else {
                throw ScanError(ScanError::Kind::MismatchedInterior, i, stack.size());
            }
        }
        i += d->length;
    }
    throw ScanError(ScanError::Kind::NoMatchingCloser, stack.back().offset, stack.size());
}

std::vector<bool> matched_matchers(std::string_view text, const MatcherConfig& config) {
    std::vector<bool> matched(text.size(), false);
    struct Open {
        char32_t scalar;
        std::size_t offset;
    };
    std::vector<Open> stack;

    std::size_t i = 0;
    while (i < text.size()) {
        const auto d = utf8::decode(text, i);
        if (!d)
            throw EncodingError(i);
        const char32_t c = d->scalar;
        if (config.is_opener(c)) {
            stack.push_back({c, i});
        } else if (config.is_closer(c)) {
            // Pair with the nearest opener of the same kind. Entries above it
            // are crossed by the new pair and can never match afterwards;
            // once escaped they no longer take part in the nesting at all.
            const auto opener = config.opener_for(c);
            for (std::size_t k = stack.size(); k-- > 0;) {
                if (stack[k].scalar == *opener) {
                    matched[stack[k].offset] = true;
                    matched[i] = true;
                    stack.resize(k);
                    break;
                }
            }
        }
        i += d->length;
    }
    return matched;
}

std::vector<std::size_t> EmbedDelimiters::unmatched_opener_offsets(const MatcherConfig& config) const {
    std::vector<std::size_t> offs;
    for (const auto& v : validate(opener, config))
        if (v.kind == ViolationKind::UnmatchedOpener)
            offs.push_back(v.offset);
    return offs;
}

std::vector<std::size_t> EmbedDelimiters::unmatched_closer_offsets(const MatcherConfig& config) const {
    std::vector<std::size_t> offs;
    for (const auto& v : validate(closer, config))
        if (v.kind == ViolationKind::UnexpectedCloser)
            offs.push_back(v.offset);
    return offs;
}

EmbedDelimiters EmbedDelimiters::make(std::string opener, std::string closer,
                                      const MatcherConfig& config) {
    EmbedDelimiters d{std::move(opener), std::move(closer)};

    std::vector<char32_t> open_scalars;
    for (const auto& v : validate(d.opener, config)) {
        if (v.kind != ViolationKind::UnmatchedOpener)
            throw ConfigError("embed opener may only violate by leaving openers unmatched");
        open_scalars.push_back(v.found);
    }
    if (open_scalars.empty())
        throw ConfigError("embed opener must contain an unmatched opener");

    std::vector<char32_t> close_scalars;
    for (const auto& v : validate(d.closer, config)) {
        if (v.kind != ViolationKind::UnexpectedCloser)
            throw ConfigError("embed closer may only violate by unexpected closers");
        close_scalars.push_back(v.found);
    }
    if (close_scalars.size() != open_scalars.size())
        throw ConfigError("embed closer must close exactly the opener's unmatched openers");

    // Innermost unmatched opener closes first.
    for (std::size_t i = 0; i < open_scalars.size(); ++i) {
        const auto want = config.closer_for(open_scalars[open_scalars.size() - 1 - i]);
        if (!want || close_scalars[i] != *want)
            throw ConfigError("embed closer pairs do not mirror the opener's, in reverse order");
    }
    return d;
}

} // namespace matchertext
