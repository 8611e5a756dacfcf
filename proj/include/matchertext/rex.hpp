#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matchertext::rex {

struct TranslateError : std::runtime_error {
    enum class Kind {
        NotMatchertext,
        UnterminatedQuote,
        BadClassSelector,
    };
    Kind kind;
    std::size_t offset;
    TranslateError(Kind kind, std::size_t offset);
};

/// Translates a matchertext-extended regular expression into a plain
/// backslash-escaped dialect:
///   {{m}}          verbatim quote; every character of m is emitted as a
///                  literal with the usual metacharacter escaping
///   \o() \c() ...  matcher selects outside classes; the chosen matcher is
///                  emitted backslash-escaped
///   (<) (>) [<] [>] {<} {>}   selectors inside a character class; emitted
///                  as \xNN, as are plain matcher characters in a class so
///                  downstream engines cannot misread the class end
/// Everything else passes through unchanged. The input must be valid
/// matchertext; the output generally is not.
std::string translate(std::string_view pattern);

} // namespace matchertext::rex
