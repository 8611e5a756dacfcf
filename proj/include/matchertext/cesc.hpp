#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matchertext::cesc {

/// How encode() renders a matcher that is unmatched within the input text.
enum class EscapeStyle {
    MatcherSelect,    ///< \o() \c() \o[] \c[] \o{} \c{}
    NumericHex,       ///< \xNN
    NumericUniversal, ///< \uNNNN
};

struct CodecError : std::runtime_error {
    enum class Kind {
        InvalidEscape,     ///< unknown or malformed sequence after backslash
        UnterminatedEmbed, ///< \[ with no matching ]
        NotMatchertext,    ///< input fails the matcher discipline
    };
    Kind kind;
    std::size_t offset;
    CodecError(Kind kind, std::size_t offset);
};

/// Decodes a string-literal body (the text between the quotes). The body
/// must itself be valid matchertext; this is checked before any escape is
/// interpreted. Recognized escapes: \n \t \r \0 \\ \" \' , \xNN, \uNNNN,
/// the matcher selects \o() \c() \o[] \c[] \o{} \c{}, and \[m] which splices
/// the matchertext m into the result verbatim, with no escape processing
/// inside m.
std::string decode(std::string_view body);

/// Produces a literal body that decodes back to `text` and is itself valid
/// matchertext. Backslash, the active quote and control characters get their
/// conventional escapes; matchers that already match within `text` are kept
/// verbatim; unmatched matchers are escaped per `style`. Nothing else is
/// touched. With `single_quoted`, apostrophes are escaped instead of double
/// quotes.
std::string encode(std::string_view text, EscapeStyle style, bool single_quoted = false);

/// Wraps valid matchertext `m` as the literal fragment \[m]. Verifies, never
/// transforms: throws CodecError{NotMatchertext} if m fails validation.
std::string embed(std::string_view m);

} // namespace matchertext::cesc
