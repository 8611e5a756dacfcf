#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchertext {

/// Character repertoire a configuration admits.
enum class Alphabet {
    AllUnicodeScalars, ///< every Unicode scalar value
    GraphicalOnly,     ///< excludes space, C0/C1 control codes and DEL
};

bool in_alphabet(char32_t scalar, Alphabet alphabet);

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when input is not well-formed UTF-8. Encoding problems are outside
/// the matchertext model and are never reported as Violations.
struct EncodingError : std::runtime_error {
    std::size_t offset;
    explicit EncodingError(std::size_t off);
};

/// A matcher configuration: the admitted alphabet plus the set of
/// opener/closer pairs that must match. The standard configuration pairs
/// the three ASCII brackets () [] {} over all Unicode scalars.
class MatcherConfig {
public:
    /// Throws ConfigError if any character plays two pair roles, a pair
    /// member falls outside the alphabet, or a pair is duplicated.
    MatcherConfig(std::vector<std::pair<char32_t, char32_t>> pairs, Alphabet alphabet);

    static const MatcherConfig& standard();
    /// Standard pairs over the graphical-only alphabet.
    static const MatcherConfig& graphical();

    bool in_alphabet(char32_t scalar) const { return matchertext::in_alphabet(scalar, alphabet_); }
    bool is_opener(char32_t scalar) const;
    bool is_closer(char32_t scalar) const;
    bool is_matcher(char32_t scalar) const { return is_opener(scalar) || is_closer(scalar); }

    /// Closer paired with `opener`, or nullopt if `opener` is not an opener.
    std::optional<char32_t> closer_for(char32_t opener) const;
    std::optional<char32_t> opener_for(char32_t closer) const;

    const std::vector<std::pair<char32_t, char32_t>>& pairs() const { return pairs_; }
    Alphabet alphabet() const { return alphabet_; }

private:
    std::vector<std::pair<char32_t, char32_t>> pairs_;
    Alphabet alphabet_;
};

enum class ViolationKind {
    UnmatchedOpener,  ///< opener never closed
    UnexpectedCloser, ///< closer with no open construct
    MismatchedPair,   ///< closer of the wrong pair for the innermost opener
    ForbiddenChar,    ///< character outside the configured alphabet
};

const char* to_string(ViolationKind kind);

/// One breach of the matcher discipline. `offset` is the byte index of
/// `found`; `line` is 1-based counting LF separators only; `column` is the
/// 1-based character column on that line.
struct Violation {
    std::size_t offset;
    std::size_t line;
    std::size_t column;
    ViolationKind kind;
    char32_t found;
    std::optional<char32_t> expected; ///< set for MismatchedPair only

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Checks that matchers match throughout `text`. Returns all violations in
/// input order; an empty result means `text` is valid matchertext under
/// `config`. A mismatched closer pops the open construct anyway and an
/// unexpected closer is skipped, so independent problems are all reported.
/// Throws EncodingError on malformed UTF-8.
std::vector<Violation> validate(std::string_view text,
                                const MatcherConfig& config = MatcherConfig::standard());

bool is_matchertext(std::string_view text,
                    const MatcherConfig& config = MatcherConfig::standard());

struct ScanError : std::runtime_error {
    enum class Kind {
        NoMatchingCloser,   ///< input ended while constructs remain open
        MismatchedInterior, ///< closer of the wrong pair inside the scan
    };
    Kind kind;
    /// NoMatchingCloser: position of the innermost unclosed opener.
    /// MismatchedInterior: position of the offending closer.
    std::size_t offset;
    std::size_t depth; ///< open constructs at the point of failure
    ScanError(Kind kind, std::size_t offset, std::size_t depth);
};

/// `text[open_index]` must be an opener character. Returns the index of the
/// closer that matches it, i.e. the smallest j such that the substring
/// strictly between the two positions has fully matched matchers. The
/// interior is not otherwise interpreted; this is how host syntaxes find the
/// end of an embedded fragment without touching its contents.
/// Throws ScanError when no such closer exists.
std::size_t scan_embedded(std::string_view text, std::size_t open_index,
                          const MatcherConfig& config = MatcherConfig::standard());

/// Byte mask over `text`, true exactly at matcher bytes that participate in
/// a non-crossing pairing (each closer takes the nearest opener of its own
/// kind). Matchers left false are the occurrences a codec has to escape to
/// make the text valid matchertext; the kept occurrences then nest properly
/// on their own.
std::vector<bool> matched_matchers(std::string_view text,
                                   const MatcherConfig& config = MatcherConfig::standard());

/// Delimiter strings a host language wraps around an embedded fragment.
/// `opener` must contain at least one opener that is unmatched within it
/// (so `opener` alone is not valid matchertext), and `closer` must contain
/// exactly the corresponding closers, in reverse pairing order, as its own
/// unmatched closers.
struct EmbedDelimiters {
    std::string opener;
    std::string closer;

    /// Validates the invariants above; throws ConfigError on breach.
    static EmbedDelimiters make(std::string opener, std::string closer,
                                const MatcherConfig& config = MatcherConfig::standard());

    /// The unmatched openers of `opener`, outermost first.
    std::vector<std::size_t> unmatched_opener_offsets(const MatcherConfig& config) const;
    /// The unmatched closers of `closer`, in text order.
    std::vector<std::size_t> unmatched_closer_offsets(const MatcherConfig& config) const;
};

} // namespace matchertext
