#pragma once

#include "matchertext/core.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchertext::analyzer {

/// One string-literal shape of a language: its delimiter, the character
/// that suppresses an immediately following delimiter (if any), and whether
/// a raw line break may appear inside.
struct StringForm {
    std::string delimiter;
    std::optional<char> escape_char;
    bool multiline = false;
};

/// Coarse lexical sketch of a language, just enough to tell string
/// literals and comments apart from the rest. Markers are matched longest
/// first at every scan position.
struct LanguageProfile {
    std::string name;
    std::optional<std::string> line_comment;
    std::optional<std::pair<std::string, std::string>> block_comment;
    bool nested_block_comments = false;
    std::vector<StringForm> string_forms;

    /// Built-in profiles: "c", "shell", "markup". Returns nullptr for other
    /// names. The same definitions ship as JSON data files under profiles/.
    static const LanguageProfile* builtin(std::string_view name);

    /// Loads a profile from its JSON representation; throws ConfigError on
    /// missing or ill-typed fields.
    static LanguageProfile from_json_text(std::string_view json_text);
};

enum class Context { StringLiteral, Comment, Code };

const char* to_string(Context context);

struct ContextViolation {
    std::string file;
    Violation violation;
    Context context;
};

struct LexWarning {
    enum class Kind { UnterminatedString, UnterminatedComment };
    Kind kind;
    std::size_t offset;
    std::size_t line;
};

struct Analysis {
    std::vector<ContextViolation> violations; ///< sorted by offset
    std::vector<LexWarning> warnings;
};

/// Validates the whole text, then labels each violation with the lexical
/// region it falls in. The violation set is exactly what validate() returns;
/// labeling never adds or drops anything.
Analysis analyze(std::string_view text, const LanguageProfile& profile,
                 const MatcherConfig& config = MatcherConfig::standard(),
                 std::string file = {});

struct Summary {
    std::size_t total = 0;
    std::array<std::size_t, 3> by_context{};               // indexed by Context
    std::array<std::size_t, 4> by_kind{};                  // indexed by ViolationKind
    std::array<std::array<std::size_t, 4>, 3> by_context_kind{};
    std::vector<std::pair<std::string, std::size_t>> by_file; // sorted by path
};

/// Deterministic counts; independent of input order.
Summary aggregate(std::span<const ContextViolation> violations);

} // namespace matchertext::analyzer
