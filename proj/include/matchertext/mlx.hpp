#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matchertext::mlx {

enum class Dialect {
    Html,  ///< script/style content is raw text; no CDATA sections
    Xhtml, ///< entity escaping everywhere; MDATA becomes CDATA chains
};

struct ExpandError : std::runtime_error {
    enum class Kind {
        NotMatchertext,        ///< extension payload breaks the matcher discipline
        UnterminatedExtension, ///< extension form never terminated
        RawContextConflict,    ///< HTML script/style payload contains its own end
                               ///< tag; entity escaping is unavailable there
    };
    Kind kind;
    std::size_t offset;
    ExpandError(Kind kind, std::size_t offset);
};

/// Expands the three bracket-payload extension forms into standard markup
/// with the same parsed meaning:
///   <name attrs [m]>   element with literal content m, no end tag
///   attr=[m]           bracket-quoted attribute value
///   <![MDATA[m]]>      verbatim section
/// Payload ends are found purely by matcher matching; payloads are emitted
/// with host-side escaping only (entities, CDATA chains) and any extension
/// forms inside a payload are left untouched. Everything that is not one of
/// the three forms passes through unchanged. Ordinary comments and CDATA
/// sections are copied verbatim.
std::string expand(std::string_view input, Dialect dialect);

/// Entity-escapes & < > for element content.
std::string escape_text(std::string_view text);

/// Entity-escapes & < " for a double-quoted attribute value.
std::string escape_attr(std::string_view text);

/// Encodes arbitrary text as a chain of CDATA sections, splitting at every
/// "]]>" occurrence so the chain decodes back to the exact input.
std::string cdata_chain(std::string_view text);

} // namespace matchertext::mlx
