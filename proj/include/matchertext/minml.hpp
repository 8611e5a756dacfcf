#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace matchertext::minml {

/// One node of a MinML document. MinML replaces start/end tag pairs with
/// bracket groups: em[emphasis], [star], "[quotation], -[comment],
/// +[verbatim], and the matcher escapes [(<)] [(>)] [[<]] [[>]] [{<}] [{>}].
struct Node {
    enum class Kind {
        Element,        ///< name[children]
        Text,
        CharRef,        ///< [name], emitted as &name;
        Quotation,      ///< "[children]
        Comment,        ///< -[content], content kept verbatim
        Verbatim,       ///< +[content], content kept verbatim
        MatcherLiteral, ///< [(<)] and friends; a single matcher character
    };

    Kind kind;
    std::string text;           ///< element/ref name, text or verbatim content,
                                ///< or the selected matcher character
    std::vector<Node> children; ///< Element and Quotation only

    friend bool operator==(const Node&, const Node&) = default;
};

struct ParseError : std::runtime_error {
    enum class Kind {
        NotMatchertext,
        BareBracketGroup, ///< bare [...] that is neither a matcher escape nor
                          ///< a reference name
    };
    Kind kind;
    std::size_t offset;
    ParseError(Kind kind, std::size_t offset);
};

/// Parses a MinML document. The input must be valid matchertext under the
/// standard configuration. Each `[` is classified by the character directly
/// before it: an element name, one of the sigils " - +, or nothing (a bare
/// group). Comment and verbatim contents are captured without interpretation.
std::vector<Node> parse(std::string_view text);

std::string to_html(const std::vector<Node>& nodes);

/// As to_html, except verbatim content becomes a CDATA section chain and
/// quotation marks use numeric character references.
std::string to_xml(const std::vector<Node>& nodes);

} // namespace matchertext::minml
