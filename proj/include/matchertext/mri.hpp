#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace matchertext::mri {

/// A matchertext resource identifier, written scheme[body]. The body is
/// valid matchertext over the graphical-only alphabet, which keeps the
/// whole identifier hand-transcribable. MRIs nest without escaping: a
/// complete MRI dropped into another MRI's body stays valid as written.
struct Mri {
    std::string scheme;
    std::string body;

    friend bool operator==(const Mri&, const Mri&) = default;
};

struct MriError : std::runtime_error {
    enum class Kind {
        BadScheme,
        MissingBrackets,
        NotMatchertext,
        ForbiddenChar,     ///< non-graphical character in the body
        TrailingGarbage,   ///< text after the closing bracket
        BadPercentTriplet,
        UnterminatedEmbed, ///< %[ with no matching ]
        MalformedHost,
    };
    Kind kind;
    std::size_t offset;
    MriError(Kind kind, std::size_t offset);
};

Mri parse(std::string_view text);

/// scheme[body]
std::string render(const Mri& mri);

/// Converts to classic scheme:body URI form. Nested MRIs in the body
/// (name directly followed by a bracket group) are converted recursively
/// and then percent-encoded down to unreserved characters; bare bracket
/// quotes keep their brackets as %5B/%5D with URI-safe interiors; anything
/// else URI syntax cannot carry verbatim is percent-encoded. Hex is upper
/// case throughout.
std::string to_uri(const Mri& mri);

/// Conservative wrap of a scheme:body URI: unmatched matchers and
/// non-graphical characters get percent-encoded, existing %XX triplets are
/// kept untouched and nothing else changes. Nested identifiers are never
/// reconstructed, so this is not an inverse of to_uri.
Mri from_uri(std::string_view uri);

/// Decodes %XX triplets (either hex case) and %[m] embeds in a URI
/// component. The matchertext m is spliced in verbatim; percent decoding is
/// disabled inside it.
std::string decode_component(std::string_view component);

enum class HostKind { Domain, Ip4, Ip6, NestedMri };

struct Host {
    HostKind kind;
    std::string payload; ///< bracket interior for Ip4/Ip6/NestedMri, else the host

    friend bool operator==(const Host&, const Host&) = default;
};

/// Classifies the host subfield of an MRI authority. ip4[...] and ip6[...]
/// payloads are checked by character class only.
Host classify_host(std::string_view host);

} // namespace matchertext::mri
