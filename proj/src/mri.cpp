#include "matchertext/mri.hpp"

#include "matchertext/core.hpp"
#include "matchertext/utf8.hpp"

#include <cstdio>

namespace matchertext::mri {

namespace {

const char* kind_name(MriError::Kind k) {
    switch (k) {
    case MriError::Kind::BadScheme: return "bad scheme";
    case MriError::Kind::MissingBrackets: return "missing brackets";
    case MriError::Kind::NotMatchertext: return "not matchertext";
    case MriError::Kind::ForbiddenChar: return "forbidden character";
    case MriError::Kind::TrailingGarbage: return "trailing characters after closing bracket";
    case MriError::Kind::BadPercentTriplet: return "bad percent triplet";
    case MriError::Kind::UnterminatedEmbed: return "unterminated embed";
    case MriError::Kind::MalformedHost: return "malformed host";
    }
    return "?";
}

bool is_alpha(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

bool is_scheme_char(char c) {
    return is_alpha(c) || is_digit(c) || c == '+' || c == '-' || c == '.';
}

bool is_scheme(std::string_view s) {
    if (s.empty() || !is_alpha(s[0]))
        return false;
    for (const char c : s)
        if (!is_scheme_char(c))
            return false;
    return true;
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

bool is_unreserved(char c) {
    return is_alpha(c) || is_digit(c) || c == '-' || c == '.' || c == '_' || c == '~';
}

bool is_sub_delim(char c) {
    switch (c) {
    case '!': case '$': case '&': case '\'': case '(': case ')':
    case '*': case '+': case ',': case ';': case '=':
        return true;
    default:
        return false;
    }
}

// Characters a bracket quote's interior may carry verbatim in a URI.
bool quote_interior_allowed(char c) {
    return is_unreserved(c) || is_sub_delim(c) || c == ':' || c == '@' || c == '/' || c == '?';
}

// Characters the body keeps verbatim outside brackets.
bool body_allowed(char c) {
    return is_unreserved(c) || is_sub_delim(c) || c == ':' || c == '/' || c == '?' ||
           c == '@' || c == '#' || c == '%';
}

void pct_encode(std::string& out, unsigned char byte) {
    char buf[4];
    std::snprintf(buf, sizeof(buf), "%%%02X", byte);
    out.append(buf);
}

void check_body(std::string_view body, std::size_t base_offset) {
    for (const auto& v : validate(body, MatcherConfig::graphical())) {
        if (v.kind == ViolationKind::ForbiddenChar)
            throw MriError(MriError::Kind::ForbiddenChar, base_offset + v.offset);
        throw MriError(MriError::Kind::NotMatchertext, base_offset + v.offset);
    }
}

std::string convert_body(std::string_view body);

std::string convert_nested(std::string_view scheme, std::string_view body) {
    std::string uri;
    uri.reserve(scheme.size() + body.size() + 1);
    uri.append(scheme);
    uri.push_back(':');
    uri.append(convert_body(body));

    // An identifier embedded in another identifier's component survives only
    // as data: everything beyond unreserved gets percent-encoded.
    std::string out;
    out.reserve(uri.size() * 2);
    for (const char c : uri) {
        if (is_unreserved(c))
            out.push_back(c);
        else
            pct_encode(out, static_cast<unsigned char>(c));
    }
    return out;
}

std::string convert_body(std::string_view body) {
    std::string out;
    out.reserve(body.size() + body.size() / 4);

    std::size_t i = 0;
    while (i < body.size()) {
        const char c = body[i];

        if (c == '[') { // bracket quote: brackets survive as data
            const std::size_t close = scan_embedded(body, i, MatcherConfig::standard());
            out.append("%5B");
            for (std::size_t k = i + 1; k < close; ++k) {
                const char q = body[k];
                if (quote_interior_allowed(q))
                    out.push_back(q);
                else
                    pct_encode(out, static_cast<unsigned char>(q));
            }
            out.append("%5D");
            i = close + 1;
            continue;
        }

        if (is_alpha(c)) {
            std::size_t p = i;
            while (p < body.size() && is_scheme_char(body[p]))
                ++p;
            if (p < body.size() && body[p] == '[') { // nested identifier
                const std::size_t close = scan_embedded(body, p, MatcherConfig::standard());
                out.append(convert_nested(body.substr(i, p - i),
                                          body.substr(p + 1, close - p - 1)));
                i = close + 1;
                continue;
            }
            out.append(body.substr(i, p - i)); // scheme characters are all URI-safe
            i = p;
            continue;
        }

        if (body_allowed(c))
            out.push_back(c);
        else
            pct_encode(out, static_cast<unsigned char>(c));
        ++i;
    }
    return out;
}

} // namespace

MriError::MriError(Kind k, std::size_t off)
    : std::runtime_error(std::string(kind_name(k)) + " at byte offset " + std::to_string(off)),
      kind(k), offset(off) {}

Mri parse(std::string_view text) {
    std::size_t p = 0;
    while (p < text.size() && is_scheme_char(text[p]))
        ++p;
    const std::string_view scheme = text.substr(0, p);
    if (!is_scheme(scheme))
        throw MriError(MriError::Kind::BadScheme, 0);
    if (p >= text.size() || text[p] != '[')
        throw MriError(MriError::Kind::MissingBrackets, p);

    std::size_t close;
    try {
        close = scan_embedded(text, p, MatcherConfig::standard());
    } catch (const ScanError& e) {
        if (e.kind == ScanError::Kind::NoMatchingCloser)
            throw MriError(MriError::Kind::MissingBrackets, e.offset);
        throw MriError(MriError::Kind::NotMatchertext, e.offset);
    }
    if (close + 1 != text.size())
        throw MriError(MriError::Kind::TrailingGarbage, close + 1);

    const std::string_view body = text.substr(p + 1, close - p - 1);
    check_body(body, p + 1);
    return Mri{std::string(scheme), std::string(body)};
}

std::string render(const Mri& mri) {
    std::string out;
    out.reserve(mri.scheme.size() + mri.body.size() + 2);
    out.append(mri.scheme);
    out.push_back('[');
    out.append(mri.body);
    out.push_back(']');
    return out;
}

std::string to_uri(const Mri& mri) {
    if (!is_scheme(mri.scheme))
        throw MriError(MriError::Kind::BadScheme, 0);
    check_body(mri.body, 0);
    std::string out;
    out.reserve(mri.scheme.size() + mri.body.size() + 1);
    out.append(mri.scheme);
    out.push_back(':');
    out.append(convert_body(mri.body));
    return out;
}

Mri from_uri(std::string_view uri) {
    const auto colon = uri.find(':');
    if (colon == std::string_view::npos || !is_scheme(uri.substr(0, colon)))
        throw MriError(MriError::Kind::BadScheme, 0);
    const std::string_view rest = uri.substr(colon + 1);

    const auto matched = matched_matchers(rest, MatcherConfig::standard());
    std::string body;
    body.reserve(rest.size());

    std::size_t i = 0;
    while (i < rest.size()) {
        const char c = rest[i];
        if (c == '%' && i + 2 < rest.size() && hex_value(rest[i + 1]) >= 0 &&
            hex_value(rest[i + 2]) >= 0) {
            body.append(rest.substr(i, 3)); // existing triplet, untouched
            i += 3;
            continue;
        }
        const auto d = utf8::decode(rest, i);
        if (!d)
            throw EncodingError(colon + 1 + i);
        if (MatcherConfig::standard().is_matcher(d->scalar) && !matched[i]) {
            pct_encode(body, static_cast<unsigned char>(rest[i]));
        } else if (!in_alphabet(d->scalar, Alphabet::GraphicalOnly)) {
            for (unsigned k = 0; k < d->length; ++k)
                pct_encode(body, static_cast<unsigned char>(rest[i + k]));
        } else {
            body.append(rest.substr(i, d->length));
        }
        i += d->length;
    }
    return Mri{std::string(uri.substr(0, colon)), std::move(body)};
}

std::string decode_component(std::string_view component) {
    std::string out;
    out.reserve(component.size());
    std::size_t i = 0;
    while (i < component.size()) {
        const char c = component[i];
        if (c != '%') {
            out.push_back(c);
            ++i;
            continue;
        }
        if (i + 1 < component.size() && component[i + 1] == '[') {
            std::size_t close;
            try {
                close = scan_embedded(component, i + 1, MatcherConfig::standard());
            } catch (const ScanError& e) {
                if (e.kind == ScanError::Kind::NoMatchingCloser)
                    throw MriError(MriError::Kind::UnterminatedEmbed, i);
                throw MriError(MriError::Kind::NotMatchertext, e.offset);
            }
            const std::string_view m = component.substr(i + 2, close - i - 2);
            // The embed must satisfy the tightened discipline of its carrier.
            if (!validate(m, MatcherConfig::graphical()).empty())
                throw MriError(MriError::Kind::NotMatchertext, i + 2);
            out.append(m);
            i = close + 1;
            continue;
        }
        if (i + 2 >= component.size() || hex_value(component[i + 1]) < 0 ||
            hex_value(component[i + 2]) < 0)
            throw MriError(MriError::Kind::BadPercentTriplet, i);
        out.push_back(static_cast<char>(hex_value(component[i + 1]) * 16 +
                                        hex_value(component[i + 2])));
        i += 3;
    }
    return out;
}

Host classify_host(std::string_view host) {
    const auto bracket = host.find('[');
    if (bracket == std::string_view::npos)
        return Host{HostKind::Domain, std::string(host)};

    const std::string_view name = host.substr(0, bracket);
    if (!is_scheme(name))
        throw MriError(MriError::Kind::MalformedHost, 0);

    std::size_t close;
    try {
        close = scan_embedded(host, bracket, MatcherConfig::standard());
    } catch (const ScanError&) {
        throw MriError(MriError::Kind::MalformedHost, bracket);
    }
    if (close + 1 != host.size())
        throw MriError(MriError::Kind::MalformedHost, close + 1);

    const std::string_view payload = host.substr(bracket + 1, close - bracket - 1);
    if (name == "ip4") {
        if (payload.empty())
            throw MriError(MriError::Kind::MalformedHost, bracket + 1);
        for (std::size_t k = 0; k < payload.size(); ++k)
            if (!is_digit(payload[k]) && payload[k] != '.')
                throw MriError(MriError::Kind::MalformedHost, bracket + 1 + k);
        return Host{HostKind::Ip4, std::string(payload)};
    }
    if (name == "ip6") {
        if (payload.empty())
            throw MriError(MriError::Kind::MalformedHost, bracket + 1);
        for (std::size_t k = 0; k < payload.size(); ++k)
            if (hex_value(payload[k]) < 0 && payload[k] != ':')
                throw MriError(MriError::Kind::MalformedHost, bracket + 1 + k);
        return Host{HostKind::Ip6, std::string(payload)};
    }
    return Host{HostKind::NestedMri, std::string(payload)};
}

} // namespace matchertext::mri
