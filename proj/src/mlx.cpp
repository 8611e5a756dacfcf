#include "matchertext/mlx.hpp"

#include "matchertext/core.hpp"

#include <cctype>

namespace matchertext::mlx {

namespace {

constexpr std::string_view kMdataOpen = "<![MDATA[";
constexpr std::string_view kCdataOpen = "<![CDATA[";
constexpr std::string_view kCommentOpen = "<!--";

const char* kind_name(ExpandError::Kind k) {
    switch (k) {
    case ExpandError::Kind::NotMatchertext: return "payload is not matchertext";
    case ExpandError::Kind::UnterminatedExtension: return "unterminated extension";
    case ExpandError::Kind::RawContextConflict: return "raw-text payload contains its end tag";
    }
    return "?";
}

bool is_name_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_name_char(char c) {
    return is_name_start(c) || (c >= '0' && c <= '9') || c == '-';
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

bool starts_with_at(std::string_view text, std::size_t pos, std::string_view what) {
    return text.size() - pos >= what.size() && text.compare(pos, what.size(), what) == 0;
}

/// scan_embedded with scan failures mapped onto the expansion error kinds.
std::size_t scan_payload(std::string_view input, std::size_t bracket, std::size_t form_start) {
    try {
        return scan_embedded(input, bracket, MatcherConfig::standard());
    } catch (const ScanError& e) {
        if (e.kind == ScanError::Kind::NoMatchingCloser)
            throw ExpandError(ExpandError::Kind::UnterminatedExtension, form_start);
        throw ExpandError(ExpandError::Kind::NotMatchertext, e.offset);
    }
}

class Expander {
public:
    Expander(std::string_view input, Dialect dialect) : input_(input), dialect_(dialect) {}

    std::string run() {
        while (i_ < input_.size()) {
            if (starts_with_at(input_, i_, kMdataOpen)) {
                expand_mdata();
            } else if (starts_with_at(input_, i_, kCommentOpen)) {
                copy_through("-->");
            } else if (starts_with_at(input_, i_, kCdataOpen)) {
                copy_through("]]>");
            } else if (input_[i_] == '<' && i_ + 1 < input_.size() && is_name_start(input_[i_ + 1])) {
                expand_start_tag();
            } else {
                out_.push_back(input_[i_++]);
            }
        }
        return std::move(out_);
    }

private:
    void copy_through(std::string_view terminator) {
        const auto end = input_.find(terminator, i_);
        const auto stop = end == std::string_view::npos ? input_.size() : end + terminator.size();
        out_.append(input_.substr(i_, stop - i_));
        i_ = stop;
    }

    void expand_mdata() {
        const std::size_t start = i_;
        const std::size_t inner = start + kMdataOpen.size() - 1; // the [ before the payload
        const std::size_t end = scan_payload(input_, inner, start);
        const std::string_view payload = input_.substr(inner + 1, end - inner - 1);
        if (!starts_with_at(input_, end + 1, "]>"))
            throw ExpandError(ExpandError::Kind::UnterminatedExtension, start);
        if (dialect_ == Dialect::Xhtml)
            out_.append(cdata_chain(payload));
        else
            out_.append(escape_text(payload));
        i_ = end + 3;
    }

    void expand_start_tag() {
        const std::size_t start = i_;
        std::size_t p = start + 1;
        while (p < input_.size() && is_name_char(input_[p]))
            ++p;
        const std::string_view name = input_.substr(start + 1, p - start - 1);

        std::string attrs; // tag internals after the name, minus expanded forms
        std::size_t q = p;
        while (q < input_.size()) {
            const char c = input_[q];
            if (c == '>') {
                out_.push_back('<');
                out_.append(name);
                out_.append(attrs);
                out_.push_back('>');
                i_ = q + 1;
                return;
            }
            if (c == '"' || c == '\'') {
                const auto close = input_.find(c, q + 1);
                if (close == std::string_view::npos)
                    break; // unterminated quote: leave the rest untouched
                attrs.append(input_.substr(q, close - q + 1));
                q = close + 1;
                continue;
            }
            if (c == '=' && q + 1 < input_.size() && input_[q + 1] == '[') {
                const std::size_t end = scan_payload(input_, q + 1, q);
                const std::string_view payload = input_.substr(q + 2, end - q - 2);
                attrs.append("=\"");
                attrs.append(escape_attr(payload));
                attrs.push_back('"');
                q = end + 1;
                continue;
            }
            // Content form: exactly one space between the attrs and the
            // bracket. Wider spacing is not the extension and passes through.
            const bool one_space =
                c == ' ' && q + 1 < input_.size() && input_[q + 1] == '[' &&
                (q == p || input_[q - 1] != ' ');
            if (one_space) {
                const std::size_t end = scan_payload(input_, q + 1, q + 1);
                const std::string_view payload = input_.substr(q + 2, end - q - 2);
                if (end + 1 >= input_.size() || input_[end + 1] != '>')
                    throw ExpandError(ExpandError::Kind::UnterminatedExtension, q + 1);
                out_.push_back('<');
                out_.append(name);
                out_.append(attrs);
                out_.push_back('>');
                emit_content(name, payload, q + 1);
                out_.append("</");
                out_.append(name);
                out_.push_back('>');
                i_ = end + 2;
                return;
            }
            attrs.push_back(c);
            ++q;
        }
        // No closing '>': not a usable tag, pass the rest through verbatim.
        out_.append(input_.substr(start));
        i_ = input_.size();
    }

    void emit_content(std::string_view name, std::string_view payload, std::size_t payload_pos) {
        const std::string lower = to_lower(name);
        if (dialect_ == Dialect::Html && (lower == "script" || lower == "style")) {
            // Raw-text elements: no entity escaping exists here, so the
            // payload must not contain its own end-tag opener.
            const std::string end_tag = "</" + lower;
            if (to_lower(payload).find(end_tag) != std::string::npos)
                throw ExpandError(ExpandError::Kind::RawContextConflict, payload_pos);
            out_.append(payload);
            return;
        }
        out_.append(escape_text(payload));
    }

    std::string_view input_;
    Dialect dialect_;
    std::size_t i_ = 0;
    std::string out_;
};

} // namespace

ExpandError::ExpandError(Kind k, std::size_t off)
    : std::runtime_error(std::string(kind_name(k)) + " at byte offset " + std::to_string(off)),
      kind(k), offset(off) {}

std::string escape_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
        case '&': out.append("&amp;"); break;
        case '<': out.append("&lt;"); break;
        case '>': out.append("&gt;"); break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string escape_attr(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
        case '&': out.append("&amp;"); break;
        case '<': out.append("&lt;"); break;
        case '"': out.append("&quot;"); break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string cdata_chain(std::string_view text) {
    std::string out = "<![CDATA[";
    std::size_t pos = 0;
    while (true) {
        const auto hit = text.find("]]>", pos);
        if (hit == std::string_view::npos) {
            out.append(text.substr(pos));
            break;
        }
        out.append(text.substr(pos, hit - pos));
        out.append("]]]]><![CDATA[>"); // close after ]] and reopen before >
        pos = hit + 3;
    }
    out.append("]]>");
    return out;
}

std::string expand(std::string_view input, Dialect dialect) {
    return Expander(input, dialect).run();
}

} // namespace matchertext::mlx
