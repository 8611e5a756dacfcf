#include "matchertext/minml.hpp"

#include "matchertext/core.hpp"
#include "matchertext/mlx.hpp"

namespace matchertext::minml {

namespace {

bool is_alpha(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool is_name_char(char c) {
    return is_alpha(c) || (c >= '0' && c <= '9') || c == '-';
}

bool is_name(std::string_view s) {
    if (s.empty() || !is_alpha(s[0]))
        return false;
    for (const char c : s)
        if (!is_name_char(c))
            return false;
    return true;
}

/// [(<)] style escapes: opener, arrow, that opener's closer.
bool matcher_escape(std::string_view interior, char& selected) {
    if (interior.size() != 3)
        return false;
    const char open = interior[0];
    const char arrow = interior[1];
    const char close = interior[2];
    if (arrow != '<' && arrow != '>')
        return false;
    const bool pair = (open == '(' && close == ')') || (open == '[' && close == ']') ||
                      (open == '{' && close == '}');
    if (!pair)
        return false;
    selected = arrow == '<' ? open : close;
    return true;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Node> parse_span(std::size_t begin, std::size_t end) {
        std::vector<Node> nodes;
        std::string pending;

        auto flush = [&] {
            if (!pending.empty()) {
                nodes.push_back({Node::Kind::Text, std::move(pending), {}});
                pending.clear();
            }
        };

        std::size_t i = begin;
        while (i < end) {
            const char c = text_[i];
            if (c != '[') {
                pending.push_back(c);
                ++i;
                continue;
            }
            const std::size_t close = scan_embedded(text_, i, MatcherConfig::standard());

            // Longest trailing run that forms a valid name becomes the tag;
            // empty when the preceding character is a sigil or not a name.
            std::size_t name_at = pending.size();
            if (!pending.empty() && pending.back() != '"' && pending.back() != '-' &&
                pending.back() != '+') {
                std::size_t k = pending.size();
                while (k > 0 && is_name_char(pending[k - 1]))
                    --k;
                while (k < pending.size() && !is_alpha(pending[k]))
                    ++k;
                name_at = k;
            }

            if (!pending.empty() && pending.back() == '"') {
                pending.pop_back();
                flush();
                nodes.push_back({Node::Kind::Quotation, {}, parse_span(i + 1, close)});
            } else if (!pending.empty() && pending.back() == '-') {
                pending.pop_back();
                flush();
                nodes.push_back({Node::Kind::Comment, content(i, close), {}});
            } else if (!pending.empty() && pending.back() == '+') {
                pending.pop_back();
                flush();
                nodes.push_back({Node::Kind::Verbatim, content(i, close), {}});
            } else if (name_at < pending.size()) {
                std::string name = pending.substr(name_at);
                pending.erase(name_at);
                flush();
                nodes.push_back({Node::Kind::Element, std::move(name), parse_span(i + 1, close)});
            } else {
                const std::string_view interior = text_.substr(i + 1, close - i - 1);
                char selected = 0;
                if (matcher_escape(interior, selected)) {
                    flush();
                    nodes.push_back({Node::Kind::MatcherLiteral, std::string(1, selected), {}});
                } else if (is_name(interior)) {
                    flush();
                    nodes.push_back({Node::Kind::CharRef, std::string(interior), {}});
                } else {
                    throw ParseError(ParseError::Kind::BareBracketGroup, i);
                }
            }
            i = close + 1;
        }
        flush();
        return nodes;
    }

private:
    std::string content(std::size_t open, std::size_t close) const {
        return std::string(text_.substr(open + 1, close - open - 1));
    }

    std::string_view text_;
};

// MinML text escaping: only & and < carry markup meaning in content.
void escape_into(std::string& out, std::string_view text) {
    for (const char c : text) {
        if (c == '&')
            out.append("&amp;");
        else if (c == '<')
            out.append("&lt;");
        else
            out.push_back(c);
    }
}

enum class Target { Html, Xml };

void emit(std::string& out, const std::vector<Node>& nodes, Target target) {
    for (const Node& node : nodes) {
        switch (node.kind) {
        case Node::Kind::Element:
            out.push_back('<');
            out.append(node.text);
            out.push_back('>');
            emit(out, node.children, target);
            out.append("</");
            out.append(node.text);
            out.push_back('>');
            break;
        case Node::Kind::Text:
            escape_into(out, node.text);
            break;
        case Node::Kind::CharRef:
            out.push_back('&');
            out.append(node.text);
            out.push_back(';');
            break;
        case Node::Kind::Quotation:
            out.append(target == Target::Html ? "&ldquo;" : "&#x201C;");
            emit(out, node.children, target);
            out.append(target == Target::Html ? "&rdquo;" : "&#x201D;");
            break;
        case Node::Kind::Comment:
            out.append("<!--");
            out.append(node.text);
            out.append("-->");
            break;
        case Node::Kind::Verbatim:
            if (target == Target::Html)
                escape_into(out, node.text);
            else
                out.append(mlx::cdata_chain(node.text));
            break;
        case Node::Kind::MatcherLiteral:
            out.append(node.text);
            break;
        }
    }
}

} // namespace

ParseError::ParseError(Kind k, std::size_t off)
    : std::runtime_error(std::string(k == Kind::NotMatchertext ? "input is not matchertext"
                                                               : "unrecognized bare bracket group") +
                         " at byte offset " + std::to_string(off)),
      kind(k), offset(off) {}

std::vector<Node> parse(std::string_view text) {
    const auto violations = validate(text, MatcherConfig::standard());
    if (!violations.empty())
        throw ParseError(ParseError::Kind::NotMatchertext, violations.front().offset);
    return Parser(text).parse_span(0, text.size());
}

std::string to_html(const std::vector<Node>& nodes) {
    std::string out;
    emit(out, nodes, Target::Html);
    return out;
}

std::string to_xml(const std::vector<Node>& nodes) {
    std::string out;
    emit(out, nodes, Target::Xml);
    return out;
}

} // namespace matchertext::minml
