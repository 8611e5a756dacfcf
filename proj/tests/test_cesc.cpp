#include "matchertext/cesc.hpp"
#include "matchertext/core.hpp"

#include "support/generators.hpp"

#include "doctest.h"

using namespace matchertext;
using cesc::CodecError;
using cesc::EscapeStyle;

TEST_CASE("decode handles the conventional escapes") {
    CHECK(cesc::decode("hello\\n") == "hello\n");
    CHECK(cesc::decode("\\t\\r\\0\\\\\\\"\\'") == std::string("\t\r\0\\\"'", 6));
    CHECK(cesc::decode("\\x5B") == "[");
    CHECK(cesc::decode("\\u005D") == "]");
    CHECK(cesc::decode("\\u00E9") == "\xC3\xA9");
}

TEST_CASE("decode matcher selects") {
    CHECK(cesc::decode("\\o()") == "(");
    CHECK(cesc::decode("\\c()") == ")");
    CHECK(cesc::decode("\\o[]") == "[");
    CHECK(cesc::decode("\\c[]") == "]");
    CHECK(cesc::decode("\\o{}") == "{");
    CHECK(cesc::decode("\\c{}") == "}");
}

TEST_CASE("decode splices embeds verbatim") {
    CHECK(cesc::decode("\\[\"'\\]") == "\"'\\");
    CHECK(cesc::decode("\\[\"[^\"]*\"]") == "\"[^\"]*\"");
    CHECK(cesc::decode("\\[]") == "");
    // no escape processing inside the embed
    CHECK(cesc::decode("\\[a\\nb]") == "a\\nb");
    // raw newlines survive
    CHECK(cesc::decode("\\[line1\nline2]") == "line1\nline2");
    // literal matched pairs outside embeds are plain text
    CHECK(cesc::decode("(a)[b]{c}") == "(a)[b]{c}");
}

TEST_CASE("decode rejects bad input") {
    auto kind_of = [](const char* body) {
        try {
            cesc::decode(body);
        } catch (const CodecError& e) {
            return e.kind;
        }
        FAIL("expected CodecError");
        return CodecError::Kind::InvalidEscape;
    };
    CHECK(kind_of("\\q") == CodecError::Kind::InvalidEscape);
    CHECK(kind_of("tail\\") == CodecError::Kind::InvalidEscape);
    CHECK(kind_of("\\xZ1") == CodecError::Kind::InvalidEscape);
    CHECK(kind_of("\\x5") == CodecError::Kind::InvalidEscape);
    CHECK(kind_of("\\u123") == CodecError::Kind::InvalidEscape);
    CHECK(kind_of("\\uD800") == CodecError::Kind::InvalidEscape);
    CHECK(kind_of("\\o(x)") == CodecError::Kind::InvalidEscape);
    CHECK(kind_of("\\o") == CodecError::Kind::InvalidEscape);
    // matcher discipline is checked before escapes are read at all
    CHECK(kind_of("\\x5B]") == CodecError::Kind::NotMatchertext);
    CHECK(kind_of("\\[x") == CodecError::Kind::NotMatchertext);
    CHECK(kind_of("(") == CodecError::Kind::NotMatchertext);
}

TEST_CASE("encode escapes unmatched matchers per style") {
    CHECK(cesc::encode("(", EscapeStyle::MatcherSelect) == "\\o()");
    CHECK(cesc::encode(")", EscapeStyle::MatcherSelect) == "\\c()");
    CHECK(cesc::encode("[", EscapeStyle::NumericHex) == "\\x5B");
    CHECK(cesc::encode("}", EscapeStyle::NumericUniversal) == "\\u007D");
}

TEST_CASE("encode leaves matched matchers and ordinary text alone") {
    CHECK(cesc::encode("(a)", EscapeStyle::MatcherSelect) == "(a)");
    CHECK(cesc::encode("a*(b+c)", EscapeStyle::NumericHex) == "a*(b+c)");
    CHECK(cesc::encode("plain text!", EscapeStyle::MatcherSelect) == "plain text!");
    // the classic pattern: quotes escaped, brackets kept as a pair
    CHECK(cesc::encode("\"[^\"]*\"", EscapeStyle::MatcherSelect) == "\\\"[^\\\"]*\\\"");
}

TEST_CASE("encode conventional escapes and quote context") {
    CHECK(cesc::encode("a\nb\tc", EscapeStyle::MatcherSelect) == "a\\nb\\tc");
    CHECK(cesc::encode(std::string("\0", 1), EscapeStyle::MatcherSelect) == "\\0");
    CHECK(cesc::encode("\x01", EscapeStyle::MatcherSelect) == "\\x01");
    CHECK(cesc::encode("it's", EscapeStyle::MatcherSelect) == "it's");
    CHECK(cesc::encode("it's", EscapeStyle::MatcherSelect, true) == "it\\'s");
    CHECK(cesc::encode("say \"hi\"", EscapeStyle::MatcherSelect, true) == "say \"hi\"");
    // C1 controls are escaped numerically
    CHECK(cesc::encode("\xC2\x85", EscapeStyle::MatcherSelect) == "\\x85");
}

TEST_CASE("embed wraps verified matchertext only") {
    CHECK(cesc::embed("\"[^\"]*\"") == "\\[\"[^\"]*\"]");
    CHECK(cesc::embed("") == "\\[]");
    try {
        cesc::embed("{a]");
        FAIL("expected CodecError");
    } catch (const CodecError& e) {
        CHECK(e.kind == CodecError::Kind::NotMatchertext);
        CHECK(e.offset == 2); // the ] that fails to match the {
    }
}

TEST_CASE("round trip across styles") {
    generators::Rng rng(20240602);
    const EscapeStyle styles[] = {EscapeStyle::MatcherSelect, EscapeStyle::NumericHex,
                                  EscapeStyle::NumericUniversal};
    for (int round = 0; round < 600; ++round) {
        const auto t = generators::random_text(rng, 32);
        CAPTURE(t);
        for (const auto style : styles) {
            const auto body = cesc::encode(t, style);
            CHECK(is_matchertext(body));
            CHECK(cesc::decode(body) == t);
        }
    }
}

TEST_CASE("embed identity: no transformation, fixed expansion") {
    generators::Rng rng(20240603);
    for (int round = 0; round < 300; ++round) {
        const auto m = generators::random_matchertext(rng, 48);
        const auto fragment = cesc::embed(m);
        CHECK(fragment.size() == m.size() + 3);
        CHECK(cesc::decode(fragment) == m);
    }
}
