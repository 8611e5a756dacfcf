#include "matchertext/mri.hpp"
#include "matchertext/core.hpp"

#include "support/generators.hpp"

#include "doctest.h"

#include <string>

using namespace matchertext;
using mri::Mri;
using mri::MriError;

TEST_CASE("parse splits scheme and body") {
    CHECK(mri::parse("http[//my.site/path]") == Mri{"http", "//my.site/path"});
    CHECK(mri::parse("x[]") == Mri{"x", ""});
    CHECK(mri::parse("a+b-c.d[payload]") == Mri{"a+b-c.d", "payload"});
    CHECK(mri::render(Mri{"http", "//my.site/path"}) == "http[//my.site/path]");
}

TEST_CASE("parse errors") {
    auto kind_of = [](const char* text) {
        try {
            mri::parse(text);
        } catch (const MriError& e) {
            return e.kind;
        }
        FAIL("expected MriError");
        return MriError::Kind::BadScheme;
    };
    CHECK(kind_of("http://my.site/") == MriError::Kind::MissingBrackets);
    CHECK(kind_of("") == MriError::Kind::BadScheme);
    CHECK(kind_of("9x[]") == MriError::Kind::BadScheme);
    CHECK(kind_of("x[unclosed") == MriError::Kind::MissingBrackets);
    CHECK(kind_of("x[a]b") == MriError::Kind::TrailingGarbage);
    CHECK(kind_of("x[(])") == MriError::Kind::NotMatchertext);
    CHECK(kind_of("x[a b]") == MriError::Kind::ForbiddenChar); // space is not graphical
}

TEST_CASE("nested identifiers convert with full percent encoding") {
    CHECK(mri::to_uri(mri::parse(
              "http[//search.engine/linksto?site=http[//my.site/]&results=50]")) ==
          "http://search.engine/linksto?site=http%3A%2F%2Fmy.site%2F&results=50");
    CHECK(mri::to_uri(mri::parse(
              "http[//historical.archive/get?site=http[//my.site/]&year=1998]")) ==
          "http://historical.archive/get?site=http%3A%2F%2Fmy.site%2F&year=1998");
    CHECK(mri::to_uri(Mri{"x", ""}) == "x:");
}

TEST_CASE("bracket quotes keep their brackets as data") {
    CHECK(mri::to_uri(mri::parse("http[//trans.late/?page=[//my.site/]&lang=en]")) ==
          "http://trans.late/?page=%5B//my.site/%5D&lang=en");
    // characters a URI cannot carry verbatim are encoded inside the quote
    CHECK(mri::to_uri(Mri{"f", "[<>]"}) == "f:%5B%3C%3E%5D");
    CHECK(mri::to_uri(Mri{"f", "[@]"}) == "f:%5B@%5D");
}

TEST_CASE("characters outside URI syntax are percent encoded at top level") {
    CHECK(mri::to_uri(Mri{"f", "a{b}c"}) == "f:a%7Bb%7Dc");
    CHECK(mri::to_uri(Mri{"f", "a\"b"}) == "f:a%22b");
    CHECK(mri::to_uri(Mri{"f", "caf\xC3\xA9"}) == "f:caf%C3%A9");
    CHECK(mri::to_uri(Mri{"f", "a(b)c"}) == "f:a(b)c"); // parens are URI sub-delims
}

TEST_CASE("to_uri output stays within RFC 3986 characters") {
    generators::Rng rng(808);
    auto uri_legal = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
               std::string_view("-._~!$&'()*+,;=:/?@#[]%").find(c) != std::string_view::npos;
    };
    for (int round = 0; round < 300; ++round) {
        const auto body = generators::random_matchertext(rng, 40, /*graphical_only=*/true);
        const auto uri = mri::to_uri(Mri{"x", body});
        CAPTURE(uri);
        std::size_t i = 0;
        bool ok = true;
        while (i < uri.size()) {
            const char c = uri[i];
            if (c == '[' || c == ']') {
                ok = false; // literal brackets never survive conversion
                break;
            }
            if (!uri_legal(c)) {
                ok = false;
                break;
            }
            ++i;
        }
        CHECK(ok);
    }
}

TEST_CASE("conservative wrap") {
    CHECK(mri::from_uri("http://my.site/path/") == Mri{"http", "//my.site/path/"});
    CHECK(mri::from_uri("http://a.b/open(") == Mri{"http", "//a.b/open%28"});
    CHECK(mri::from_uri("x:") == Mri{"x", ""});
    CHECK(mri::from_uri("f:close)open(") == Mri{"f", "close%29open%28"});
    CHECK(mri::from_uri("f:open(close)") == Mri{"f", "open(close)"});
    CHECK(mri::from_uri("f:a b") == Mri{"f", "a%20b"});
    CHECK(mri::from_uri("f:a%2Fb") == Mri{"f", "a%2Fb"}); // triplets untouched
    CHECK_THROWS_AS(mri::from_uri("no-colon-here"), MriError);
    CHECK_THROWS_AS(mri::from_uri("9bad:x"), MriError);
}

TEST_CASE("wrap then convert is the identity on plain URIs") {
    generators::Rng rng(809);
    for (int round = 0; round < 500; ++round) {
        const auto uri = generators::random_uri(rng);
        CAPTURE(uri);
        CHECK(mri::to_uri(mri::from_uri(uri)) == uri);
    }
}

TEST_CASE("decode_component") {
    CHECK(mri::decode_component("%41") == "A");
    CHECK(mri::decode_component("%2f%2F") == "//");
    CHECK(mri::decode_component("%[]") == "");
    CHECK(mri::decode_component("%[a<b>c`d]") == "a<b>c`d");
    CHECK(mri::decode_component("x%[y]z") == "xyz");
    CHECK(mri::decode_component("plain") == "plain");
    // no interior processing within the embed
    CHECK(mri::decode_component("%[a%41]") == "a%41");

    auto kind_of = [](const char* text) {
        try {
            mri::decode_component(text);
        } catch (const MriError& e) {
            return e.kind;
        }
        FAIL("expected MriError");
        return MriError::Kind::BadScheme;
    };
    CHECK(kind_of("%G1") == MriError::Kind::BadPercentTriplet);
    CHECK(kind_of("%1") == MriError::Kind::BadPercentTriplet);
    CHECK(kind_of("abc%") == MriError::Kind::BadPercentTriplet);
    CHECK(kind_of("%[unclosed") == MriError::Kind::UnterminatedEmbed);
    CHECK(kind_of("%[a b]") == MriError::Kind::NotMatchertext); // tightened alphabet
}

TEST_CASE("embed and decode are inverse with zero transformation") {
    generators::Rng rng(810);
    for (int round = 0; round < 300; ++round) {
        const auto m = generators::random_matchertext(rng, 48, /*graphical_only=*/true);
        CHECK(mri::decode_component("%[" + m + "]") == m);
    }
}

TEST_CASE("nested conversion peels one encoding level per nesting level") {
    // Fillers must not be scheme characters or they would fuse with the
    // nested identifier's name.
    const std::string inner_body = "p.q/r";
    const std::string level1 = "s1[" + inner_body + "]";
    const std::string level2 = "s2[=" + level1 + "=]";
    const std::string level3 = "s3[?" + level2 + "?]";

    const auto uri3 = mri::to_uri(mri::parse(level3));
    const auto once = mri::decode_component(uri3);
    CHECK(once.find("s2:=") != std::string::npos);
    const auto twice = mri::decode_component(once);
    CHECK(twice.find("s1:" + inner_body) != std::string::npos);
}

TEST_CASE("host classification") {
    using mri::Host;
    using mri::HostKind;
    CHECK(mri::classify_host("ip4[1.2.3.4]") == Host{HostKind::Ip4, "1.2.3.4"});
    CHECK(mri::classify_host("ip6[1234::abcd]") == Host{HostKind::Ip6, "1234::abcd"});
    CHECK(mri::classify_host("my.site") == Host{HostKind::Domain, "my.site"});
    CHECK(mri::classify_host("name[//x]") == Host{HostKind::NestedMri, "//x"});

    CHECK_THROWS_AS(mri::classify_host("ip4[bad!]"), MriError);
    CHECK_THROWS_AS(mri::classify_host("ip6[xyz]"), MriError);
    CHECK_THROWS_AS(mri::classify_host("ip4[1.2]x"), MriError);
    CHECK_THROWS_AS(mri::classify_host("[naked]"), MriError);
    CHECK_THROWS_AS(mri::classify_host("ip4[]"), MriError);
}
