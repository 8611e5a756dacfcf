#include "matchertext/analyzer.hpp"
#include "matchertext/report.hpp"

#include "doctest.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

using namespace matchertext;
using analyzer::Context;
using analyzer::LanguageProfile;

namespace {

const LanguageProfile& c_profile() {
    return *LanguageProfile::builtin("c");
}

} // namespace

TEST_CASE("string literal context") {
    const auto a = analyzer::analyze("const char *s = \"}\";", c_profile());
    REQUIRE(a.violations.size() == 1);
    CHECK(a.violations[0].violation.kind == ViolationKind::UnexpectedCloser);
    CHECK(a.violations[0].violation.found == U'}');
    CHECK(a.violations[0].context == Context::StringLiteral);
    CHECK(a.warnings.empty());

    const auto b = analyzer::analyze("s = \"{\";", c_profile());
    REQUIRE(b.violations.size() == 1);
    CHECK(b.violations[0].violation.kind == ViolationKind::UnmatchedOpener);
    CHECK(b.violations[0].context == Context::StringLiteral);
}

TEST_CASE("a stray matcher in a call argument string disrupts the call parens") {
    // Context labeling never rewrites what the validator saw: here the {
    // pairs nothing, so the recovery blames the surrounding parens.
    const auto a = analyzer::analyze("printf(\"{\")", c_profile());
    REQUIRE(a.violations.size() == 2);
    CHECK(a.violations[0].violation.kind == ViolationKind::UnmatchedOpener);
    CHECK(a.violations[0].violation.found == U'(');
    CHECK(a.violations[0].context == Context::Code);
    CHECK(a.violations[1].violation.kind == ViolationKind::MismatchedPair);
    CHECK(a.violations[1].context == Context::Code);
}

TEST_CASE("clean code yields nothing") {
    CHECK(analyzer::analyze("a*(b+c)", c_profile()).violations.empty());
}

TEST_CASE("comment contexts") {
    const auto a = analyzer::analyze("x = 1 // close )", c_profile());
    REQUIRE(a.violations.size() == 1);
    CHECK(a.violations[0].violation.kind == ViolationKind::UnexpectedCloser);
    CHECK(a.violations[0].violation.offset == 15);
    CHECK(a.violations[0].context == Context::Comment);

    const auto b = analyzer::analyze("/* { */ int x;", c_profile());
    REQUIRE(b.violations.size() == 1);
    CHECK(b.violations[0].context == Context::Comment);
}

TEST_CASE("code context is the default") {
    const auto a = analyzer::analyze("#define END )\n", c_profile());
    REQUIRE(a.violations.size() == 1);
    CHECK(a.violations[0].context == Context::Code);
}

TEST_CASE("escapes inside strings do not end the region") {
    const auto a = analyzer::analyze("s = \"a\\\"b{\"; t = (1);", c_profile());
    REQUIRE(a.violations.size() == 1);
    CHECK(a.violations[0].violation.found == U'{');
    CHECK(a.violations[0].context == Context::StringLiteral);
}

TEST_CASE("char literals are string forms in the C profile") {
    const auto a = analyzer::analyze("case ']': break;", c_profile());
    REQUIRE(a.violations.size() == 1);
    CHECK(a.violations[0].context == Context::StringLiteral);
}

TEST_CASE("line comments end at the line break") {
    const auto a = analyzer::analyze("// ) \nentry(", c_profile());
    REQUIRE(a.violations.size() == 2);
    CHECK(a.violations[0].context == Context::Comment);
    CHECK(a.violations[1].context == Context::Code);
}

TEST_CASE("unterminated regions warn but still report") {
    const auto a = analyzer::analyze("s = \"{", c_profile());
    REQUIRE(a.violations.size() == 1);
    CHECK(a.violations[0].context == Context::StringLiteral);
    REQUIRE(a.warnings.size() == 1);
    CHECK(a.warnings[0].kind == analyzer::LexWarning::Kind::UnterminatedString);

    const auto b = analyzer::analyze("/* ( ", c_profile());
    REQUIRE(b.warnings.size() == 1);
    CHECK(b.warnings[0].kind == analyzer::LexWarning::Kind::UnterminatedComment);
    REQUIRE(b.violations.size() == 1);
    CHECK(b.violations[0].context == Context::Comment);
}

TEST_CASE("single-line strings cut at the line break") {
    // survey-grade recovery: the { after the break is code again
    const auto a = analyzer::analyze("s = \"abc\nx = {", c_profile());
    REQUIRE(a.violations.size() == 1);
    CHECK(a.violations[0].context == Context::Code);
    CHECK(a.warnings.size() == 1);
}

TEST_CASE("shell and markup profiles") {
    const auto& shell = *LanguageProfile::builtin("shell");
    const auto a = analyzer::analyze("echo hi # comment (\nvar='{'", shell);
    REQUIRE(a.violations.size() == 2);
    CHECK(a.violations[0].context == Context::Comment);
    CHECK(a.violations[1].context == Context::StringLiteral);

    const auto& markup = *LanguageProfile::builtin("markup");
    const auto b = analyzer::analyze("<p>)</p><!-- ] -->", markup);
    REQUIRE(b.violations.size() == 2);
    CHECK(b.violations[0].context == Context::Code);
    CHECK(b.violations[1].context == Context::Comment);
}

TEST_CASE("violation multiset equals the raw validation result") {
    const std::string text = "f(\"[\"); // }\nchar c = '{'; )";
    const auto raw = validate(text);
    const auto labeled = analyzer::analyze(text, c_profile());
    REQUIRE(labeled.violations.size() == raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i)
        CHECK(labeled.violations[i].violation == raw[i]);
}

TEST_CASE("profiles load from JSON") {
    const auto profile = LanguageProfile::from_json_text(R"json({
        "name": "toy",
        "line_comment": ";",
        "block_comment": ["(*", "*)"],
        "nested_block_comments": true,
        "string_forms": [{"delimiter": "\"", "escape_char": null, "multiline": true}]
    })json");
    CHECK(profile.name == "toy");
    CHECK(profile.line_comment == ";");
    REQUIRE(profile.block_comment.has_value());
    CHECK(profile.block_comment->first == "(*");
    CHECK(profile.nested_block_comments);
    REQUIRE(profile.string_forms.size() == 1);
    CHECK_FALSE(profile.string_forms[0].escape_char.has_value());
    CHECK(profile.string_forms[0].multiline);

    // nested block comments honored when flagged: the } sits after the inner
    // close marker but is still inside the outer comment
    const auto a = analyzer::analyze("(* a (* b *) } *) ]", profile);
    REQUIRE(a.violations.size() == 3);
    CHECK(a.violations[0].violation.offset == 13);
    CHECK(a.violations[0].context == Context::Comment);
    CHECK(a.violations[1].context == Context::Comment);
    CHECK(a.violations[2].context == Context::Code);

    CHECK_THROWS_AS(LanguageProfile::from_json_text("{"), ConfigError);
    CHECK_THROWS_AS(LanguageProfile::from_json_text("{\"name\": 3}"), ConfigError);
    CHECK_THROWS_AS(LanguageProfile::from_json_text(
                        R"({"name":"x","string_forms":[{"delimiter":""}]})"),
                    ConfigError);
}

TEST_CASE("shipped profile files match the builtins") {
    for (const char* name : {"c", "shell", "markup"}) {
        const auto path = std::string(MTEXT_SOURCE_DIR) + "/profiles/" + name + ".json";
        std::ifstream in(path);
        REQUIRE_MESSAGE(in.good(), path);
        std::ostringstream ss;
        ss << in.rdbuf();
        const auto loaded = LanguageProfile::from_json_text(ss.str());
        const auto& builtin = *LanguageProfile::builtin(name);
        CHECK(loaded.name == builtin.name);
        CHECK(loaded.line_comment == builtin.line_comment);
        CHECK(loaded.block_comment == builtin.block_comment);
        CHECK(loaded.nested_block_comments == builtin.nested_block_comments);
        REQUIRE(loaded.string_forms.size() == builtin.string_forms.size());
        for (std::size_t i = 0; i < loaded.string_forms.size(); ++i) {
            CHECK(loaded.string_forms[i].delimiter == builtin.string_forms[i].delimiter);
            CHECK(loaded.string_forms[i].escape_char == builtin.string_forms[i].escape_char);
            CHECK(loaded.string_forms[i].multiline == builtin.string_forms[i].multiline);
        }
    }
}

TEST_CASE("aggregating nothing gives an all-zero summary") {
    const auto s = analyzer::aggregate({});
    CHECK(s.total == 0);
    for (const auto n : s.by_context)
        CHECK(n == 0);
    for (const auto n : s.by_kind)
        CHECK(n == 0);
    CHECK(s.by_file.empty());
}

TEST_CASE("aggregation is order independent and additive") {
    // closers first, openers last: four violations nothing can pair away
    const std::string text1 = "a = \")\"; // ]";
    const std::string text2 = "b = '}'; (";
    auto r1 = analyzer::analyze(text1, c_profile(), MatcherConfig::standard(), "one.c");
    auto r2 = analyzer::analyze(text2, c_profile(), MatcherConfig::standard(), "two.c");

    std::vector<analyzer::ContextViolation> forward = r1.violations;
    forward.insert(forward.end(), r2.violations.begin(), r2.violations.end());
    std::vector<analyzer::ContextViolation> backward = r2.violations;
    backward.insert(backward.end(), r1.violations.begin(), r1.violations.end());

    const auto s1 = analyzer::aggregate(forward);
    const auto s2 = analyzer::aggregate(backward);
    CHECK(s1.total == 4);
    CHECK(s1.total == s2.total);
    CHECK(s1.by_context == s2.by_context);
    CHECK(s1.by_kind == s2.by_kind);
    CHECK(s1.by_file == s2.by_file);
    REQUIRE(s1.by_file.size() == 2);
    CHECK(s1.by_file[0].first == "one.c"); // sorted by path
    CHECK(s1.by_file[0].second + s1.by_file[1].second == s1.total);
}

TEST_CASE("json report carries the documented keys") {
    auto analysis = analyzer::analyze("const char *s = \"{\";", c_profile(),
                                      MatcherConfig::standard(), "a.c");
    const auto text = report::to_json({{"a.c", std::move(analysis.violations)}}, true);

    const auto j = nlohmann::json::parse(text);
    REQUIRE(j.contains("files"));
    REQUIRE(j.contains("summary"));
    REQUIRE(j["files"].size() == 1);
    CHECK(j["files"][0]["path"] == "a.c");
    const auto& v = j["files"][0]["violations"][0];
    for (const char* key : {"offset", "line", "col", "kind", "found", "expected", "context"})
        CHECK(v.contains(key));
    CHECK(v["kind"] == "UnmatchedOpener");
    CHECK(v["found"] == "{");
    CHECK(v["expected"].is_null());
    CHECK(v["context"] == "StringLiteral");
    CHECK(j["summary"]["total"] == 1);
    CHECK(j["summary"]["by_context"]["StringLiteral"] == 1);
}
