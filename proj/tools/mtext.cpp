// mtext: command-line front end for the matchertext toolkit.
//
// Data goes to stdout, diagnostics to stderr. Exit codes: 0 clean,
// 1 violations or conversion errors, 2 usage or configuration errors.

#include "matchertext/analyzer.hpp"
#include "matchertext/cesc.hpp"
#include "matchertext/core.hpp"
#include "matchertext/minml.hpp"
#include "matchertext/mlx.hpp"
#include "matchertext/mri.hpp"
#include "matchertext/report.hpp"
#include "matchertext/rex.hpp"
#include "matchertext/utf8.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using namespace matchertext;

constexpr int kExitClean = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

std::string read_stdin() {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

bool read_file(const std::string& path, std::string& out, std::string& error) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        error = path + ": cannot open";
        return false;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

/// Resolves --config/--pairs/$MTEXT_CONFIG into a matcher configuration.
/// The alphabet comes from --config; the pair set from the pairs file when
/// one is given, else the standard three ASCII pairs.
MatcherConfig resolve_config(const std::string& alphabet_name, std::string pairs_file) {
    const Alphabet alphabet =
        alphabet_name == "graphical" ? Alphabet::GraphicalOnly : Alphabet::AllUnicodeScalars;

    if (pairs_file.empty()) {
        if (const char* env = std::getenv("MTEXT_CONFIG"); env && *env)
            pairs_file = env;
    }
    if (pairs_file.empty())
        return MatcherConfig(MatcherConfig::standard().pairs(), alphabet);

    std::string text, error;
    if (!read_file(pairs_file, text, error))
        throw ConfigError(error);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(pairs_file + ": not valid JSON: " + e.what());
    }
    if (!j.contains("pairs") || !j["pairs"].is_array())
        throw ConfigError(pairs_file + ": expected a top-level \"pairs\" array");

    std::vector<std::pair<char32_t, char32_t>> pairs;
    for (const auto& entry : j["pairs"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string())
            throw ConfigError(pairs_file + ": each pair must be [opener, closer]");
        const auto o = entry[0].get<std::string>();
        const auto c = entry[1].get<std::string>();
        const auto od = utf8::decode(o, 0);
        const auto cd = utf8::decode(c, 0);
        if (!od || od->length != o.size() || !cd || cd->length != c.size())
            throw ConfigError(pairs_file + ": pair members must be single characters");
        pairs.emplace_back(od->scalar, cd->scalar);
    }
    return MatcherConfig(std::move(pairs), alphabet);
}

struct Input {
    std::string path; // "-" for stdin
    std::string text;
};

std::vector<Input> gather_inputs(const std::vector<std::string>& paths, bool& had_errors) {
    std::vector<Input> inputs;
    if (paths.empty()) {
        inputs.push_back({"-", read_stdin()});
        return inputs;
    }
    for (const auto& path : paths) {
        std::string text, error;
        if (!read_file(path, text, error)) {
            std::cerr << "mtext: " << error << "\n";
            had_errors = true;
            continue;
        }
        inputs.push_back({path, std::move(text)});
    }
    return inputs;
}

void print_violation(std::ostream& os, const std::string& path, const Violation& v,
                     const char* context) {
    os << path << ":" << v.line << ":" << v.column << ": " << to_string(v.kind) << " '"
       << utf8::encode(v.found) << "'";
    if (v.expected)
        os << " (expected '" << utf8::encode(*v.expected) << "')";
    if (context)
        os << " in " << context;
    os << "\n";
}

int run_check(const std::vector<std::string>& paths, const MatcherConfig& config, bool json) {
    bool had_errors = false;
    auto inputs = gather_inputs(paths, had_errors);

    std::vector<report::FileReport> reports;
    bool found = false;
    for (const auto& input : inputs) {
        report::FileReport fr{input.path, {}};
        try {
            for (const auto& v : validate(input.text, config)) {
                found = true;
                fr.violations.push_back({input.path, v, analyzer::Context::Code});
                if (!json)
                    print_violation(std::cerr, input.path, v, nullptr);
            }
        } catch (const EncodingError& e) {
            std::cerr << input.path << ": " << e.what() << "\n";
            had_errors = true;
            continue;
        }
        reports.push_back(std::move(fr));
    }
    if (json)
        std::cout << report::to_json(std::move(reports), false) << "\n";
    return (found || had_errors) ? kExitFindings : kExitClean;
}

int run_analyze(const std::vector<std::string>& paths, const MatcherConfig& config,
                const analyzer::LanguageProfile& profile, bool json) {
    bool had_errors = false;
    auto inputs = gather_inputs(paths, had_errors);
    std::sort(inputs.begin(), inputs.end(),
              [](const Input& a, const Input& b) { return a.path < b.path; });

    std::vector<report::FileReport> reports;
    std::vector<analyzer::ContextViolation> all;
    for (const auto& input : inputs) {
        try {
            auto analysis = analyzer::analyze(input.text, profile, config, input.path);
            for (const auto& w : analysis.warnings) {
                std::cerr << input.path << ":" << w.line << ": warning: "
                          << (w.kind == analyzer::LexWarning::Kind::UnterminatedString
                                  ? "unterminated string literal"
                                  : "unterminated comment")
                          << "\n";
            }
            if (!json)
                for (const auto& cv : analysis.violations)
                    print_violation(std::cout, input.path, cv.violation, to_string(cv.context));
            all.insert(all.end(), analysis.violations.begin(), analysis.violations.end());
            reports.push_back({input.path, std::move(analysis.violations)});
        } catch (const EncodingError& e) {
            std::cerr << input.path << ": " << e.what() << "\n";
            had_errors = true;
        }
    }

    if (json) {
        std::cout << report::to_json(std::move(reports), true) << "\n";
    } else {
        const auto summary = analyzer::aggregate(all);
        std::cout << "total " << summary.total << " (strings " << summary.by_context[0]
                  << ", comments " << summary.by_context[1] << ", code " << summary.by_context[2]
                  << ")\n";
        for (const auto& [path, count] : summary.by_file)
            std::cout << path << " " << count << "\n";
    }
    return (!all.empty() || had_errors) ? kExitFindings : kExitClean;
}

/// Applies `fn` to every stdin line, one result line per input line.
int run_per_line(const std::function<std::string(const std::string&)>& fn) {
    std::string line;
    bool had_errors = false;
    while (std::getline(std::cin, line)) {
        if (line.empty())
            continue;
        try {
            std::cout << fn(line) << "\n";
        } catch (const std::exception& e) {
            std::cerr << "mtext: " << e.what() << "\n";
            had_errors = true;
        }
    }
    return had_errors ? kExitFindings : kExitClean;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"matchertext toolkit: validation, codecs, transpilers and a source analyzer"};
    app.require_subcommand(1);

    std::string alphabet_name = "standard";
    std::string pairs_file;
    std::vector<std::string> paths;
    bool json = false;

    auto add_config_flags = [&](CLI::App* cmd) {
        cmd->add_option("--config", alphabet_name, "Alphabet variant")
            ->check(CLI::IsMember({"standard", "graphical"}));
        cmd->add_option("--pairs", pairs_file,
                        "JSON file with custom matcher pairs (default: $MTEXT_CONFIG)");
    };

    auto* check = app.add_subcommand("check", "Validate matchertext from stdin or files");
    add_config_flags(check);
    check->add_flag("--json", json, "Machine-readable report on stdout");
    check->add_option("paths", paths, "Files to check (default: stdin)");

    std::string style_name = "select";
    bool single_quote = false;
    auto* escape = app.add_subcommand("escape", "Encode stdin as a C-style literal body");
    escape->add_option("--style", style_name, "Escape style for unmatched matchers")
        ->check(CLI::IsMember({"select", "hex", "universal"}));
    escape->add_flag("--single-quote", single_quote, "Escape apostrophes instead of quotes");

    app.add_subcommand("unescape", "Decode a C-style literal body from stdin");

    std::string dialect_name;
    auto* ml_expand = app.add_subcommand("ml-expand", "Expand markup hosting extensions");
    ml_expand->add_option("--dialect", dialect_name, "Output dialect")
        ->required()
        ->check(CLI::IsMember({"html", "xhtml"}));

    std::string minml_target;
    auto* minml_cmd = app.add_subcommand("minml", "Convert MinML from stdin");
    minml_cmd->add_option("--to", minml_target, "Output language")
        ->required()
        ->check(CLI::IsMember({"html", "xml"}));

    auto* mri_cmd = app.add_subcommand("mri", "Resource identifier conversions, one per line");
    mri_cmd->require_subcommand(1);
    auto* mri_to_uri = mri_cmd->add_subcommand("to-uri", "MRI to URI");
    auto* mri_from_uri = mri_cmd->add_subcommand("from-uri", "URI to MRI (conservative wrap)");
    auto* mri_decode = mri_cmd->add_subcommand("decode", "Decode %XX and %[m] in a component");

    auto* rex_cmd = app.add_subcommand("rex", "Regular expression preprocessing");
    auto* rex_translate = rex_cmd->add_subcommand("translate", "Translate patterns, one per line");
    rex_cmd->require_subcommand(1);

    std::string profile_name;
    auto* analyze = app.add_subcommand("analyze", "Scan source files for matcher violations");
    analyze->add_option("--profile", profile_name, "Built-in profile name or JSON profile path")
        ->required();
    add_config_flags(analyze);
    analyze->add_flag("--json", json, "Machine-readable report on stdout");
    analyze->add_option("paths", paths, "Files to analyze (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\nRun with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (check->parsed())
            return run_check(paths, resolve_config(alphabet_name, pairs_file), json);

        if (escape->parsed()) {
            const auto style = style_name == "hex"         ? cesc::EscapeStyle::NumericHex
                               : style_name == "universal" ? cesc::EscapeStyle::NumericUniversal
                                                           : cesc::EscapeStyle::MatcherSelect;
            try {
                std::cout << cesc::encode(read_stdin(), style, single_quote);
                return kExitClean;
            } catch (const EncodingError& e) {
                std::cerr << "mtext: " << e.what() << "\n";
                return kExitFindings;
            }
        }

        if (app.get_subcommand("unescape")->parsed()) {
            try {
                std::cout << cesc::decode(read_stdin());
                return kExitClean;
            } catch (const std::exception& e) {
                std::cerr << "mtext: " << e.what() << "\n";
                return kExitFindings;
            }
        }

        if (ml_expand->parsed()) {
            const auto dialect =
                dialect_name == "xhtml" ? mlx::Dialect::Xhtml : mlx::Dialect::Html;
            try {
                std::cout << mlx::expand(read_stdin(), dialect);
                return kExitClean;
            } catch (const std::exception& e) {
                std::cerr << "mtext: " << e.what() << "\n";
                return kExitFindings;
            }
        }

        if (minml_cmd->parsed()) {
            try {
                const auto nodes = minml::parse(read_stdin());
                std::cout << (minml_target == "xml" ? minml::to_xml(nodes)
                                                    : minml::to_html(nodes));
                return kExitClean;
            } catch (const std::exception& e) {
                std::cerr << "mtext: " << e.what() << "\n";
                return kExitFindings;
            }
        }

        if (mri_to_uri->parsed())
            return run_per_line([](const std::string& s) { return mri::to_uri(mri::parse(s)); });
        if (mri_from_uri->parsed())
            return run_per_line([](const std::string& s) { return mri::render(mri::from_uri(s)); });
        if (mri_decode->parsed())
            return run_per_line([](const std::string& s) { return mri::decode_component(s); });

        if (rex_translate->parsed())
            return run_per_line([](const std::string& s) { return rex::translate(s); });

        if (analyze->parsed()) {
            const analyzer::LanguageProfile* builtin =
                analyzer::LanguageProfile::builtin(profile_name);
            analyzer::LanguageProfile loaded;
            if (!builtin) {
                std::string text, error;
                if (!read_file(profile_name, text, error)) {
                    std::cerr << "mtext: unknown profile '" << profile_name
                              << "' (not a built-in name or readable file)\n";
                    return kExitUsage;
                }
                loaded = analyzer::LanguageProfile::from_json_text(text);
                builtin = &loaded;
            }
            return run_analyze(paths, resolve_config(alphabet_name, pairs_file), *builtin, json);
        }
    } catch (const ConfigError& e) {
        std::cerr << "mtext: " << e.what() << "\n";
        return kExitUsage;
    }

    return kExitUsage;
}
