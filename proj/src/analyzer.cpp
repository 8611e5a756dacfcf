#include "matchertext/analyzer.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace matchertext::analyzer {

namespace {

struct Region {
    std::size_t begin;
    std::size_t end; // exclusive
    Context context;
};

std::size_t line_of(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i)
        if (text[i] == '\n')
            ++line;
    return line;
}

bool match_at(std::string_view text, std::size_t pos, std::string_view marker) {
    return !marker.empty() && text.size() - pos >= marker.size() &&
           text.compare(pos, marker.size(), marker) == 0;
}

/// Lexes comment and string regions per the profile; gaps are Code.
std::vector<Region> lex_regions(std::string_view text, const LanguageProfile& profile,
                                std::vector<LexWarning>& warnings) {
    std::vector<Region> regions;
    std::size_t i = 0;
    const std::size_t n = text.size();

    while (i < n) {
        // Collect every marker that matches here and keep the longest.
        enum class Hit { None, BlockComment, LineComment, String };
        Hit hit = Hit::None;
        std::size_t hit_len = 0;
        const StringForm* hit_form = nullptr;

        if (profile.block_comment && match_at(text, i, profile.block_comment->first) &&
            profile.block_comment->first.size() > hit_len) {
            hit = Hit::BlockComment;
            hit_len = profile.block_comment->first.size();
        }
        if (profile.line_comment && match_at(text, i, *profile.line_comment) &&
            profile.line_comment->size() > hit_len) {
            hit = Hit::LineComment;
            hit_len = profile.line_comment->size();
        }
        for (const auto& form : profile.string_forms) {
            if (match_at(text, i, form.delimiter) && form.delimiter.size() > hit_len) {
                hit = Hit::String;
                hit_len = form.delimiter.size();
                hit_form = &form;
            }
        }

        switch (hit) {
        case Hit::None:
            ++i;
            break;

        case Hit::BlockComment: {
            const auto& [open, close] = *profile.block_comment;
            std::size_t p = i + open.size();
            std::size_t depth = 1;
            std::size_t end = n;
            bool closed = false;
            while (p < n) {
                if (profile.nested_block_comments && match_at(text, p, open)) {
                    ++depth;
                    p += open.size();
                    continue;
                }
                if (match_at(text, p, close)) {
                    --depth;
                    p += close.size();
                    if (depth == 0) {
                        end = p;
                        closed = true;
                        break;
                    }
                    continue;
                }
                ++p;
            }
            if (!closed)
                warnings.push_back({LexWarning::Kind::UnterminatedComment, i, line_of(text, i)});
            regions.push_back({i, end, Context::Comment});
            i = end;
            break;
        }

        case Hit::LineComment: {
            auto lf = text.find('\n', i);
            const std::size_t end = lf == std::string_view::npos ? n : lf;
            regions.push_back({i, end, Context::Comment});
            i = end; // the line break itself stays Code
            break;
        }

        case Hit::String: {
            const auto& form = *hit_form;
            std::size_t p = i + form.delimiter.size();
            std::size_t end = n;
            bool closed = false;
            while (p < n) {
                if (form.escape_char && text[p] == *form.escape_char && p + 1 < n) {
                    p += 2;
                    continue;
                }
                if (match_at(text, p, form.delimiter)) {
                    end = p + form.delimiter.size();
                    closed = true;
                    break;
                }
                if (text[p] == '\n' && !form.multiline) {
                    end = p; // cut at the line break, survey-grade recovery
                    break;
                }
                ++p;
            }
            if (!closed)
                warnings.push_back({LexWarning::Kind::UnterminatedString, i, line_of(text, i)});
            regions.push_back({i, end, Context::StringLiteral});
            i = end;
            break;
        }
        }
    }
    return regions;
}

Context context_at(const std::vector<Region>& regions, std::size_t offset) {
    auto it = std::upper_bound(regions.begin(), regions.end(), offset,
                               [](std::size_t off, const Region& r) { return off < r.begin; });
    if (it != regions.begin()) {
        --it;
        if (offset >= it->begin && offset < it->end)
            return it->context;
    }
    return Context::Code;
}

std::string require_string(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string())
        throw ConfigError(std::string("profile field '") + key + "' must be a string");
    return j[key].get<std::string>();
}

} // namespace

const char* to_string(Context context) {
    switch (context) {
    case Context::StringLiteral: return "StringLiteral";
    case Context::Comment: return "Comment";
    case Context::Code: return "Code";
    }
    return "?";
}

const LanguageProfile* LanguageProfile::builtin(std::string_view name) {
    static const std::map<std::string, LanguageProfile, std::less<>> profiles = {
        {"c",
         {"c",
          "//",
          std::pair<std::string, std::string>{"/*", "*/"},
          false,
          {{"\"", '\\', false}, {"'", '\\', false}}}},
        {"shell",
         {"shell",
          "#",
          std::nullopt,
          false,
          {{"\"", '\\', true}, {"'", std::nullopt, true}}}},
        {"markup",
         {"markup",
          std::nullopt,
          std::pair<std::string, std::string>{"<!--", "-->"},
          false,
          {{"\"", std::nullopt, true}, {"'", std::nullopt, true}}}},
    };
    auto it = profiles.find(name);
    return it == profiles.end() ? nullptr : &it->second;
}

LanguageProfile LanguageProfile::from_json_text(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("profile is not valid JSON: ") + e.what());
    }

    LanguageProfile profile;
    profile.name = require_string(j, "name");
    if (j.contains("line_comment") && !j["line_comment"].is_null()) {
        profile.line_comment = require_string(j, "line_comment");
        if (profile.line_comment->empty())
            throw ConfigError("line_comment must be non-empty");
    }
    if (j.contains("block_comment") && !j["block_comment"].is_null()) {
        const auto& bc = j["block_comment"];
        if (!bc.is_array() || bc.size() != 2 || !bc[0].is_string() || !bc[1].is_string() ||
            bc[0].get<std::string>().empty() || bc[1].get<std::string>().empty())
            throw ConfigError("block_comment must be a pair of non-empty strings");
        profile.block_comment = {bc[0].get<std::string>(), bc[1].get<std::string>()};
    }
    if (j.contains("nested_block_comments"))
        profile.nested_block_comments = j["nested_block_comments"].get<bool>();
    if (j.contains("string_forms")) {
        for (const auto& f : j["string_forms"]) {
            StringForm form;
            form.delimiter = require_string(f, "delimiter");
            if (form.delimiter.empty())
                throw ConfigError("string delimiter must be non-empty");
            if (f.contains("escape_char") && !f["escape_char"].is_null()) {
                const auto esc = require_string(f, "escape_char");
                if (esc.size() != 1)
                    throw ConfigError("escape_char must be a single character");
                form.escape_char = esc[0];
            }
            if (f.contains("multiline"))
                form.multiline = f["multiline"].get<bool>();
            profile.string_forms.push_back(std::move(form));
        }
    }
    return profile;
}

Analysis analyze(std::string_view text, const LanguageProfile& profile,
                 const MatcherConfig& config, std::string file) {
    Analysis result;
    const auto violations = validate(text, config);
    const auto regions = lex_regions(text, profile, result.warnings);
    result.violations.reserve(violations.size());
    for (const auto& v : violations)
        result.violations.push_back({file, v, context_at(regions, v.offset)});
    return result;
}

Summary aggregate(std::span<const ContextViolation> violations) {
    Summary s;
    std::map<std::string, std::size_t> per_file;
    for (const auto& cv : violations) {
        ++s.total;
        ++s.by_context[static_cast<std::size_t>(cv.context)];
        ++s.by_kind[static_cast<std::size_t>(cv.violation.kind)];
        ++s.by_context_kind[static_cast<std::size_t>(cv.context)]
                           [static_cast<std::size_t>(cv.violation.kind)];
        ++per_file[cv.file];
    }
    s.by_file.assign(per_file.begin(), per_file.end()); // std::map is already sorted
    return s;
}

} // namespace matchertext::analyzer
