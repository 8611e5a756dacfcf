#include "matchertext/report.hpp"

#include "matchertext/utf8.hpp"

#include <algorithm>

#include "json.hpp"

namespace matchertext::report {

namespace {

using nlohmann::ordered_json;

ordered_json violation_json(const analyzer::ContextViolation& cv, bool with_context) {
    const Violation& v = cv.violation;
    ordered_json j;
    j["offset"] = v.offset;
    j["line"] = v.line;
    j["col"] = v.column;
    j["kind"] = to_string(v.kind);
    j["found"] = utf8::encode(v.found);
    j["expected"] = v.expected ? ordered_json(utf8::encode(*v.expected)) : ordered_json(nullptr);
    if (with_context)
        j["context"] = to_string(cv.context);
    return j;
}

} // namespace

std::string to_json(std::vector<FileReport> files, bool with_context) {
    std::sort(files.begin(), files.end(),
              [](const FileReport& a, const FileReport& b) { return a.path < b.path; });

    ordered_json root;
    root["files"] = ordered_json::array();

    std::vector<analyzer::ContextViolation> all;
    for (const auto& file : files) {
        ordered_json entry;
        entry["path"] = file.path;
        entry["violations"] = ordered_json::array();
        for (const auto& cv : file.violations) {
            entry["violations"].push_back(violation_json(cv, with_context));
            all.push_back(cv);
            all.back().file = file.path;
        }
        root["files"].push_back(std::move(entry));
    }

    const auto summary = analyzer::aggregate(all);
    ordered_json s;
    s["total"] = summary.total;
    if (with_context) {
        ordered_json by_context;
        by_context["StringLiteral"] = summary.by_context[0];
        by_context["Comment"] = summary.by_context[1];
        by_context["Code"] = summary.by_context[2];
        s["by_context"] = std::move(by_context);
    }
    ordered_json by_kind;
    by_kind["UnmatchedOpener"] = summary.by_kind[0];
    by_kind["UnexpectedCloser"] = summary.by_kind[1];
    by_kind["MismatchedPair"] = summary.by_kind[2];
    by_kind["ForbiddenChar"] = summary.by_kind[3];
    s["by_kind"] = std::move(by_kind);
    ordered_json by_file = ordered_json::array();
    for (const auto& [path, count] : summary.by_file) {
        ordered_json f;
        f["path"] = path;
        f["total"] = count;
        by_file.push_back(std::move(f));
    }
    s["by_file"] = std::move(by_file);
    root["summary"] = std::move(s);

    return root.dump();
}

} // namespace matchertext::report
