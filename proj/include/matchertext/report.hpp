#pragma once

#include "matchertext/analyzer.hpp"
#include "matchertext/core.hpp"

#include <string>
#include <vector>

namespace matchertext::report {

/// Violations of one input, already sorted by offset. `context` entries are
/// ignored when the report is built without contexts.
struct FileReport {
    std::string path;
    std::vector<analyzer::ContextViolation> violations;
};

/// Serializes the report:
///   {"files":[{"path":...,"violations":[{offset,line,col,kind,found,
///    expected,context}]}],"summary":{...}}
/// With `with_context` false (plain checking, no lexing) the per-violation
/// "context" key and the summary's "by_context" table are omitted.
/// Output key order is fixed; files are sorted by path.
std::string to_json(std::vector<FileReport> files, bool with_context);

} // namespace matchertext::report
