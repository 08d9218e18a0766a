#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "liftform/skeleton.hpp"

namespace liftform {

class ValidationFailedError : public AnalysisError {
public:
    explicit ValidationFailedError(ValidationReport report_in)
        : AnalysisError("stream failed validation with " +
                        std::to_string(report_in.issues.size()) + " issue(s)"),
          report(std::move(report_in)) {}

    ValidationReport report;
};

struct LoadedStream {
    MotionStream stream;
    ValidationReport report;             // validation merged with parse-level issues
    std::vector<std::string> warnings;   // ignored fields and the like
};

// Newline-delimited records: a metadata object followed by one frame object
// per line. Unknown fields are ignored with a warning; unknown joint names
// become validation issues. Malformed records throw ParseError with the
// 1-based line number.
LoadedStream load_stream(const std::filesystem::path& path);

// load_stream + strictness: throws ValidationFailedError unless the stream is
// clean or `lenient` is set.
MotionStream read_stream(const std::filesystem::path& path, bool lenient = false);

// Inverse of read_stream; numbers round-trip exactly.
void write_stream(const MotionStream& stream, const std::filesystem::path& path);

std::string format_issue(const ValidationIssue& issue);

}  // namespace liftform
