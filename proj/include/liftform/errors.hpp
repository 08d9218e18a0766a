#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace liftform {

// Base class for everything the analysis pipeline can reject at runtime.
// The CLI maps these to exit code 1; usage problems are handled by the
// argument parser and exit with 2.
class AnalysisError : public std::runtime_error {
public:
    explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

class MissingJointError : public AnalysisError {
public:
    MissingJointError(const std::string& joint, std::optional<std::size_t> frame = {})
        : AnalysisError(frame ? "missing joint " + joint + " in frame " + std::to_string(*frame)
                              : "missing joint " + joint),
          joint_name(joint), frame_index(frame) {}

    std::string joint_name;
    std::optional<std::size_t> frame_index;
};

class DegenerateGeometryError : public AnalysisError {
public:
    explicit DegenerateGeometryError(const std::string& what, std::optional<std::size_t> frame = {})
        : AnalysisError(frame ? what + " in frame " + std::to_string(*frame) : what),
          frame_index(frame) {}

    std::optional<std::size_t> frame_index;
};

class NoAdjacencyError : public AnalysisError {
public:
    explicit NoAdjacencyError(const std::string& joint)
        : AnalysisError("no adjacency entry for joint " + joint) {}
};

class TooFewSamplesError : public AnalysisError {
public:
    explicit TooFewSamplesError(const std::string& what) : AnalysisError(what) {}
};

class NonPositiveHeightError : public AnalysisError {
public:
    explicit NonPositiveHeightError(double value)
        : AnalysisError("height must be positive, got " + std::to_string(value)) {}
};

class EmptySeriesError : public AnalysisError {
public:
    explicit EmptySeriesError(const std::string& what) : AnalysisError(what) {}
};

class InvalidTemplateError : public AnalysisError {
public:
    explicit InvalidTemplateError(const std::string& what) : AnalysisError(what) {}
};

class ParseError : public AnalysisError {
public:
    ParseError(std::size_t line, const std::string& detail)
        : AnalysisError("parse error at line " + std::to_string(line) + ": " + detail),
          line_number(line), detail(detail) {}

    std::size_t line_number;
    std::string detail;
};

class IoError : public AnalysisError {
public:
    explicit IoError(const std::string& what) : AnalysisError(what) {}
};

}  // namespace liftform
