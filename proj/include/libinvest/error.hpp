#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace libinvest {

// Source position, 1-based. Used by lexing/extraction diagnostics.
struct SourcePos {
    std::size_t line = 0;
    std::size_t column = 0;
};

class Error : public std::runtime_error {
public:
    explicit Error(std::string message) : std::runtime_error(std::move(message)) {}
};

// Raised while scanning source text: unterminated comment or string,
// unmatched delimiter, undecodable bytes, unexpected character.
class LexError : public Error {
public:
    LexError(std::string message, SourcePos pos, std::string file = {})
        : Error(format(message, pos, file)), pos_(pos), file_(std::move(file)) {}

    SourcePos pos() const { return pos_; }
    const std::string& file() const { return file_; }

private:
    static std::string format(const std::string& message, SourcePos pos, const std::string& file) {
        std::string out = file.empty() ? "" : file + ":";
        out += std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
        return out;
    }

    SourcePos pos_;
    std::string file_;
};

// Raised when a profile name is unknown or a profile file is malformed.
// Carries the offending field and line where applicable.
class ProfileError : public Error {
public:
    ProfileError(std::string message, std::string field = {}, std::size_t line = 0)
        : Error(format(message, field, line)), field_(std::move(field)), line_(line) {}

    const std::string& field() const { return field_; }
    std::size_t line() const { return line_; }

private:
    static std::string format(const std::string& message, const std::string& field, std::size_t line) {
        std::string out = "profile: " + message;
        if (!field.empty()) out += " (field '" + field + "')";
        if (line != 0) out += " at line " + std::to_string(line);
        return out;
    }

    std::string field_;
    std::size_t line_;
};

// A metric whose denominator vanished. Never reported as a silent zero;
// callers decide whether the condition is fatal.
class UndefinedMetricError : public Error {
public:
    UndefinedMetricError(std::string metric, std::string denominator)
        : Error("metric '" + metric + "' undefined: denominator " + denominator + " is zero"),
          metric_(std::move(metric)),
          denominator_(std::move(denominator)) {}

    const std::string& metric() const { return metric_; }
    const std::string& denominator() const { return denominator_; }

private:
    std::string metric_;
    std::string denominator_;
};

// Control graph that cannot come from a program (CC < 1 or e < n - p).
class InvalidGraphError : public Error {
public:
    using Error::Error;
};

// Manifest / project loading problems: missing directories, duplicate
// paths, empty program sets, unreadable files.
class ProjectError : public Error {
public:
    using Error::Error;
};

}  // namespace libinvest
