#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagcut {

enum class ErrorKind {
    InvalidDimension,
    InvalidModulus,
    InvalidArgument,
    InvalidRing,
    NotMonotoneLevel,
    Undeterminable,
    FloerUndefined,
    HypothesisViolation,
    Parse,
};

/// Stable kebab-case name used in JSON error documents.
std::string_view to_string(ErrorKind kind);

/// Process exit code for an error of this kind: 2 when a theorem
/// hypothesis fails, 1 for malformed input.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string cite = {});

    ErrorKind kind() const noexcept { return kind_; }
    /// Name of the hypothesis or rule that was violated; may be empty.
    const std::string& cite() const noexcept { return cite_; }

private:
    ErrorKind kind_;
    std::string cite_;
};

}  // namespace lagcut
