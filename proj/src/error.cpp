#include "lagcut/error.hpp"

namespace lagcut {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidRing: return "invalid-ring";
    case ErrorKind::NotMonotoneLevel: return "not-monotone-level";
    case ErrorKind::Undeterminable: return "undeterminable";
    case ErrorKind::FloerUndefined: return "floer-undefined";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::Parse: return "parse-error";
    }
    return "unknown";
}

int exit_code_for(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::HypothesisViolation:
    case ErrorKind::NotMonotoneLevel:
    case ErrorKind::Undeterminable:
        return 2;
    default:
        return 1;
    }
}

Error::Error(ErrorKind kind, const std::string& message, std::string cite)
    : std::runtime_error(message), kind_(kind), cite_(std::move(cite))
{
}

}  // namespace lagcut
