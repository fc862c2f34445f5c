#pragma once

#include <stdexcept>
#include <string>

namespace cubewalk {

enum class ErrorCode {
    EmptyGeneratingSet,
    IdentityInGeneratingSet,
    DuplicateGenerator,
    WidthMismatch,
    DimensionTooSmall,
    TooManyExtras,
    EdgeIndexOutOfRange,
    DegreeNotPowerOfTwo,
    TooManyWires,
    WireLimitExceeded,
    EmptyWindow,
    TooFewRows,
    ParseError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class WalkError : public std::runtime_error {
public:
    WalkError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw WalkError(code, message);
}

} // namespace cubewalk
