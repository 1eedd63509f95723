#pragma once

#include <stdexcept>
#include <string>

namespace freespace {

enum class ErrorCode {
    InvalidArgument,   // bad parameters (invalid-pair, invalid-parameter, ...)
    ParseError,        // malformed JSON / rational text
    InvalidSpace,      // metric invariants violated
    SpaceMismatch,     // operands built over different spaces
    EmptySpace,        // operation needs >= 2 points
    DegenerateInput,   // e.g. the zero function where nonzero is required
    UnknownGallery,
    TooLarge,          // oracle cap exceeded
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace freespace
