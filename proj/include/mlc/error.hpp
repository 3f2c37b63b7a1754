#pragma once

#include <stdexcept>
#include <string>

namespace mlc {

enum class ErrorCode {
    InvalidWeight,
    EmptyTree,
    NotPullable,
    NotPushable,
    ForbiddenPair,
    NotPeriodic,
    WeightViolation,
    PrefixMismatch,
    PreconditionViolated,
    IsStar,
    SmallN,
    BoundExceeded,
    OutOfRange,
    NotCoprime,
    BadStart,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mlc
