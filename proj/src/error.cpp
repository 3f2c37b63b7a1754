#include "mlc/error.hpp"

namespace mlc {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::EmptyTree: return "EmptyTree";
    case ErrorCode::NotPullable: return "NotPullable";
    case ErrorCode::NotPushable: return "NotPushable";
    case ErrorCode::ForbiddenPair: return "ForbiddenPair";
    case ErrorCode::NotPeriodic: return "NotPeriodic";
    case ErrorCode::WeightViolation: return "WeightViolation";
    case ErrorCode::PrefixMismatch: return "PrefixMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::IsStar: return "IsStar";
    case ErrorCode::SmallN: return "SmallN";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::BadStart: return "BadStart";
    }
    return "Unknown";
}

}  // namespace mlc
