#include "mecsbox/error.hpp"

namespace mecsbox {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::WrongResidueClass: return "WrongResidueClass";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::PrimeTooSmall: return "PrimeTooSmall";
        case ErrorCode::BOutOfRange: return "BOutOfRange";
        case ErrorCode::NotOnCurve: return "NotOnCurve";
        case ErrorCode::MixedCurves: return "MixedCurves";
        case ErrorCode::NotBijective: return "NotBijective";
        case ErrorCode::BadTable: return "BadTable";
        case ErrorCode::BadFormat: return "BadFormat";
    }
    return "Unknown";
}

bool is_format_error(ErrorCode code) noexcept {
    return code == ErrorCode::BadTable || code == ErrorCode::BadFormat;
}

}  // namespace mecsbox
