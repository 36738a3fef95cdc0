#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mecsbox {

enum class ErrorCode {
    NotPrime,
    WrongResidueClass,
    TooSmall,
    PrimeTooSmall,
    BOutOfRange,
    NotOnCurve,
    MixedCurves,
    NotBijective,
    BadTable,
    BadFormat,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Parameter errors map to CLI exit code 2, format errors to 3.
bool is_format_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mecsbox
