#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bondlab {

enum class ErrorCode {
    InvalidEdge,
    IndexOutOfRange,
    SizeLimit,
    ParseError,
    EdgeNotFound,
    InvalidRotation,
    RequiresConnected,
    BudgetExceeded,
    NoEdges,
    CapTooSmall,
    SurfaceMismatch,
    InvalidThreshold,
    OutOfRegime,
    InvalidArgument,
};

auto to_string(ErrorCode code) -> std::string_view;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string & message);

    auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

} // namespace bondlab
