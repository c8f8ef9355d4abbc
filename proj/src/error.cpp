#include <bondlab/error.hpp>

namespace bondlab {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::InvalidEdge:       return "InvalidEdge";
        case ErrorCode::IndexOutOfRange:   return "IndexOutOfRange";
        case ErrorCode::SizeLimit:         return "SizeLimit";
        case ErrorCode::ParseError:        return "ParseError";
        case ErrorCode::EdgeNotFound:      return "EdgeNotFound";
        case ErrorCode::InvalidRotation:   return "InvalidRotation";
        case ErrorCode::RequiresConnected: return "RequiresConnected";
        case ErrorCode::BudgetExceeded:    return "BudgetExceeded";
        case ErrorCode::NoEdges:           return "NoEdges";
        case ErrorCode::CapTooSmall:       return "CapTooSmall";
        case ErrorCode::SurfaceMismatch:   return "SurfaceMismatch";
        case ErrorCode::InvalidThreshold:  return "InvalidThreshold";
        case ErrorCode::OutOfRegime:       return "OutOfRegime";
        case ErrorCode::InvalidArgument:   return "InvalidArgument";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    _code(code)
{
}

} // namespace bondlab
