#include "wedgent/errors.hpp"

#include <sstream>

namespace wedgent {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ZeroState: return "ZeroState";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooManyFactors: return "TooManyFactors";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::WrongDims: return "WrongDims";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DimTooSmall: return "DimTooSmall";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

namespace {
std::string norm_message(double norm)
{
    std::ostringstream os;
    os.precision(17);
    os << "state norm is " << norm << ", expected 1";
    return os.str();
}
} // namespace

NotNormalizedError::NotNormalizedError(double norm)
    : Error(ErrorCode::NotNormalized, norm_message(norm)), norm_(norm)
{
}

SyntaxError::SyntaxError(ErrorCode code, std::size_t column, const std::string& message)
    : Error(code, "column " + std::to_string(column) + ": " + message), column_(column)
{
}

} // namespace wedgent
