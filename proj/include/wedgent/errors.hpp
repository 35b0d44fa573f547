#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wedgent {

enum class ErrorCode {
    LengthMismatch,
    NotNormalized,
    ZeroState,
    InvalidPartition,
    IndexOutOfRange,
    TooLarge,
    TooManyFactors,
    DimensionMismatch,
    WrongArity,
    WrongDims,
    NotUnitary,
    InvalidArgument,
    SyntaxError,
    ArityMismatch,
    DimTooSmall,
    IoError,
    SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported as an Error carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class NotNormalizedError : public Error {
public:
    explicit NotNormalizedError(double norm);

    // Euclidean norm of the rejected amplitude vector.
    double norm() const noexcept { return norm_; }

private:
    double norm_;
};

class SyntaxError : public Error {
public:
    SyntaxError(ErrorCode code, std::size_t column, const std::string& message);

    // 1-based column of the offending character in the parsed text.
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

} // namespace wedgent
