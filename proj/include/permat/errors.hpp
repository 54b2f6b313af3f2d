#pragma once

#include <stdexcept>
#include <string>

namespace permat {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatchError : Error {
    explicit FieldMismatchError(const std::string& msg = "operands belong to different fields")
        : Error(msg) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& msg = "division by zero") : Error(msg) {}
};

struct NotMonicError : Error {
    explicit NotMonicError(const std::string& msg = "polynomial is not monic") : Error(msg) {}
};

struct NotPeriodicError : Error {
    explicit NotPeriodicError(const std::string& msg = "matrix is not periodic") : Error(msg) {}
};

struct NotTorsionError : Error {
    explicit NotTorsionError(const std::string& msg = "matrix is not torsion") : Error(msg) {}
};

struct NotSplitOverFieldError : Error {
    explicit NotSplitOverFieldError(const std::string& msg =
                                        "characteristic polynomial does not split into x-powers "
                                        "and torsion factors over this field")
        : Error(msg) {}
};

struct RankTooLowError : Error {
    explicit RankTooLowError(const std::string& msg = "rank of the matrix is below n/2") : Error(msg) {}
};

struct DerogatoryError : Error {
    explicit DerogatoryError(const std::string& msg = "matrix is derogatory (minpoly != charpoly)")
        : Error(msg) {}
};

struct TraceMismatchError : Error {
    explicit TraceMismatchError(const std::string& msg = "target trace does not match matrix trace")
        : Error(msg) {}
};

/// An internal identity failed to verify; indicates a bug, never user error.
struct InternalInconsistencyError : Error {
    explicit InternalInconsistencyError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace permat
