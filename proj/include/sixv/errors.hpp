#pragma once

#include <stdexcept>
#include <string>

namespace sixv {

// Root of the library's error hierarchy. Everything thrown on purpose
// derives from this, so callers can catch sixv::Error at the boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct ModeMismatchError : Error {
    explicit ModeMismatchError(const std::string& what) : Error(what) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what) : Error(what) {}
};

// Matrix with det = 0 passed where an inverse is required.
struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

// Dual requires a1, a2 != 0.
struct UndefinedDualError : Error {
    explicit UndefinedDualError(const std::string& what) : Error(what) {}
};

// Delta statistics require b1, b2 != 0.
struct StatisticsUndefinedError : Error {
    explicit StatisticsUndefinedError(const std::string& what) : Error(what) {}
};

// Family constructor parameters put the result outside S.
struct NotInSError : Error {
    explicit NotInSError(const std::string& what) : Error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Rejection sampling ran out of attempts.
struct SamplingError : Error {
    explicit SamplingError(const std::string& what) : Error(what) {}
};

// An identity the implementation relies on failed to hold; indicates a bug.
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace sixv
