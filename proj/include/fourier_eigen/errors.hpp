#pragma once

#include <stdexcept>
#include <string>

namespace fourier_eigen {

/// Argument outside the mathematical domain of a function (x < 0, r <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The requested value is infinite (e.g. H^(delta)(0) for delta >= 1).
class DivergenceError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A caller-supplied object violates a documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A series, quadrature or acceleration scheme failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Feature deliberately not supported (e.g. probe orders above the precomputed range).
class UnsupportedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class Error>
[[noreturn]] inline void raise(const char* where, const std::string& what)
{
    throw Error(std::string(where) + ": " + what);
}

} // namespace detail
} // namespace fourier_eigen
