#pragma once

#include <stdexcept>
#include <string>

namespace wrightfrac {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A series could not be certified within the configured term budget.
class NonConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A generalized power series operation would break the series invariants
/// (e.g. produce a negative exponent where none is allowed).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A verifier was invoked outside the hypothesis under which the claimed
/// identity is stated (e.g. nu <= 1 - beta for the fractional Laguerre identity).
class PreconditionViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The Laplace integral tail beyond the truncation point could not be bounded.
class TailNotCertified : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wrightfrac
