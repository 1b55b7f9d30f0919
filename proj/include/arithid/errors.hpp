#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arithid {

using Int = std::int64_t;

/// Base for every error raised by the library.
class ArithError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the function's mathematical domain (n = 0, negative gcd argument).
class DomainError : public ArithError {
public:
    using ArithError::ArithError;
};

/// A checked integer operation would wrap.
class OverflowError : public ArithError {
public:
    using ArithError::ArithError;
};

/// An identity was asked for an n where its denominator vanishes or its sum is empty.
class DegenerateDomain : public ArithError {
public:
    DegenerateDomain(Int n, std::string method)
        : ArithError("degenerate domain: " + method + " is undefined at n=" + std::to_string(n)),
          n_(n), method_(std::move(method)) {}

    Int n() const noexcept { return n_; }
    const std::string& method() const noexcept { return method_; }

private:
    Int n_;
    std::string method_;
};

/// An integer division that the identity claims is exact left a remainder.
class InexactDivision : public ArithError {
public:
    InexactDivision(Int numerator, Int denominator)
        : ArithError("inexact division: " + std::to_string(numerator) + " / " +
                     std::to_string(denominator)),
          numerator_(numerator), denominator_(denominator) {}

    Int numerator() const noexcept { return numerator_; }
    Int denominator() const noexcept { return denominator_; }

private:
    Int numerator_;
    Int denominator_;
};

/// A floating-point sum is too far from an integer to be rounded safely.
class ResidualGuard : public ArithError {
public:
    explicit ResidualGuard(double raw)
        : ArithError("residual guard tripped: " + std::to_string(raw) +
                     " is not within 0.49 of an integer"),
          raw_(raw) {}

    double raw() const noexcept { return raw_; }

private:
    double raw_;
};

/// A rational form that should be integral kept a denominator.
class NonIntegerResult : public ArithError {
public:
    using ArithError::ArithError;
};

/// A denominator evaluated to zero inside the declared domain.
class DivisionByZero : public ArithError {
public:
    using ArithError::ArithError;
};

class UnknownIdentity : public std::invalid_argument {
public:
    explicit UnknownIdentity(const std::string& id)
        : std::invalid_argument("unknown identity: " + id) {}
};

class UnknownTarget : public std::invalid_argument {
public:
    explicit UnknownTarget(const std::string& target)
        : std::invalid_argument("unknown bench target: " + target) {}
};

}  // namespace arithid
