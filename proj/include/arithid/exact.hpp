#pragma once

/**
 * @file exact.hpp
 * @brief Exact integer and rational primitives.
 *
 * Every accumulation in the library goes through the checked helpers below;
 * an operation that would leave the 64-bit range throws OverflowError rather
 * than wrapping. Floor double-sums grow like n^3/4, which stays representable
 * for n up to 2e6.
 */

#include <arithid/errors.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace arithid {

/// Largest n for which the cubic floor double-sums are guaranteed to fit.
inline constexpr Int kMaxFloorSumN = 2'000'000;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
    }
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
    }
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
    }
    return r;
}

Int checked_pow(Int base, Int exponent);

/// Quotient of an identity's division; throws InexactDivision on a nonzero remainder.
Int exact_div(Int numerator, Int denominator);

/// Euclidean gcd on nonnegative integers. gcd(0, 0) = 0, gcd(0, n) = n.
constexpr Int gcd(Int a, Int b) {
    if (a < 0 || b < 0) {
        throw DomainError("gcd requires nonnegative arguments");
    }
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct PrimePower {
    Int prime;
    Int exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its canonical factorization.
class FactoredInteger {
public:
    FactoredInteger() = default;

    /// Validates the invariants: ascending primes, positive exponents, product equals value.
    FactoredInteger(Int value, std::vector<PrimePower> factors);

    Int value() const noexcept { return value_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }

    /// Exponent of p in value (the p-adic valuation); 0 when p does not divide.
    Int valuation(Int p) const noexcept;
    bool is_squarefree() const noexcept;

    friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

private:
    Int value_ = 1;
    std::vector<PrimePower> factors_;
};

std::ostream& operator<<(std::ostream& os, const FactoredInteger& f);

/// Smallest-prime-factor table for 0..limit. Immutable after construction.
class SpfSieve {
public:
    explicit SpfSieve(Int limit);

    Int limit() const noexcept { return limit_; }
    /// Smallest prime factor of n for 2 <= n <= limit.
    Int smallest_factor(Int n) const { return spf_.at(static_cast<std::size_t>(n)); }
    const std::vector<Int>& primes() const noexcept { return primes_; }

private:
    Int limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<Int> primes_;
};

inline constexpr Int kDefaultSieveLimit = 1'000'000;

/// Process-wide sieve up to kDefaultSieveLimit, built on first use.
const SpfSieve& default_sieve();

/// Factorizes n >= 1: table lookup up to the sieve limit, trial division above it.
FactoredInteger factorize(Int n, const SpfSieve& sieve);
FactoredInteger factorize(Int n);

bool is_prime(Int n);

/// All divisors of n, strictly ascending.
std::vector<Int> divisors(const FactoredInteger& n);

/// Reduced fraction with a positive denominator.
class ExactRational {
public:
    constexpr ExactRational() = default;
    ExactRational(Int value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    ExactRational(Int numerator, Int denominator);

    Int numerator() const noexcept { return num_; }
    Int denominator() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational&, const ExactRational&) = default;
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b);

    std::string to_string() const;

private:
    static ExactRational from_wide(__int128 numerator, __int128 denominator);

    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

}  // namespace arithid
