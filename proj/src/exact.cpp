#include <arithid/exact.hpp>

#include <algorithm>
#include <limits>
#include <ostream>

namespace arithid {

Int checked_pow(Int base, Int exponent) {
    if (exponent < 0) {
        throw DomainError("negative exponent");
    }
    Int result = 1;
    for (Int i = 0; i < exponent; ++i) {
        result = checked_mul(result, base);
    }
    return result;
}

Int exact_div(Int numerator, Int denominator) {
    if (denominator == 0) {
        throw DivisionByZero("division by zero in exact quotient of " + std::to_string(numerator));
    }
    if (numerator % denominator != 0) {
        throw InexactDivision(numerator, denominator);
    }
    return numerator / denominator;
}

// ---------------------------------------------------------------------------
// FactoredInteger

FactoredInteger::FactoredInteger(Int value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {
    if (value_ < 1) {
        throw DomainError("factored integer must be positive");
    }
    Int product = 1;
    Int previous = 1;
    for (const auto& [p, e] : factors_) {
        if (p <= previous || e < 1 || !is_prime(p)) {
            throw DomainError("malformed factorization of " + std::to_string(value_));
        }
        product = checked_mul(product, checked_pow(p, e));
        previous = p;
    }
    if (product != value_) {
        throw DomainError("factors do not multiply to " + std::to_string(value_));
    }
}

Int FactoredInteger::valuation(Int p) const noexcept {
    for (const auto& f : factors_) {
        if (f.prime == p) {
            return f.exponent;
        }
    }
    return 0;
}

bool FactoredInteger::is_squarefree() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
}

std::ostream& operator<<(std::ostream& os, const FactoredInteger& f) {
    os << f.value() << " = ";
    if (f.factors().empty()) {
        return os << "1";
    }
    bool first = true;
    for (const auto& [p, e] : f.factors()) {
        if (!first) {
            os << " * ";
        }
        os << p;
        if (e > 1) {
            os << '^' << e;
        }
        first = false;
    }
    return os;
}

// ---------------------------------------------------------------------------
// Sieve and factorization

SpfSieve::SpfSieve(Int limit) : limit_(std::max<Int>(limit, 1)) {
    if (limit_ > std::numeric_limits<std::uint32_t>::max()) {
        throw DomainError("sieve limit exceeds 32-bit table entries");
    }
    spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
    for (Int i = 2; i <= limit_; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes_.push_back(i);
        }
        for (Int p : primes_) {
            if (p > spf_[i] || p * i > limit_) {
                break;
            }
            spf_[p * i] = static_cast<std::uint32_t>(p);
        }
    }
}

const SpfSieve& default_sieve() {
    static const SpfSieve sieve(kDefaultSieveLimit);
    return sieve;
}

namespace {

void push_factor(std::vector<PrimePower>& out, Int p) {
    if (!out.empty() && out.back().prime == p) {
        ++out.back().exponent;
    } else {
        out.push_back({p, 1});
    }
}

}  // namespace

FactoredInteger factorize(Int n, const SpfSieve& sieve) {
    if (n < 1) {
        throw DomainError("factorize requires n >= 1, got " + std::to_string(n));
    }
    std::vector<PrimePower> factors;
    Int rest = n;
    if (rest > sieve.limit()) {
        for (Int p : sieve.primes()) {
            if (p > rest / p) {
                break;
            }
            while (rest % p == 0) {
                push_factor(factors, p);
                rest /= p;
            }
            if (rest <= sieve.limit()) {
                break;
            }
        }
        if (rest > sieve.limit()) {
            // Past the sieve's primes: plain odd trial division.
            Int start = sieve.primes().empty() ? 2 : sieve.primes().back() + 2;
            if (start % 2 == 0) {
                ++start;
            }
            for (Int d = start; d <= rest / d; d += 2) {
                while (rest % d == 0) {
                    push_factor(factors, d);
                    rest /= d;
                }
            }
            if (rest > 1) {
                push_factor(factors, rest);
                rest = 1;
            }
        }
    }
    while (rest > 1) {
        Int p = sieve.smallest_factor(rest);
        push_factor(factors, p);
        rest /= p;
    }
    return FactoredInteger(n, std::move(factors));
}

FactoredInteger factorize(Int n) { return factorize(n, default_sieve()); }

bool is_prime(Int n) {
    if (n < 2) {
        return false;
    }
    const SpfSieve& sieve = default_sieve();
    if (n <= sieve.limit()) {
        return sieve.smallest_factor(n) == n;
    }
    for (Int p : sieve.primes()) {
        if (p > n / p) {
            return true;
        }
        if (n % p == 0) {
            return false;
        }
    }
    for (Int d = sieve.primes().back() + 2; d <= n / d; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<Int> divisors(const FactoredInteger& n) {
    std::vector<Int> out{1};
    for (const auto& [p, e] : n.factors()) {
        const std::size_t base = out.size();
        Int power = 1;
        for (Int i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * power);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// ExactRational

namespace {

__int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<Int>::min() && v <= std::numeric_limits<Int>::max();
}

}  // namespace

ExactRational::ExactRational(Int numerator, Int denominator) {
    if (denominator == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    *this = from_wide(numerator, denominator);
}

ExactRational ExactRational::from_wide(__int128 numerator, __int128 denominator) {
    if (denominator == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    __int128 g = gcd_wide(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (numerator == 0) {
        denominator = 1;
    }
    if (!fits(numerator) || !fits(denominator)) {
        throw OverflowError("rational result exceeds 64-bit range");
    }
    ExactRational r;
    r.num_ = static_cast<Int>(numerator);
    r.den_ = static_cast<Int>(denominator);
    return r;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    const __int128 n = static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * rhs.den_;
    return *this = from_wide(n, d);
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    const __int128 n = static_cast<__int128>(num_) * rhs.den_ - static_cast<__int128>(rhs.num_) * den_;
    const __int128 d = static_cast<__int128>(den_) * rhs.den_;
    return *this = from_wide(n, d);
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    return *this = from_wide(static_cast<__int128>(num_) * rhs.num_,
                             static_cast<__int128>(den_) * rhs.den_);
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (rhs.num_ == 0) {
        throw DivisionByZero("rational division by zero");
    }
    return *this = from_wide(static_cast<__int128>(num_) * rhs.den_,
                             static_cast<__int128>(den_) * rhs.num_);
}

std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
}

std::string ExactRational::to_string() const {
    if (den_ == 1) {
        return std::to_string(num_);
    }
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.to_string(); }

}  // namespace arithid
