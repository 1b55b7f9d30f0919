#pragma once

// Reference implementations of the arithmetic functions. The *_definition
// variants follow the defining sums literally and serve as oracles; the
// factored variants work from a prime factorization.

#include <arithid/exact.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arithid {

enum class ArithFunction { phi, tau, mu, pillai, jordan, mertens };

/// Function selector; the Jordan totient carries its order k >= 1.
class ArithFunctionId {
public:
    static ArithFunctionId phi() { return ArithFunctionId(ArithFunction::phi, std::nullopt); }
    static ArithFunctionId tau() { return ArithFunctionId(ArithFunction::tau, std::nullopt); }
    static ArithFunctionId mu() { return ArithFunctionId(ArithFunction::mu, std::nullopt); }
    static ArithFunctionId pillai() { return ArithFunctionId(ArithFunction::pillai, std::nullopt); }
    static ArithFunctionId mertens() { return ArithFunctionId(ArithFunction::mertens, std::nullopt); }
    static ArithFunctionId jordan(Int k);

    /// Parses "phi", "tau", "mu", "pillai", "mertens" or "jordan" (with k).
    static ArithFunctionId parse(const std::string& name, std::optional<Int> k = std::nullopt);

    ArithFunction kind() const noexcept { return kind_; }
    std::optional<Int> order() const noexcept { return order_; }
    std::string name() const;

    friend bool operator==(const ArithFunctionId&, const ArithFunctionId&) = default;

private:
    ArithFunctionId(ArithFunction kind, std::optional<Int> order) : kind_(kind), order_(order) {}

    ArithFunction kind_;
    std::optional<Int> order_;
};

/// Number of k in 1..n with gcd(k, n) = 1. phi(1) = 1.
Int phi_definition(Int n);
/// n * prod (1 - 1/p), one integer division per prime.
Int phi_factored(const FactoredInteger& n);

Int tau_definition(Int n);
Int tau_factored(const FactoredInteger& n);

int mu(const FactoredInteger& n);

/// Gcd-sum sum_{k=1..n} gcd(k, n).
Int pillai_definition(Int n);

/// Jordan totient J_k(n) = n^k prod (1 - p^-k). Throws OverflowError when n^k does not fit.
Int jordan(Int k, const FactoredInteger& n);

/// Mertens function M(n) = mu(1) + ... + mu(n), via a Moebius sieve.
Int mertens(Int n);

/// Evaluates a reference function at n (factored variant where one exists).
Int evaluate(const ArithFunctionId& fn, Int n);

/// Sieved phi, tau, mu and Mertens values for 0..limit (index 0 unused).
class ArithTable {
public:
    explicit ArithTable(Int limit);

    Int limit() const noexcept { return limit_; }
    Int phi(Int n) const { return phi_.at(index(n)); }
    Int tau(Int n) const { return tau_.at(index(n)); }
    int mu(Int n) const { return mu_.at(index(n)); }
    Int mertens(Int n) const { return mertens_.at(index(n)); }
    const std::vector<std::int8_t>& mu_values() const noexcept { return mu_; }

private:
    std::size_t index(Int n) const;

    Int limit_;
    std::vector<Int> phi_;
    std::vector<Int> tau_;
    std::vector<std::int8_t> mu_;
    std::vector<Int> mertens_;
};

/// mu(0..limit) by a linear sieve; entry 0 is 0.
std::vector<std::int8_t> mobius_table(Int limit);

}  // namespace arithid
