#include <arithid/reference.hpp>

namespace arithid {

namespace {

void require_positive(Int n, const char* what) {
    if (n < 1) {
        throw DomainError(std::string(what) + " requires n >= 1, got " + std::to_string(n));
    }
}

}  // namespace

ArithFunctionId ArithFunctionId::jordan(Int k) {
    if (k < 1) {
        throw DomainError("jordan order k must be >= 1");
    }
    return ArithFunctionId(ArithFunction::jordan, k);
}

ArithFunctionId ArithFunctionId::parse(const std::string& name, std::optional<Int> k) {
    if (name == "jordan") {
        return jordan(k.value_or(1));
    }
    if (k.has_value()) {
        throw DomainError("parameter k only applies to jordan");
    }
    if (name == "phi") return phi();
    if (name == "tau") return tau();
    if (name == "mu") return mu();
    if (name == "pillai") return pillai();
    if (name == "mertens") return mertens();
    throw DomainError("unknown arithmetic function: " + name);
}

std::string ArithFunctionId::name() const {
    switch (kind_) {
        case ArithFunction::phi: return "phi";
        case ArithFunction::tau: return "tau";
        case ArithFunction::mu: return "mu";
        case ArithFunction::pillai: return "pillai";
        case ArithFunction::jordan: return "jordan(" + std::to_string(*order_) + ")";
        case ArithFunction::mertens: return "mertens";
    }
    return {};
}

Int phi_definition(Int n) {
    require_positive(n, "phi");
    Int count = 0;
    for (Int k = 1; k <= n; ++k) {
        if (gcd(k, n) == 1) {
            ++count;
        }
    }
    return count;
}

Int phi_factored(const FactoredInteger& n) {
    Int result = n.value();
    for (const auto& f : n.factors()) {
        result = result / f.prime * (f.prime - 1);
    }
    return result;
}

Int tau_definition(Int n) {
    require_positive(n, "tau");
    Int count = 0;
    for (Int d = 1; d <= n / d; ++d) {
        if (n % d == 0) {
            count += (d * d == n) ? 1 : 2;
        }
    }
    return count;
}

Int tau_factored(const FactoredInteger& n) {
    Int result = 1;
    for (const auto& f : n.factors()) {
        result *= f.exponent + 1;
    }
    return result;
}

int mu(const FactoredInteger& n) {
    if (!n.is_squarefree()) {
        return 0;
    }
    return n.factors().size() % 2 == 0 ? 1 : -1;
}

Int pillai_definition(Int n) {
    require_positive(n, "pillai");
    Int sum = 0;
    for (Int k = 1; k <= n; ++k) {
        sum = checked_add(sum, gcd(k, n));
    }
    return sum;
}

Int jordan(Int k, const FactoredInteger& n) {
    if (k < 1) {
        throw DomainError("jordan order k must be >= 1");
    }
    Int result = checked_pow(n.value(), k);
    for (const auto& f : n.factors()) {
        const Int pk = checked_pow(f.prime, k);
        result = result / pk * (pk - 1);
    }
    return result;
}

Int mertens(Int n) {
    require_positive(n, "mertens");
    const auto table = mobius_table(n);
    Int sum = 0;
    for (Int i = 1; i <= n; ++i) {
        sum += table[static_cast<std::size_t>(i)];
    }
    return sum;
}

Int evaluate(const ArithFunctionId& fn, Int n) {
    require_positive(n, fn.name().c_str());
    switch (fn.kind()) {
        case ArithFunction::phi: return phi_factored(factorize(n));
        case ArithFunction::tau: return tau_factored(factorize(n));
        case ArithFunction::mu: return mu(factorize(n));
        case ArithFunction::pillai: return pillai_definition(n);
        case ArithFunction::jordan: return jordan(*fn.order(), factorize(n));
        case ArithFunction::mertens: return mertens(n);
    }
    return 0;
}

std::vector<std::int8_t> mobius_table(Int limit) {
    if (limit < 0) {
        throw DomainError("negative table limit");
    }
    const auto size = static_cast<std::size_t>(limit) + 1;
    std::vector<std::int8_t> mu_values(size, 0);
    std::vector<bool> composite(size, false);
    std::vector<Int> primes;
    if (limit >= 1) {
        mu_values[1] = 1;
    }
    for (Int i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            primes.push_back(i);
            mu_values[i] = -1;
        }
        for (Int p : primes) {
            if (p * i > limit) {
                break;
            }
            composite[p * i] = true;
            if (i % p == 0) {
                mu_values[p * i] = 0;
                break;
            }
            mu_values[p * i] = static_cast<std::int8_t>(-mu_values[i]);
        }
    }
    return mu_values;
}

ArithTable::ArithTable(Int limit) : limit_(limit) {
    if (limit < 1) {
        throw DomainError("table limit must be >= 1");
    }
    const auto size = static_cast<std::size_t>(limit) + 1;
    phi_.assign(size, 0);
    tau_.assign(size, 0);
    mertens_.assign(size, 0);
    mu_ = mobius_table(limit);

    // Linear sieve; lowest_power[i] is the exponent of the smallest prime of i.
    std::vector<Int> lowest_power(size, 0);
    std::vector<Int> primes;
    phi_[1] = 1;
    tau_[1] = 1;
    for (Int i = 2; i <= limit; ++i) {
        if (phi_[i] == 0) {
            primes.push_back(i);
            phi_[i] = i - 1;
            tau_[i] = 2;
            lowest_power[i] = 1;
        }
        for (Int p : primes) {
            if (p * i > limit) {
                break;
            }
            const Int m = p * i;
            if (i % p == 0) {
                phi_[m] = phi_[i] * p;
                lowest_power[m] = lowest_power[i] + 1;
                tau_[m] = tau_[i] / (lowest_power[i] + 1) * (lowest_power[m] + 1);
                break;
            }
            phi_[m] = phi_[i] * (p - 1);
            lowest_power[m] = 1;
            tau_[m] = tau_[i] * 2;
        }
    }
    for (Int i = 1; i <= limit; ++i) {
        mertens_[i] = mertens_[i - 1] + mu_[i];
    }
}

std::size_t ArithTable::index(Int n) const {
    if (n < 1 || n > limit_) {
        throw DomainError("table lookup outside 1.." + std::to_string(limit_));
    }
    return static_cast<std::size_t>(n);
}

}  // namespace arithid
