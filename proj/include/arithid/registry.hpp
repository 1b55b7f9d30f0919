#pragma once

// Declarative table of the 26 checked identities. Each descriptor carries its
// domain, arithmetic mode and per-instance cost class, and a closure that
// produces the two sides to compare.

#include <arithid/evaluators.hpp>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace arithid {

enum class Arity { single_n, pair_mn, pair_kn };
enum class CostClass { constant, linear, quadratic };

std::string_view name_of(Arity a);
std::string_view name_of(CostClass c);
std::string_view name_of(EvalMode m);

/// One instance of an identity: n alone, or n with a partner m (pair_mn) or k (pair_kn).
struct Inputs {
    Arity arity = Arity::single_n;
    Int partner = 0;
    Int n = 0;

    static Inputs single(Int n) { return {Arity::single_n, 0, n}; }
    static Inputs mn(Int m, Int n) { return {Arity::pair_mn, m, n}; }
    static Inputs kn(Int k, Int n) { return {Arity::pair_kn, k, n}; }

    std::string to_string() const;
    friend bool operator==(const Inputs&, const Inputs&) = default;
};

struct IdentitySides {
    EvalValue lhs;
    EvalValue rhs;
    /// Extra float error to fold into the reported residual (imaginary part of expsum).
    double residual_floor = 0.0;
};

struct IdentityDescriptor {
    std::string id;
    std::string name;
    std::string anchor;  ///< the formula being checked
    Arity arity = Arity::single_n;
    Int min_n = 1;
    std::string domain;  ///< human-readable domain, e.g. "n >= 4"
    EvalMode mode = EvalMode::exact;
    CostClass cost = CostClass::linear;
    std::string note;

    std::function<bool(const Inputs&)> in_domain;
    std::function<IdentitySides(const Inputs&)> evaluate;
};

class Registry {
public:
    /// The fixed I1..I26 table.
    static const Registry& standard();

    explicit Registry(std::vector<IdentityDescriptor> descriptors);

    const std::vector<IdentityDescriptor>& descriptors() const noexcept { return descriptors_; }
    const IdentityDescriptor& find(std::string_view id) const;
    bool contains(std::string_view id) const noexcept;

    /// Copy with the evaluator of one identity replaced.
    Registry with_evaluator(std::string_view id,
                            std::function<IdentitySides(const Inputs&)> evaluate) const;

private:
    std::vector<IdentityDescriptor> descriptors_;
};

struct IdentitySummary {
    std::string id;
    std::string name;
    std::string anchor;
    std::string arity;
    std::string domain;
    std::string mode;
    std::string cost_class;
    std::string note;
};

/// All descriptors in registry order.
std::vector<IdentitySummary> list_identities(const Registry& registry = Registry::standard());

}  // namespace arithid
