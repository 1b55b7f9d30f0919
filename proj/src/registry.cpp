#include <arithid/reference.hpp>
#include <arithid/registry.hpp>

#include <algorithm>
#include <cmath>

namespace arithid {

std::string_view name_of(Arity a) {
    switch (a) {
        case Arity::single_n: return "single_n";
        case Arity::pair_mn: return "pair(m,n)";
        case Arity::pair_kn: return "pair(k,n)";
    }
    return "?";
}

std::string_view name_of(CostClass c) {
    switch (c) {
        case CostClass::constant: return "constant";
        case CostClass::linear: return "linear";
        case CostClass::quadratic: return "quadratic";
    }
    return "?";
}

std::string_view name_of(EvalMode m) {
    switch (m) {
        case EvalMode::exact: return "exact";
        case EvalMode::rational: return "rational";
        case EvalMode::approx: return "approx";
    }
    return "?";
}

std::string Inputs::to_string() const {
    switch (arity) {
        case Arity::single_n: return "n=" + std::to_string(n);
        case Arity::pair_mn: return "m=" + std::to_string(partner) + ",n=" + std::to_string(n);
        case Arity::pair_kn: return "k=" + std::to_string(partner) + ",n=" + std::to_string(n);
    }
    return {};
}

namespace {

using Eval = std::function<IdentitySides(const Inputs&)>;

IdentityDescriptor single(std::string id, std::string name, std::string anchor, Int min_n,
                          EvalMode mode, CostClass cost, Eval evaluate, std::string note = {}) {
    IdentityDescriptor d;
    d.id = std::move(id);
    d.name = std::move(name);
    d.anchor = std::move(anchor);
    d.arity = Arity::single_n;
    d.min_n = min_n;
    d.domain = "n >= " + std::to_string(min_n);
    d.mode = mode;
    d.cost = cost;
    d.note = std::move(note);
    d.in_domain = [min_n](const Inputs& in) { return in.n >= min_n; };
    d.evaluate = std::move(evaluate);
    return d;
}

IdentityDescriptor pair(std::string id, std::string name, std::string anchor, Arity arity,
                        std::string domain, EvalMode mode, CostClass cost,
                        std::function<bool(const Inputs&)> in_domain, Eval evaluate) {
    IdentityDescriptor d;
    d.id = std::move(id);
    d.name = std::move(name);
    d.anchor = std::move(anchor);
    d.arity = arity;
    d.min_n = 1;
    d.domain = std::move(domain);
    d.mode = mode;
    d.cost = cost;
    d.in_domain = std::move(in_domain);
    d.evaluate = std::move(evaluate);
    return d;
}

bool positive_pair(const Inputs& in) { return in.n >= 1 && in.partner >= 1; }

IdentitySides from(Sides s) { return {std::move(s.lhs), std::move(s.rhs)}; }

std::vector<IdentityDescriptor> standard_descriptors() {
    using E = EvalMode;
    using C = CostClass;
    std::vector<IdentityDescriptor> r;

    r.push_back(pair(
        "I1", "gcd-floor", "gcd(k,n) = 2*sum_{j=1}^{n-1} floor(jk/n) + k + n - kn", Arity::pair_kn,
        "k >= 1, n >= 1", E::exact, C::linear, positive_pair, [](const Inputs& in) {
            return IdentitySides{gcd_via_floor(in.partner, in.n), gcd(in.partner, in.n)};
        }));
    r.push_back(pair(
        "I2", "floor-reciprocity",
        "sum_{k=1}^{n} floor(km/n) + sum_{k=1}^{m} floor(kn/m) = mn + gcd(m,n)", Arity::pair_mn,
        "m >= 1, n >= 1", E::exact, C::linear, positive_pair, [](const Inputs& in) {
            const auto [lhs, rhs] = floor_reciprocity_sides(in.partner, in.n);
            return IdentitySides{lhs, rhs};
        }));
    r.push_back(single(
        "I3", "phi-res1",
        "phi(n) = 4/(n^2-3n+2) * sum_{j=1}^{n-1} sum_{k<=n, gcd(k,n)=1} floor(jk/n)", 3, E::exact,
        C::quadratic, [](const Inputs& in) {
            return IdentitySides{phi_formula(in.n, PhiMethod::res1), phi_definition(in.n)};
        }));
    r.push_back(single("I4", "phi-fourier", "phi(n) = sum_{k=1}^{n} gcd(k,n) cos(2 pi k/n)", 1,
                       E::approx, C::linear, [](const Inputs& in) {
                           return IdentitySides{phi_formula(in.n, PhiMethod::fourier),
                                                phi_definition(in.n)};
                       }));
    r.push_back(single(
        "I5", "phi-res2",
        "phi(n) = -n(n-1)/2 + 2 * sum_{j=1}^{n-1} sum_{k=1}^{n} floor(jk/n) cos(2 pi k/n)", 2,
        E::approx, C::quadratic, [](const Inputs& in) {
            return IdentitySides{phi_formula(in.n, PhiMethod::res2), phi_definition(in.n)};
        }));
    r.push_back(single("I6", "menon",
                       "phi(n) tau(n) = sum_{k<=n, gcd(k,n)=1} gcd(k-1,n)", 1, E::exact,
                       C::linear, [](const Inputs& in) {
                           return IdentitySides{
                               menon_rhs(in.n),
                               checked_mul(phi_definition(in.n), tau_definition(in.n))};
                       }));
    r.push_back(pair("I7", "coprime-floor-lemma",
                     "gcd(k,n) = 1 => sum_{j=1}^{n-1} floor(jk/n) = (k-1)(n-1)/2", Arity::pair_kn,
                     "k >= 1, n >= 1, gcd(k,n) = 1", E::exact, C::linear,
                     [](const Inputs& in) {
                         return positive_pair(in) && gcd(in.partner, in.n) == 1;
                     },
                     [](const Inputs& in) { return from(coprime_floor_sides(in.partner, in.n)); }));
    r.push_back(single("I8", "coprime-sum-lemma", "sum_{k<=n, gcd(k,n)=1} k = n phi(n)/2", 2,
                       E::exact, C::linear,
                       [](const Inputs& in) { return from(coprime_sum_sides(in.n)); }));
    r.push_back(single(
        "I9", "cos-sum-zero", "sum_{k=1}^{n} cos(2 pi k/n) = 0", 2, E::approx, C::linear,
        [](const Inputs& in) { return from(cos_sum_sides(in.n)); },
        "The lemma pair as usually stated assigns both 0 and n/2 to sum_{k=1}^{n} k cos(2 pi k/n); "
        "the sum without the factor k is the one that vanishes, checked here. The k-weighted "
        "sum is I10."));
    r.push_back(single(
        "I10", "k-cos-sum-half", "sum_{k=1}^{n} k cos(2 pi k/n) = n/2", 2, E::approx, C::linear,
        [](const Inputs& in) { return from(k_cos_sum_sides(in.n)); },
        "Compared in doubled form 2*sum k cos(2 pi k/n) = n so both sides are integers. "
        "See I9 for the conflicting stated value 0."));
    r.push_back(single(
        "I11", "phi-res3",
        "phi(n) = 4/(2 tau(n) + n^2-5n+2) * sum_{j=1}^{n-1} sum_{k<=n, gcd(k,n)=1} floor(j(k-1)/n)",
        4, E::exact, C::quadratic, [](const Inputs& in) {
            return IdentitySides{phi_formula(in.n, PhiMethod::res3), phi_definition(in.n)};
        },
        "2 tau(n) + n^2 - 5n + 2 vanishes for n = 1, 2, 3."));
    r.push_back(single("I12", "tau-toto",
                       "tau(n) = sum_{k<=n, gcd(k,n)=1} gcd(k-1,n) / sum_{k=1}^{n} gcd(k,n) cos(2 pi k/n)",
                       1, E::approx, C::linear, [](const Inputs& in) {
                           return IdentitySides{tau_formula(in.n, TauForm::toto),
                                                tau_definition(in.n)};
                       }));
    r.push_back(single(
        "I13", "tau-res1-form",
        "tau(n) = (n^2-3n+2) * menon(n) / (4 * sum_{j=1}^{n-1} sum_{k<=n, gcd(k,n)=1} floor(jk/n))",
        3, E::exact, C::quadratic, [](const Inputs& in) {
            return IdentitySides{tau_formula(in.n, TauForm::res1_form), tau_definition(in.n)};
        }));
    r.push_back(single(
        "I14", "tau-res2-form",
        "tau(n) = menon(n) / (2 * sum_{j=1}^{n-1} sum_{k=1}^{n} floor(jk/n) cos(2 pi k/n) - n(n-1)/2)",
        2, E::approx, C::quadratic, [](const Inputs& in) {
            return IdentitySides{tau_formula(in.n, TauForm::res2_form), tau_definition(in.n)};
        }));
    r.push_back(single(
        "I15", "tau-res3-form",
        "tau(n) = (n^2-5n+2) * menon(n) / (4 * sum_{j=1}^{n-1} sum_{k<=n, gcd(k,n)=1} floor(j(k-1)/n) "
        "- 2 * menon(n))",
        1, E::exact, C::quadratic, [](const Inputs& in) {
            return IdentitySides{tau_formula(in.n, TauForm::res3_form), tau_definition(in.n)};
        }));

    const auto pillai = [&r](std::string id, std::string name, std::string anchor, PillaiForm form,
                             EvalMode mode) {
        r.push_back(single(std::move(id), std::move(name), std::move(anchor), 1, mode, C::linear,
                           [form](const Inputs& in) {
                               return IdentitySides{pillai_formula(in.n, form),
                                                    pillai_definition(in.n)};
                           }));
    };
    pillai("I16", "pillai-divisor-phi", "P(n) = sum_{d|n} d phi(n/d)", PillaiForm::divisor_phi,
           E::exact);
    pillai("I17", "pillai-divisor-tau-mu", "P(n) = sum_{d|n} d tau(d) mu(n/d)",
           PillaiForm::divisor_tau_mu, E::exact);
    pillai("I18", "pillai-padic-product", "P(n) = n prod_{p|n} (1 + nu_p(n) (1 - 1/p))",
           PillaiForm::padic_product, E::rational);
    pillai("I19", "pillai-phi-over-d", "P(n) = n sum_{d|n} phi(d)/d", PillaiForm::phi_over_d,
           E::rational);

    r.push_back(single("I20", "mobius-expsum", "mu(n) = sum_{k<=n, gcd(k,n)=1} exp(2 pi i k/n)", 1,
                       E::approx, C::linear, [](const Inputs& in) {
                           const ExpSum s = mobius_expsum(in.n);
                           return IdentitySides{s.real, Int{mu(factorize(in.n))},
                                                std::abs(s.imag)};
                       }));
    r.push_back(single("I21", "mobius-floor-sum", "sum_{k<=n} floor(n/k) mu(k) = 1", 1, E::exact,
                       C::linear, [](const Inputs& in) {
                           return IdentitySides{mobius_identity_lhs(in.n, MobiusSum::floor_sum),
                                                Int{1}};
                       }));
    r.push_back(single("I22", "kline-sine-sum", "sum_{jk<=n} sin(pi jk/2) mu(k) = 1", 1, E::exact,
                       C::linear, [](const Inputs& in) {
                           return IdentitySides{mobius_identity_lhs(in.n, MobiusSum::kline),
                                                Int{1}};
                       }));
    r.push_back(single("I23", "mu2-over-phi", "sum_{d|n} mu(d)^2/phi(d) = n/phi(n)", 1,
                       E::rational, C::constant,
                       [](const Inputs& in) { return from(mu2_over_phi_sides(in.n)); }));
    r.push_back(pair("I24", "phi-mult-gcd", "phi(mn) phi(d) = phi(m) phi(n) d, d = gcd(m,n)",
                     Arity::pair_mn, "m >= 1, n >= 1", E::exact, C::constant, positive_pair,
                     [](const Inputs& in) { return from(phi_mult_sides(in.partner, in.n)); }));
    r.push_back(single("I25", "mobius-inversion-phi", "phi(n) = sum_{d|n} mu(d) n/d", 1, E::exact,
                       C::linear, [](const Inputs& in) {
                           return IdentitySides{phi_mobius_inversion(factorize(in.n)),
                                                phi_definition(in.n)};
                       }));
    r.push_back(single("I26", "euler-product-phi", "phi(n) = n prod_{p|n} (1 - 1/p)", 1, E::exact,
                       C::linear, [](const Inputs& in) {
                           return IdentitySides{phi_factored(factorize(in.n)),
                                                phi_definition(in.n)};
                       }));
    return r;
}

}  // namespace

const Registry& Registry::standard() {
    static const Registry registry(standard_descriptors());
    return registry;
}

Registry::Registry(std::vector<IdentityDescriptor> descriptors)
    : descriptors_(std::move(descriptors)) {
    for (std::size_t i = 0; i < descriptors_.size(); ++i) {
        for (std::size_t j = i + 1; j < descriptors_.size(); ++j) {
            if (descriptors_[i].id == descriptors_[j].id) {
                throw std::invalid_argument("duplicate identity id " + descriptors_[i].id);
            }
        }
    }
}

const IdentityDescriptor& Registry::find(std::string_view id) const {
    auto it = std::find_if(descriptors_.begin(), descriptors_.end(),
                           [id](const IdentityDescriptor& d) { return d.id == id; });
    if (it == descriptors_.end()) {
        throw UnknownIdentity(std::string(id));
    }
    return *it;
}

bool Registry::contains(std::string_view id) const noexcept {
    return std::any_of(descriptors_.begin(), descriptors_.end(),
                       [id](const IdentityDescriptor& d) { return d.id == id; });
}

Registry Registry::with_evaluator(std::string_view id,
                                  std::function<IdentitySides(const Inputs&)> evaluate) const {
    auto copy = descriptors_;
    auto it = std::find_if(copy.begin(), copy.end(),
                           [id](const IdentityDescriptor& d) { return d.id == id; });
    if (it == copy.end()) {
        throw UnknownIdentity(std::string(id));
    }
    it->evaluate = std::move(evaluate);
    return Registry(std::move(copy));
}

std::vector<IdentitySummary> list_identities(const Registry& registry) {
    std::vector<IdentitySummary> out;
    out.reserve(registry.descriptors().size());
    for (const auto& d : registry.descriptors()) {
        out.push_back({d.id, d.name, d.anchor, std::string(name_of(d.arity)), d.domain,
                       std::string(name_of(d.mode)), std::string(name_of(d.cost)), d.note});
    }
    return out;
}

}  // namespace arithid
