#include <arithid/evaluators.hpp>
#include <arithid/reference.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace arithid {

namespace {

void require_min(Int n, Int min_n, std::string_view method) {
    if (n < min_n) {
        throw DegenerateDomain(n, std::string(method));
    }
}

void require_width(Int n) {
    if (n > kMaxFloorSumN) {
        throw OverflowError("n=" + std::to_string(n) + " exceeds the floor-sum width guard " +
                            std::to_string(kMaxFloorSumN));
    }
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

// ---------------------------------------------------------------------------
// Values

ApproxInteger ApproxInteger::from_raw(double raw) {
    if (!std::isfinite(raw) || std::fabs(raw) > 9.0e15) {
        throw ResidualGuard(raw);
    }
    const double rounded = std::nearbyint(raw);
    const double residual = std::fabs(raw - rounded);
    if (residual >= kResidualGuard) {
        throw ResidualGuard(raw);
    }
    return ApproxInteger{raw, static_cast<Int>(rounded), residual};
}

EvalMode mode_of(const EvalValue& v) {
    return std::visit(overloaded{
                          [](Int) { return EvalMode::exact; },
                          [](const ExactRational&) { return EvalMode::rational; },
                          [](const ApproxInteger&) { return EvalMode::approx; },
                      },
                      v);
}

std::string to_string(const EvalValue& v) {
    return std::visit(overloaded{
                          [](Int x) { return std::to_string(x); },
                          [](const ExactRational& r) { return r.to_string(); },
                          [](const ApproxInteger& a) {
                              std::ostringstream os;
                              os.precision(17);
                              os << a.nearest << " (raw " << a.raw << ", residual " << a.residual
                                 << ")";
                              return os.str();
                          },
                      },
                      v);
}

Int integer_value(const EvalValue& v) {
    return std::visit(overloaded{
                          [](Int x) { return x; },
                          [](const ExactRational& r) {
                              if (!r.is_integer()) {
                                  throw NonIntegerResult("value " + r.to_string() +
                                                         " is not an integer");
                              }
                              return r.numerator();
                          },
                          [](const ApproxInteger& a) { return a.nearest; },
                      },
                      v);
}

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

double unit_cosine(Int k, Int n) {
    Int r = k % n;
    if (r < 0) r += n;
    return std::cos(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

double unit_sine(Int k, Int n) {
    Int r = k % n;
    if (r < 0) r += n;
    return std::sin(2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

// ---------------------------------------------------------------------------
// Floor-sum building blocks

Int floor_row_sum(Int k, Int n) {
    if (n < 1 || k < 0) {
        throw DomainError("floor_row_sum requires k >= 0 and n >= 1");
    }
    // j k stays below k (n - 1), and so does the sum; checking once covers the loop.
    (void)checked_mul(k, n - 1);
    const Int step_q = k / n;
    const Int step_r = k % n;
    Int q = 0;
    Int r = 0;
    Int sum = 0;
    for (Int j = 1; j < n; ++j) {
        q += step_q;
        r += step_r;
        if (r >= n) {
            ++q;
            r -= n;
        }
        sum += q;
    }
    return sum;
}

Int coprime_floor_double_sum(Int n) {
    require_width(n);
    Int total = 0;
    for (Int k = 1; k <= n; ++k) {
        if (gcd(k, n) == 1) {
            total = checked_add(total, floor_row_sum(k, n));
        }
    }
    return total;
}

Int shifted_floor_double_sum(Int n) {
    require_width(n);
    Int total = 0;
    for (Int k = 1; k <= n; ++k) {
        if (gcd(k, n) == 1) {
            total = checked_add(total, floor_row_sum(k - 1, n));
        }
    }
    return total;
}

double gcd_cosine_sum(Int n) {
    CompensatedSum sum;
    for (Int k = 1; k <= n; ++k) {
        sum.add(static_cast<double>(gcd(k, n)) * unit_cosine(k, n));
    }
    return sum.value();
}

double floor_cosine_double_sum(Int n) {
    require_width(n);
    CompensatedSum sum;
    for (Int k = 1; k <= n; ++k) {
        sum.add(static_cast<double>(floor_row_sum(k, n)) * unit_cosine(k, n));
    }
    return sum.value();
}

// ---------------------------------------------------------------------------
// gcd

Int gcd_via_floor(Int k, Int n) {
    require_min(n, 1, "gcd_floor");
    require_min(k, 1, "gcd_floor");
    const Int twice = checked_mul(2, floor_row_sum(k, n));
    const Int value = checked_sub(checked_add(checked_add(twice, k), n), checked_mul(k, n));
    return value;
}

IntPair floor_reciprocity_sides(Int m, Int n) {
    require_min(m, 1, "floor_reciprocity");
    require_min(n, 1, "floor_reciprocity");
    // floor_row_sum stops at j = n-1; the j = n term contributes exactly m.
    const Int left = checked_add(checked_add(floor_row_sum(m, n), m),
                                 checked_add(floor_row_sum(n, m), n));
    const Int right = checked_add(checked_mul(m, n), gcd(m, n));
    return {left, right};
}

// ---------------------------------------------------------------------------
// Totient

EvalValue phi_formula(Int n, PhiMethod method) {
    if (method == PhiMethod::res3) {
        require_min(n, 4, name_of(method));
        return phi_formula(n, method, tau_factored(factorize(n)));
    }
    return phi_formula(n, method, 0);
}

EvalValue phi_formula(Int n, PhiMethod method, Int tau_n) {
    switch (method) {
        case PhiMethod::res1: {
            require_min(n, 3, name_of(method));
            const Int s = coprime_floor_double_sum(n);
            return exact_div(checked_mul(4, s), checked_mul(n - 1, n - 2));
        }
        case PhiMethod::fourier:
            require_min(n, 1, name_of(method));
            return ApproxInteger::from_raw(gcd_cosine_sum(n));
        case PhiMethod::res2: {
            require_min(n, 2, name_of(method));
            const double triangle = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
            return ApproxInteger::from_raw(2.0 * floor_cosine_double_sum(n) - triangle);
        }
        case PhiMethod::res3: {
            require_min(n, 4, name_of(method));
            const Int s = shifted_floor_double_sum(n);
            const Int quadratic = checked_add(checked_sub(checked_mul(n, n), checked_mul(5, n)), 2);
            return exact_div(checked_mul(4, s), checked_add(checked_mul(2, tau_n), quadratic));
        }
    }
    throw DomainError("unknown phi method");
}

Int menon_rhs(Int n) {
    require_min(n, 1, "menon");
    Int sum = 0;
    for (Int k = 1; k <= n; ++k) {
        if (gcd(k, n) == 1) {
            sum = checked_add(sum, gcd(k - 1, n));
        }
    }
    return sum;
}

Int phi_mobius_inversion(const FactoredInteger& n) {
    Int sum = 0;
    for (Int d : divisors(n)) {
        sum = checked_add(sum, mu(factorize(d)) * (n.value() / d));
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Divisor count

EvalValue tau_formula(Int n, TauForm form) {
    switch (form) {
        case TauForm::toto: {
            require_min(n, 1, name_of(form));
            const double denominator = gcd_cosine_sum(n);
            if (std::nearbyint(denominator) == 0.0) {
                throw DivisionByZero("cosine gcd-sum vanished at n=" + std::to_string(n));
            }
            return ApproxInteger::from_raw(static_cast<double>(menon_rhs(n)) / denominator);
        }
        case TauForm::res1_form: {
            require_min(n, 3, name_of(form));
            const Int factor = checked_mul(n - 1, n - 2);
            return exact_div(checked_mul(factor, menon_rhs(n)),
                             checked_mul(4, coprime_floor_double_sum(n)));
        }
        case TauForm::res2_form: {
            require_min(n, 2, name_of(form));
            const double triangle = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
            const double denominator = 2.0 * floor_cosine_double_sum(n) - triangle;
            if (std::nearbyint(denominator) == 0.0) {
                throw DivisionByZero("floor-cosine denominator vanished at n=" + std::to_string(n));
            }
            return ApproxInteger::from_raw(static_cast<double>(menon_rhs(n)) / denominator);
        }
        case TauForm::res3_form: {
            require_min(n, 1, name_of(form));
            const Int menon = menon_rhs(n);
            const Int quadratic = checked_add(checked_sub(checked_mul(n, n), checked_mul(5, n)), 2);
            const Int denominator =
                checked_sub(checked_mul(4, shifted_floor_double_sum(n)), checked_mul(2, menon));
            return exact_div(checked_mul(quadratic, menon), denominator);
        }
    }
    throw DomainError("unknown tau form");
}

// ---------------------------------------------------------------------------
// Pillai

EvalValue pillai_formula(const FactoredInteger& n, PillaiForm form) {
    const Int value = n.value();
    switch (form) {
        case PillaiForm::divisor_phi: {
            Int sum = 0;
            for (Int d : divisors(n)) {
                sum = checked_add(sum, checked_mul(d, phi_factored(factorize(value / d))));
            }
            return sum;
        }
        case PillaiForm::divisor_tau_mu: {
            Int sum = 0;
            for (Int d : divisors(n)) {
                const Int term = checked_mul(d, tau_factored(factorize(d)));
                sum = checked_add(sum, checked_mul(term, mu(factorize(value / d))));
            }
            return sum;
        }
        case PillaiForm::padic_product: {
            ExactRational product(value);
            for (const auto& [p, e] : n.factors()) {
                product *= ExactRational(1) + ExactRational(e) * ExactRational(p - 1, p);
            }
            if (!product.is_integer()) {
                throw NonIntegerResult("p-adic product form gave " + product.to_string());
            }
            return product;
        }
        case PillaiForm::phi_over_d: {
            ExactRational sum(0);
            for (Int d : divisors(n)) {
                sum += ExactRational(phi_factored(factorize(d)), d);
            }
            sum *= ExactRational(value);
            if (!sum.is_integer()) {
                throw NonIntegerResult("phi(d)/d form gave " + sum.to_string());
            }
            return sum;
        }
    }
    throw DomainError("unknown pillai form");
}

EvalValue pillai_formula(Int n, PillaiForm form) {
    require_min(n, 1, name_of(form));
    return pillai_formula(factorize(n), form);
}

// ---------------------------------------------------------------------------
// Moebius sums

ExpSum mobius_expsum(Int n) {
    require_min(n, 1, "expsum");
    CompensatedSum re;
    CompensatedSum im;
    for (Int k = 1; k <= n; ++k) {
        if (gcd(k, n) == 1) {
            re.add(unit_cosine(k, n));
            im.add(unit_sine(k, n));
        }
    }
    const double imag = im.value();
    if (!(std::fabs(imag) < kResidualGuard)) {
        throw ResidualGuard(imag);
    }
    return ExpSum{ApproxInteger::from_raw(re.value()), imag};
}

EvalValue mobius_identity_lhs(Int n, MobiusSum which) {
    if (which == MobiusSum::expsum) {
        return mobius_expsum(n).real;
    }
    require_min(n, 1, name_of(which));
    const auto table = mobius_table(n);
    return mobius_identity_lhs(n, which, table);
}

EvalValue mobius_identity_lhs(Int n, MobiusSum which, std::span<const std::int8_t> mu_values) {
    require_min(n, 1, name_of(which));
    if (which == MobiusSum::expsum) {
        return mobius_expsum(n).real;
    }
    if (mu_values.size() <= static_cast<std::size_t>(n)) {
        throw DomainError("mobius table too short for n=" + std::to_string(n));
    }
    Int sum = 0;
    if (which == MobiusSum::floor_sum) {
        for (Int k = 1; k <= n; ++k) {
            sum += (n / k) * mu_values[static_cast<std::size_t>(k)];
        }
        return sum;
    }
    // sin(pi m / 2) for m mod 4 = 0, 1, 2, 3.
    constexpr int quarter_sine[4] = {0, 1, 0, -1};
    for (Int k = 1; k <= n; ++k) {
        const int m = mu_values[static_cast<std::size_t>(k)];
        if (m == 0) {
            continue;
        }
        Int inner = 0;
        for (Int j = 1; j <= n / k; ++j) {
            inner += quarter_sine[(j * k) & 3];
        }
        sum += m * inner;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Lemmas

Sides coprime_sum_sides(Int n) {
    require_min(n, 2, name_of(Lemma::coprime_sum));
    Int lhs = 0;
    for (Int k = 1; k <= n; ++k) {
        if (gcd(k, n) == 1) {
            lhs = checked_add(lhs, k);
        }
    }
    const Int rhs = exact_div(checked_mul(n, phi_factored(factorize(n))), 2);
    return {lhs, rhs};
}

Sides coprime_floor_sides(Int k, Int n) {
    require_min(n, 1, name_of(Lemma::coprime_floor));
    require_min(k, 1, name_of(Lemma::coprime_floor));
    if (gcd(k, n) != 1) {
        throw DegenerateDomain(n, "coprime_floor requires gcd(k, n) = 1, k=" + std::to_string(k));
    }
    const Int product = checked_mul(k - 1, n - 1);
    return {floor_row_sum(k, n), exact_div(product, 2)};
}

Sides cos_sum_sides(Int n) {
    require_min(n, 2, name_of(Lemma::cos_sum));
    CompensatedSum sum;
    for (Int k = 1; k <= n; ++k) {
        sum.add(unit_cosine(k, n));
    }
    return {ApproxInteger::from_raw(sum.value()), Int{0}};
}

Sides k_cos_sum_sides(Int n) {
    require_min(n, 2, name_of(Lemma::k_cos_sum));
    CompensatedSum sum;
    for (Int k = 1; k <= n; ++k) {
        sum.add(2.0 * static_cast<double>(k) * unit_cosine(k, n));
    }
    return {ApproxInteger::from_raw(sum.value()), n};
}

Sides mu2_over_phi_sides(Int n) {
    require_min(n, 1, name_of(Lemma::mu2_over_phi));
    const FactoredInteger f = factorize(n);
    ExactRational lhs(0);
    for (Int d : divisors(f)) {
        const FactoredInteger fd = factorize(d);
        if (fd.is_squarefree()) {
            lhs += ExactRational(1, phi_factored(fd));
        }
    }
    return {lhs, ExactRational(n, phi_factored(f))};
}

Sides phi_mult_sides(Int m, Int n) {
    require_min(m, 1, name_of(Lemma::phi_mult));
    require_min(n, 1, name_of(Lemma::phi_mult));
    const Int d = gcd(m, n);
    const Int phi_d = phi_factored(factorize(d));
    const Int lhs = checked_mul(phi_factored(factorize(checked_mul(m, n))), phi_d);
    const Int rhs =
        checked_mul(checked_mul(phi_factored(factorize(m)), phi_factored(factorize(n))), d);
    return {lhs, rhs};
}

Sides lemma_sides(Int n, Lemma lemma, Int param) {
    switch (lemma) {
        case Lemma::coprime_sum: return coprime_sum_sides(n);
        case Lemma::coprime_floor: return coprime_floor_sides(param, n);
        case Lemma::cos_sum: return cos_sum_sides(n);
        case Lemma::k_cos_sum: return k_cos_sum_sides(n);
        case Lemma::mu2_over_phi: return mu2_over_phi_sides(n);
        case Lemma::phi_mult: return phi_mult_sides(param, n);
    }
    throw DomainError("unknown lemma");
}

// ---------------------------------------------------------------------------
// Names

std::string_view name_of(PhiMethod m) {
    switch (m) {
        case PhiMethod::res1: return "res1";
        case PhiMethod::fourier: return "fourier";
        case PhiMethod::res2: return "res2";
        case PhiMethod::res3: return "res3";
    }
    return "?";
}

std::string_view name_of(TauForm f) {
    switch (f) {
        case TauForm::toto: return "toto";
        case TauForm::res1_form: return "res1_form";
        case TauForm::res2_form: return "res2_form";
        case TauForm::res3_form: return "res3_form";
    }
    return "?";
}

std::string_view name_of(PillaiForm f) {
    switch (f) {
        case PillaiForm::divisor_phi: return "divisor_phi";
        case PillaiForm::divisor_tau_mu: return "divisor_tau_mu";
        case PillaiForm::padic_product: return "padic_product";
        case PillaiForm::phi_over_d: return "phi_over_d";
    }
    return "?";
}

std::string_view name_of(MobiusSum s) {
    switch (s) {
        case MobiusSum::expsum: return "expsum";
        case MobiusSum::floor_sum: return "floor_sum";
        case MobiusSum::kline: return "kline";
    }
    return "?";
}

std::string_view name_of(Lemma l) {
    switch (l) {
        case Lemma::coprime_sum: return "coprime_sum";
        case Lemma::coprime_floor: return "coprime_floor";
        case Lemma::cos_sum: return "cos_sum";
        case Lemma::k_cos_sum: return "k_cos_sum";
        case Lemma::mu2_over_phi: return "mu2_over_phi";
        case Lemma::phi_mult: return "phi_mult";
    }
    return "?";
}

PhiMethod parse_phi_method(std::string_view s) {
    for (auto m : {PhiMethod::res1, PhiMethod::fourier, PhiMethod::res2, PhiMethod::res3}) {
        if (name_of(m) == s) return m;
    }
    throw DomainError("unknown phi method: " + std::string(s));
}

TauForm parse_tau_form(std::string_view s) {
    for (auto f : {TauForm::toto, TauForm::res1_form, TauForm::res2_form, TauForm::res3_form}) {
        if (name_of(f) == s) return f;
    }
    throw DomainError("unknown tau form: " + std::string(s));
}

PillaiForm parse_pillai_form(std::string_view s) {
    for (auto f : {PillaiForm::divisor_phi, PillaiForm::divisor_tau_mu, PillaiForm::padic_product,
                   PillaiForm::phi_over_d}) {
        if (name_of(f) == s) return f;
    }
    throw DomainError("unknown pillai form: " + std::string(s));
}

MobiusSum parse_mobius_sum(std::string_view s) {
    for (auto w : {MobiusSum::expsum, MobiusSum::floor_sum, MobiusSum::kline}) {
        if (name_of(w) == s) return w;
    }
    throw DomainError("unknown mobius sum: " + std::string(s));
}

Lemma parse_lemma(std::string_view s) {
    for (auto l : {Lemma::coprime_sum, Lemma::coprime_floor, Lemma::cos_sum, Lemma::k_cos_sum,
                   Lemma::mu2_over_phi, Lemma::phi_mult}) {
        if (name_of(l) == s) return l;
    }
    throw DomainError("unknown lemma: " + std::string(s));
}

}  // namespace arithid
