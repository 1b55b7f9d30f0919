#pragma once

/**
 * @file evaluators.hpp
 * @brief Evaluators for the floor-sum, gcd-sum and cosine-sum formulas.
 *
 * Each evaluator computes one formula literally: floor double-sums are
 * summed term by term, cosine-weighted sums are accumulated with
 * compensated summation and rounded only when the result lies within 0.49
 * of an integer. Wherever a formula divides, the division is checked for a
 * zero remainder instead of truncated, since a remainder is how a wrong
 * formula would show up.
 *
 * Domains: every evaluator throws DegenerateDomain below its minimum n
 * (where a denominator vanishes or a sum is empty).
 */

#include <arithid/exact.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>

namespace arithid {

/// A float sum paired with the integer it rounds to.
struct ApproxInteger {
    double raw = 0.0;
    Int nearest = 0;
    double residual = 0.0;  ///< |raw - nearest|

    /// Rounds raw; throws ResidualGuard when the residual reaches kResidualGuard.
    static ApproxInteger from_raw(double raw);

    friend bool operator==(const ApproxInteger&, const ApproxInteger&) = default;
};

/// Rounding is refused at or above this distance from an integer.
inline constexpr double kResidualGuard = 0.49;
/// Residuals above this are reported as warnings by the verifier.
inline constexpr double kResidualWarning = 1e-3;

using EvalValue = std::variant<Int, ExactRational, ApproxInteger>;

enum class EvalMode { exact, rational, approx };

EvalMode mode_of(const EvalValue& v);
std::string to_string(const EvalValue& v);
/// Integer content: the exact value, the integral rational, or the nearest integer.
Int integer_value(const EvalValue& v);

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// cos(2 pi k / n) with the angle reduced to k mod n first.
double unit_cosine(Int k, Int n);
double unit_sine(Int k, Int n);

// -- floor-sum building blocks ----------------------------------------------

/// sum_{j=1}^{n-1} floor(j k / n).
Int floor_row_sum(Int k, Int n);
/// sum_{j=1}^{n-1} sum_{k<=n, gcd(k,n)=1} floor(j k / n).
Int coprime_floor_double_sum(Int n);
/// sum_{j=1}^{n-1} sum_{k<=n, gcd(k,n)=1} floor(j (k-1) / n).
Int shifted_floor_double_sum(Int n);
/// sum_{k=1}^{n} gcd(k, n) cos(2 pi k / n), compensated.
double gcd_cosine_sum(Int n);
/// sum_{j=1}^{n-1} sum_{k=1}^{n} floor(j k / n) cos(2 pi k / n), compensated.
double floor_cosine_double_sum(Int n);

// -- gcd ---------------------------------------------------------------------

/// 2 sum_{j=1}^{n-1} floor(j k / n) + k + n - k n, which equals gcd(k, n).
Int gcd_via_floor(Int k, Int n);

struct IntPair {
    Int first;
    Int second;
    friend bool operator==(const IntPair&, const IntPair&) = default;
};

/// (sum_{k<=n} floor(k m / n) + sum_{k<=m} floor(k n / m), m n + gcd(m, n)).
IntPair floor_reciprocity_sides(Int m, Int n);

// -- totient -----------------------------------------------------------------

enum class PhiMethod { res1, fourier, res2, res3 };

/// phi(n) from a floor-sum or cosine-sum formula.
///   res1:    4 S / ((n-1)(n-2)),         n >= 3, exact
///   fourier: sum gcd(k,n) cos(2 pi k/n), n >= 1, approx
///   res2:    2 R - n(n-1)/2,             n >= 2, approx
///   res3:    4 S' / (2 tau + n^2-5n+2),  n >= 4, exact
EvalValue phi_formula(Int n, PhiMethod method);
/// res3 with a precomputed tau(n); other methods ignore tau_n.
EvalValue phi_formula(Int n, PhiMethod method, Int tau_n);

/// Menon sum: sum over k <= n coprime to n of gcd(k-1, n).
Int menon_rhs(Int n);

/// sum_{d|n} mu(d) n/d.
Int phi_mobius_inversion(const FactoredInteger& n);

// -- divisor count -----------------------------------------------------------

enum class TauForm { toto, res1_form, res2_form, res3_form };

EvalValue tau_formula(Int n, TauForm form);

// -- Pillai gcd-sum ----------------------------------------------------------

enum class PillaiForm { divisor_phi, divisor_tau_mu, padic_product, phi_over_d };

EvalValue pillai_formula(const FactoredInteger& n, PillaiForm form);
EvalValue pillai_formula(Int n, PillaiForm form);

// -- Moebius sums ------------------------------------------------------------

enum class MobiusSum { expsum, floor_sum, kline };

struct ExpSum {
    ApproxInteger real;
    double imag = 0.0;
};

/// sum_{k<=n, gcd(k,n)=1} exp(2 pi i k / n); throws ResidualGuard if |imag| >= 0.49.
ExpSum mobius_expsum(Int n);

EvalValue mobius_identity_lhs(Int n, MobiusSum which);
/// Uses a caller-supplied mu table with mu_values.size() > n.
EvalValue mobius_identity_lhs(Int n, MobiusSum which, std::span<const std::int8_t> mu_values);

// -- lemmas ------------------------------------------------------------------

struct Sides {
    EvalValue lhs;
    EvalValue rhs;
};

enum class Lemma { coprime_sum, coprime_floor, cos_sum, k_cos_sum, mu2_over_phi, phi_mult };

/// (sum_{k<=n, coprime} k, n phi(n) / 2); n >= 2.
Sides coprime_sum_sides(Int n);
/// (sum_{j<n} floor(j k / n), (k-1)(n-1)/2); requires gcd(k, n) = 1.
Sides coprime_floor_sides(Int k, Int n);
/// (sum_{k<=n} cos(2 pi k / n), 0); n >= 2.
Sides cos_sum_sides(Int n);
/// (2 sum_{k<=n} k cos(2 pi k / n), n); n >= 2. Doubled so both sides are integers.
Sides k_cos_sum_sides(Int n);
/// (sum_{d|n} mu(d)^2 / phi(d), n / phi(n)) as reduced fractions.
Sides mu2_over_phi_sides(Int n);
/// (phi(m n) phi(d), phi(m) phi(n) d) with d = gcd(m, n).
Sides phi_mult_sides(Int m, Int n);

/// Dispatches on lemma; param is k for coprime_floor and m for phi_mult.
Sides lemma_sides(Int n, Lemma lemma, Int param = 0);

// -- names -------------------------------------------------------------------

std::string_view name_of(PhiMethod m);
std::string_view name_of(TauForm f);
std::string_view name_of(PillaiForm f);
std::string_view name_of(MobiusSum s);
std::string_view name_of(Lemma l);

PhiMethod parse_phi_method(std::string_view s);
TauForm parse_tau_form(std::string_view s);
PillaiForm parse_pillai_form(std::string_view s);
MobiusSum parse_mobius_sum(std::string_view s);
Lemma parse_lemma(std::string_view s);

}  // namespace arithid
