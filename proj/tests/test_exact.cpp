#include <arithid/exact.hpp>

#include <gtest/gtest.h>

#include <limits>
#include <random>

using namespace arithid;

namespace {

// Largest common divisor by scanning; gcd(0, 0) = 0 by convention.
Int brute_gcd(Int a, Int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    Int best = 1;
    for (Int d = 1; d <= std::min(a, b); ++d) {
        if (a % d == 0 && b % d == 0) best = d;
    }
    return best;
}

bool brute_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

TEST(Gcd, Examples) {
    EXPECT_EQ(gcd(0, 7), 7);
    EXPECT_EQ(gcd(7, 0), 7);
    EXPECT_EQ(gcd(0, 0), 0);
    EXPECT_EQ(gcd(4, 6), 2);
    EXPECT_EQ(brute_gcd(1071, 462), 21);
    EXPECT_EQ(gcd(1071, 462), 21);
}

TEST(Gcd, RejectsNegative) { EXPECT_THROW((void)gcd(-1, 3), DomainError); }

TEST(Gcd, MatchesDivisorScanExhaustiveSmall) {
    for (Int a = 0; a <= 150; ++a) {
        for (Int b = 0; b <= 150; ++b) {
            ASSERT_EQ(gcd(a, b), brute_gcd(a, b)) << a << "," << b;
        }
    }
}

TEST(Gcd, MatchesDivisorScanRandomUpTo1e4) {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<Int> dist(0, 10'000);
    for (int i = 0; i < 3000; ++i) {
        const Int a = dist(rng);
        const Int b = dist(rng);
        ASSERT_EQ(gcd(a, b), brute_gcd(a, b)) << a << "," << b;
    }
}

TEST(Factorize, Examples) {
    EXPECT_EQ(factorize(1), FactoredInteger(1, {}));
    EXPECT_TRUE(factorize(1).factors().empty());
    EXPECT_EQ(factorize(12).factors(), (std::vector<PrimePower>{{2, 2}, {3, 1}}));

    const auto primorial = factorize(9'699'690);
    const std::vector<Int> first_eight{2, 3, 5, 7, 11, 13, 17, 19};
    ASSERT_EQ(primorial.factors().size(), first_eight.size());
    for (std::size_t i = 0; i < first_eight.size(); ++i) {
        EXPECT_EQ(primorial.factors()[i].prime, first_eight[i]);
        EXPECT_EQ(primorial.factors()[i].exponent, 1);
    }
}

TEST(Factorize, RejectsNonPositive) {
    EXPECT_THROW(factorize(0), DomainError);
    EXPECT_THROW(factorize(-5), DomainError);
}

TEST(Factorize, ReconstructsAndListsPrimesUpTo1e5) {
    for (Int n = 1; n <= 100'000; ++n) {
        const auto f = factorize(n);
        Int product = 1;
        Int previous = 1;
        for (const auto& [p, e] : f.factors()) {
            ASSERT_GT(p, previous);
            ASSERT_GE(e, 1);
            for (Int i = 0; i < e; ++i) product *= p;
            previous = p;
        }
        ASSERT_EQ(product, n);
        if (n % 97 == 0) {
            for (const auto& pp : f.factors()) ASSERT_TRUE(brute_prime(pp.prime)) << pp.prime;
        }
    }
}

TEST(Factorize, AboveSieveLimitFallsBackToTrialDivision) {
    const SpfSieve small(100);
    // 1000003 is prime; 1000003 * 101 exceeds the small sieve.
    const auto f = factorize(101 * 1'000'003, small);
    EXPECT_EQ(f.factors(), (std::vector<PrimePower>{{101, 1}, {1'000'003, 1}}));
    EXPECT_EQ(factorize(1024 * 3, small).factors(), (std::vector<PrimePower>{{2, 10}, {3, 1}}));
    // Same answer as the default sieve.
    for (Int n : {Int{999'983} * 2, Int{4'294'967'291}, Int{600'851'475'143}}) {
        EXPECT_EQ(factorize(n, small), factorize(n));
    }
    EXPECT_EQ(factorize(600'851'475'143).factors(),
              (std::vector<PrimePower>{{71, 1}, {839, 1}, {1471, 1}, {6857, 1}}));
}

TEST(FactoredInteger, ValidatesInvariants) {
    EXPECT_NO_THROW(FactoredInteger(12, {{2, 2}, {3, 1}}));
    EXPECT_THROW(FactoredInteger(12, {{3, 1}, {2, 2}}), DomainError);
    EXPECT_THROW(FactoredInteger(12, {{2, 1}, {6, 1}}), DomainError);
    EXPECT_THROW(FactoredInteger(13, {{2, 2}, {3, 1}}), DomainError);
    EXPECT_THROW(FactoredInteger(1, {{2, 0}}), DomainError);
    EXPECT_EQ(factorize(72).valuation(2), 3);
    EXPECT_EQ(factorize(72).valuation(5), 0);
    EXPECT_FALSE(factorize(72).is_squarefree());
    EXPECT_TRUE(factorize(30).is_squarefree());
}

TEST(Divisors, Examples) {
    EXPECT_EQ(divisors(factorize(1)), (std::vector<Int>{1}));
    EXPECT_EQ(divisors(factorize(12)), (std::vector<Int>{1, 2, 3, 4, 6, 12}));
    const auto d36 = divisors(factorize(36));
    EXPECT_EQ(d36.size(), 9u);
    EXPECT_EQ(d36.back(), 36);
}

TEST(Divisors, CountMatchesScanUpTo1e4) {
    for (Int n = 1; n <= 10'000; ++n) {
        const auto f = factorize(n);
        const auto d = divisors(f);
        Int scanned = 0;
        for (Int k = 1; k <= n; ++k) scanned += (n % k == 0);
        ASSERT_EQ(static_cast<Int>(d.size()), scanned) << n;
        Int expected = 1;
        for (const auto& pp : f.factors()) expected *= pp.exponent + 1;
        ASSERT_EQ(static_cast<Int>(d.size()), expected);
        ASSERT_TRUE(std::is_sorted(d.begin(), d.end()));
        ASSERT_TRUE(std::adjacent_find(d.begin(), d.end()) == d.end());
    }
}

TEST(CheckedArithmetic, DetectsOverflow) {
    constexpr Int big = std::numeric_limits<Int>::max();
    EXPECT_THROW(checked_add(big, 1), OverflowError);
    EXPECT_THROW(checked_sub(-big - 1, 1), OverflowError);
    EXPECT_THROW(checked_mul(Int{1} << 32, Int{1} << 32), OverflowError);
    EXPECT_THROW(checked_pow(10, 19), OverflowError);
    EXPECT_EQ(checked_pow(10, 18), 1'000'000'000'000'000'000);
}

TEST(ExactDiv, RemainderIsAnError) {
    EXPECT_EQ(exact_div(48, 12), 4);
    EXPECT_EQ(exact_div(-16, -8), 2);
    EXPECT_THROW(exact_div(49, 12), InexactDivision);
    EXPECT_THROW(exact_div(1, 0), DivisionByZero);
}

TEST(ExactRational, ReducesAndNormalizesSign) {
    const ExactRational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(ExactRational(0, -7), ExactRational(0));
    EXPECT_EQ(ExactRational(1, 2) + ExactRational(1, 2), ExactRational(1));
    EXPECT_TRUE((ExactRational(2, 3) * ExactRational(3, 2)).is_integer());
    EXPECT_THROW(ExactRational(1, 0), DivisionByZero);
    EXPECT_EQ(ExactRational(7, 3).to_string(), "7/3");
    EXPECT_LT(ExactRational(1, 3), ExactRational(1, 2));
}

TEST(ExactRational, ArithmeticAgreesWithCrossMultiplication) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> num(-1000, 1000);
    std::uniform_int_distribution<Int> den(1, 1000);
    for (int i = 0; i < 1000; ++i) {
        const Int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        const ExactRational x(a, b), y(c, d);

        const ExactRational sum = x + y;
        EXPECT_EQ(sum.numerator() * (b * d), (a * d + c * b) * sum.denominator());
        EXPECT_EQ(gcd(std::abs(sum.numerator()), sum.denominator()), 1);

        const ExactRational product = x * y;
        EXPECT_EQ(product.numerator() * (b * d), (a * c) * product.denominator());
        EXPECT_GE(product.denominator(), 1);
        EXPECT_EQ(gcd(std::abs(product.numerator()), product.denominator()), 1);

        EXPECT_EQ(sum - y, x);
    }
}

TEST(ExactRational, OverflowIsDetected) {
    const ExactRational huge(std::numeric_limits<Int>::max(), 1);
    EXPECT_THROW(huge * ExactRational(2), OverflowError);
    EXPECT_THROW(ExactRational(1, 999'999'999'989) * ExactRational(1, 999'999'999'961),
                 OverflowError);
}
