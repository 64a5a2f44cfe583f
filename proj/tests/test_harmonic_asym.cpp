#include <zetakit/zetakit.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace zetakit;

namespace {

// Residuals at n = 10 and 100: exact rationals (python fractions) minus
// mpmath constants at 40 digits.
struct Frozen {
    double (*fn)(unsigned);
    double at10, at100;
};

const Frozen kFrozen[] = {
    {residual_E28, 0.09521814594810397, 0.020906118174340355},
    {residual_E29, 0.14280131378894684, 0.02588120150600714},
    {residual_E32a, 7.5713434683472663, 45.727444970218197},
    {residual_E32a_corrected, -0.0030166116569340225, -3.3001666611116666e-5},
    {residual_E33c, 0.10844897068784038, 0.045393334930603613},
    {residual_E33h, 0.23108086485111845, 0.091140119393843182},
    {residual_E58a, 0.77989591206853112, 0.26642460901498009},
    {residual_E25, -0.0083250392732457637, -0.00083332500039678374},
    {residual_E26, 0.11321234351678572, 0.022987474895469799},
};

} // namespace

TEST(Residuals, FrozenValues) {
    for (const auto& f : kFrozen) {
        EXPECT_NEAR(f.fn(10), f.at10, 1e-14 * std::max(1.0, std::fabs(f.at10)));
        EXPECT_NEAR(f.fn(100), f.at100, 1e-14 * std::max(1.0, std::fabs(f.at100)));
    }
}

TEST(Residuals, SmallCases) {
    const double g = euler_gamma(), z2 = zeta(2), z3 = zeta(3);
    EXPECT_NEAR(residual_E32a(1), 1 + 1 - 1 - 4 * z3 / 3, 1e-15);
    EXPECT_NEAR(residual_E33h(1), 1 + 0.5 - g * z2, 1e-15);
    EXPECT_EQ(residual_E58a(1), 0.5);
    double L = std::log(2.0);
    EXPECT_NEAR(residual_E28(2), 1.0 + 0.75 - g * L - L * L / 2 - (z2 + g * g) / 2, 1e-15);
    EXPECT_NEAR(residual_E29(2), 1.125 - g * L - L * L / 2 - g * g / 2, 1e-15);
    EXPECT_THROW(residual_E28(1), domain_error);
    EXPECT_THROW(residual_E33c(1), domain_error);
}

TEST(Residuals, DecayRates) {
    EXPECT_LT(std::fabs(residual_E28(100000)), 1e-3);
    EXPECT_LT(std::fabs(residual_E29(100000)), 1e-3);
    EXPECT_LT(std::fabs(residual_E33c(10000)), 0.02);
    EXPECT_LT(std::fabs(residual_E33h(10000)), 5e-3);
    EXPECT_LT(residual_E58a(1000000), 2.2e-4);
    EXPECT_LT(std::fabs(residual_E25(100000) ), 1e-4);
    EXPECT_LT(std::fabs(residual_E32a_corrected(10000)), 5e-3);
}

TEST(Residuals, LiteralE32aDiverges) {
    // grows like (log n)^3 / 3 rather than tending to zero
    double r3 = residual_E32a(1000), r4 = residual_E32a(10000);
    EXPECT_GT(r4, r3);
    double L = std::log(10000.0);
    EXPECT_NEAR(r4 / (L * L * L / 3), 1.0, 0.3);
}

TEST(Residuals, EventuallyDecreasing) {
    for (auto fn : {residual_E28, residual_E29, residual_E32a_corrected, residual_E33c, residual_E33h,
                    residual_E58a, residual_E25, residual_E26}) {
        double a = std::fabs(fn(100)), b = std::fabs(fn(1000)), c = std::fabs(fn(10000));
        EXPECT_GT(a, b);
        EXPECT_GT(b, c);
    }
}

TEST(Rates, Values) {
    EXPECT_DOUBLE_EQ(rate_value(Rate::inv_n, 100), 0.01);
    EXPECT_DOUBLE_EQ(rate_value(Rate::log_over_n, 100), std::log(100.0) / 100);
    EXPECT_DOUBLE_EQ(rate_value(Rate::log2_over_n, 100), std::pow(std::log(100.0), 2) / 100);
}

TEST(Flajolet, ExactAndAsymptotic) {
    EXPECT_EQ(flajolet_S(1, 2), make_rational(1));
    EXPECT_EQ(flajolet_S(1, 3), make_rational(1));
    EXPECT_EQ(flajolet_S(10, 2), dilcher_sum(10, 2));
    double d2 = std::fabs(to_double(flajolet_S(100, 2)) - flajolet_S_asymptotic(100, 2));
    EXPECT_LT(d2, 0.7 * std::log(100.0) / 100);
    double d3 = std::fabs(to_double(flajolet_S(100, 3)) - flajolet_S_asymptotic(100, 3));
    EXPECT_LT(d3, 0.447 * std::pow(std::log(100.0), 2) / 100);
    EXPECT_THROW(flajolet_S(10, 4), unsupported_error);
    EXPECT_THROW(flajolet_S_asymptotic(10, 4), unsupported_error);
}

TEST(ExactIdentities, Adamchik) {
    for (unsigned n = 1; n <= 200; ++n) {
        Rational s = 0;
        for (unsigned k = 1; k <= n; ++k) s += harmonic(k) / Rational(k);
        Rational h = harmonic(n);
        ASSERT_EQ(s, (h * h + harmonic(n, 2)) / 2) << n;
    }
}

TEST(ExactIdentities, CubicHarmonic) {
    Rational s = 0;
    for (unsigned n = 1; n <= 100; ++n) {
        Rational hk = harmonic(n);
        s += (hk * hk + harmonic(n, 2)) / Rational(n);
        ASSERT_EQ(3 * s, hk * hk * hk + 3 * hk * harmonic(n, 2) + 2 * harmonic(n, 3)) << n;
    }
}

TEST(ExactIdentities, OldsIndexConsistent) {
    // sum_{k<=n+1} (1/k) sum_{j<=k} H_j/j == (n+1) alt_binomial_sum(n, 4)
    Rational inner = 0, outer = 0;
    std::vector<Rational> nested(62);
    for (unsigned k = 1; k <= 61; ++k) {
        inner += harmonic(k) / Rational(k);
        outer += inner / Rational(k);
        nested[k] = outer;
    }
    for (unsigned n = 0; n <= 60; ++n) ASSERT_EQ(nested[n + 1], Rational(n + 1) * alt_binomial_sum(n, 4)) << n;
    // the literal index form already fails at n = 1
    EXPECT_NE(nested[1], Rational(2) * alt_binomial_sum(1, 4));
}
