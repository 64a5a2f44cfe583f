#include <zetakit/zetakit.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace zetakit;

namespace {

const double kPi = 3.14159265358979323846;

// mpmath 1.3 at 30 digits
constexpr double zeta_0_5 = -1.4603545088095868;
constexpr double zeta_1_5 = 2.6123753486854883;
constexpr double zeta_m2_5 = 0.0085169287778503305;
constexpr double zeta_10_5 = 1.0007008426417362;
constexpr double zeta_m7_3 = 0.003936040865716961;
constexpr double zeta_30 = 1.0000000009313274;
constexpr double zeta_1_001 = 1000.5772884760116;

} // namespace

TEST(Zeta, ClosingTable) {
    EXPECT_NEAR(zeta(2), 1.644934066848, 1e-11);
    EXPECT_NEAR(zeta(3), 1.202056903159, 1e-11);
    EXPECT_NEAR(zeta(4), 1.082323233711, 1e-11);
}

TEST(Zeta, NonPositiveIntegersExact) {
    EXPECT_EQ(zeta(0), -0.5);
    EXPECT_EQ(zeta(-1), -1.0 / 12);
    EXPECT_EQ(zeta(-2), 0.0);
    EXPECT_DOUBLE_EQ(zeta(-3), 1.0 / 120);
    EXPECT_EQ(zeta_nonpositive_int(0), make_rational(-1, 2));
    EXPECT_EQ(zeta_nonpositive_int(1), make_rational(-1, 12));
    EXPECT_EQ(zeta_nonpositive_int(3), make_rational(1, 120));
    for (unsigned n = 1; n <= 6; ++n) {
        EXPECT_EQ(zeta_nonpositive_int(2 * n - 1), -bernoulli(2 * n) / Rational(2 * n));
        EXPECT_EQ(zeta_nonpositive_int(2 * n), Rational(0));
    }
}

TEST(Zeta, EvalMetadata) {
    ZetaEval e = zeta_eval(2);
    EXPECT_EQ(e.method, ZetaMethod::closed_form);
    e = zeta_eval(-3);
    EXPECT_EQ(e.method, ZetaMethod::closed_form);
    e = zeta_eval(2.5);
    EXPECT_EQ(e.method, ZetaMethod::euler_maclaurin);
    EXPECT_GE(e.terms_used, 1);
    EXPECT_GE(e.err_estimate, 0);
    e = zeta_eval(-2.5);
    EXPECT_EQ(e.method, ZetaMethod::reflection);
    for (double s : {-7.3, -0.5, 0.5, 1.5, 3.3, 10.5}) {
        ZetaEval z = zeta_eval(s);
        EXPECT_GE(z.err_estimate, 0);
        EXPECT_GE(z.terms_used, 1);
        EXPECT_NE(z.method, ZetaMethod::closed_form);
    }
}

TEST(Zeta, RealArguments) {
    EXPECT_NEAR(zeta(0.5), zeta_0_5, 1e-13);
    EXPECT_NEAR(zeta(1.5), zeta_1_5, 1e-13);
    EXPECT_NEAR(zeta(-2.5), zeta_m2_5, 1e-15);
    EXPECT_NEAR(zeta(10.5), zeta_10_5, 1e-14);
    EXPECT_NEAR(zeta(-7.3), zeta_m7_3, 1e-15);
    EXPECT_NEAR(zeta(30), zeta_30, 1e-15);
    EXPECT_NEAR(zeta(1.001), zeta_1_001, 1e-9);
}

TEST(Zeta, PoleAtOne) {
    EXPECT_THROW(zeta(1), pole_error);
    EXPECT_THROW(zeta_hasse(1), pole_error);
    EXPECT_THROW(zeta_prime(1), pole_error);
}

TEST(Zeta, EvenIntegersMatchBernoulliFormula) {
    for (unsigned n = 1; n <= 10; ++n) {
        double b = to_double(bernoulli(2 * n));
        double f = 1;
        for (unsigned k = 2; k <= 2 * n; ++k) f *= k;
        double expected = ((n % 2) ? 1 : -1) * std::pow(2 * kPi, 2 * n) * b / (2 * f);
        EXPECT_NEAR(zeta(2.0 * n) / expected, 1.0, 1e-12) << "n=" << n;
    }
    EXPECT_EQ(zeta_even_pi_coeff(1), make_rational(1, 6));
    EXPECT_EQ(zeta_even_pi_coeff(2), make_rational(1, 90));
}

TEST(ZetaHasse, AgreesWithEulerMaclaurin) {
    for (double s : {-3.0, -2.0, -1.0, 0.0, 0.5, 2.0, 3.0, 4.0, 6.0, 10.0}) {
        ZetaEval h = zeta_hasse_eval(s);
        ZetaEval e = zeta_eval(s);
        double bound = std::max(h.err_estimate + e.err_estimate, 1e-15);
        EXPECT_LE(std::fabs(h.value - e.value), std::max(bound, 1e-10)) << "s=" << s;
        EXPECT_LE(std::fabs(h.value - e.value), 1e-10) << "s=" << s;
    }
    EXPECT_EQ(zeta_hasse(0), -0.5);
    EXPECT_EQ(zeta_hasse(-1), -1.0 / 12);
    for (unsigned m = 0; m <= 8; ++m) EXPECT_EQ(zeta_hasse_nonpositive_int(m), zeta_nonpositive_int(m));
    EXPECT_NEAR(zeta_hasse(2), kPi * kPi / 6, 1e-10);
    EXPECT_NEAR(zeta_hasse(-1.5), zeta(-1.5), 1e-10);
}

TEST(Eta, Values) {
    EXPECT_NEAR(eta(2), kPi * kPi / 12, 1e-14);
    EXPECT_NEAR(eta(-1), 0.25, 1e-14);
    EXPECT_NEAR(eta(1), std::log(2.0), 1e-14);
    EXPECT_NEAR(eta(0), 0.5, 1e-14);
    EXPECT_NEAR(eta(0.5), 0.60489864342163037, 1e-13);
    EXPECT_NEAR(eta(-1.5), 0.11868087071984021, 1e-13);
    EXPECT_NEAR(eta(3.3), 0.91802731472526362, 1e-13);
    EXPECT_NEAR(eta(-2.5), -0.087841120721362842, 1e-13);
    EXPECT_NEAR(eta(-4.2), 0.052519033207785822, 1e-12);
}

TEST(Eta, RelationToZeta) {
    for (int s = 2; s <= 8; ++s) {
        double expected = (1 - std::pow(2.0, 1 - s)) * zeta(s);
        EXPECT_NEAR(eta(s) / expected, 1.0, 1e-12) << "s=" << s;
    }
}

TEST(Hurwitz, Values) {
    EXPECT_NEAR(hurwitz_zeta(2, 1), zeta(2), 1e-14);
    EXPECT_NEAR(hurwitz_zeta(2, 0.5), kPi * kPi / 2, 1e-13);
    EXPECT_NEAR(hurwitz_zeta(3, 2), zeta(3) - 1, 1e-14);
    EXPECT_NEAR(hurwitz_zeta(2, 0.25), 17.197329154507111, 1e-12);
    EXPECT_NEAR(hurwitz_zeta(3.5, 2.7), 0.052027251010179615, 1e-15);
    EXPECT_NEAR(hurwitz_zeta(4, 0.01) / 100000001.04184364, 1.0, 1e-13);
    EXPECT_NEAR(hurwitz_zeta(0.5, 0.5), -0.60489864342163037, 1e-12);
}

TEST(Hurwitz, ShiftIdentityAndErrors) {
    for (double s : {1.5, 2.0, 3.7, 6.0})
        for (double a : {0.2, 0.5, 1.3, 4.0}) {
            double lhs = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1);
            double rhs = std::pow(a, -s);
            EXPECT_NEAR(lhs / rhs, 1.0, 1e-12) << "s=" << s << " a=" << a;
        }
    EXPECT_THROW(hurwitz_zeta(1, 2), pole_error);
    EXPECT_THROW(hurwitz_zeta(2, 0), domain_error);
    EXPECT_THROW(hurwitz_zeta(2, -0.5), domain_error);
}

TEST(DirichletBeta, Values) {
    EXPECT_NEAR(dirichlet_beta(2), 0.91596559417721902, 1e-14);
    EXPECT_NEAR(dirichlet_beta(1), kPi / 4, 1e-14);
    EXPECT_NEAR(dirichlet_beta(3), kPi * kPi * kPi / 32, 1e-14);
    EXPECT_NEAR(dirichlet_beta(5), 5 * std::pow(kPi, 5) / 1536, 1e-14);
    EXPECT_NEAR(dirichlet_beta(0.5), 0.66769145718960918, 1e-13);
    EXPECT_NEAR(dirichlet_beta(0.3), 0.60718361295478587, 1e-13);
    EXPECT_NEAR(dirichlet_beta(4), 0.98894455174110534, 1e-14);
    EXPECT_THROW(dirichlet_beta(0), unsupported_error);
    EXPECT_THROW(dirichlet_beta(-1), unsupported_error);
}

TEST(Polylog, Values) {
    EXPECT_NEAR(polylog(4, 0.5), 0.517479061673, 1e-12);
    EXPECT_NEAR(polylog(4, 0.5), 0.51747906167389939, 1e-14);
    EXPECT_NEAR(polylog(1, 0.5), std::log(2.0), 1e-15);
    EXPECT_NEAR(polylog(2, 1), zeta(2), 1e-14);
    EXPECT_NEAR(polylog(2, 0.5), 0.58224052646501251, 1e-14);
    EXPECT_NEAR(polylog(3, 0.9), 1.0496589501864399, 1e-13);
    EXPECT_NEAR(polylog(2, -1), -0.82246703342411322, 1e-14);
    EXPECT_NEAR(polylog(2, 0.99), 1.5886254480763753, 1e-12);
    EXPECT_NEAR(polylog(5, -0.7), -0.68590682905247462, 1e-14);
    EXPECT_NEAR(polylog(1, -1), -std::log(2.0), 1e-15);
    EXPECT_NEAR(polylog(2, -0.3), -0.28007433375958289, 1e-15);
}

TEST(Polylog, Errors) {
    EXPECT_THROW(polylog(1, 1), divergence_error);
    EXPECT_THROW(polylog(2, 1.5), domain_error);
    EXPECT_THROW(polylog(0, 0.5), domain_error);
}

TEST(FunctionalEquation, Residuals) {
    for (double s : {2.0, 4.0, 6.0, 8.0}) EXPECT_LE(functional_equation_residual(s), 1e-10) << "s=" << s;
    for (double s : {3.0, 5.0, 7.0}) EXPECT_LE(functional_equation_residual(s), 1e-15) << "s=" << s;
    for (double s : {1.5, 2.5, 3.7}) EXPECT_LE(functional_equation_residual(s), 1e-10) << "s=" << s;
}

TEST(ZetaPrime, Values) {
    EXPECT_NEAR(zeta_prime(2), -0.93754825431584375, 1e-12);
    EXPECT_NEAR(zeta_prime(0), -0.5 * std::log(2 * kPi), 1e-14);
    EXPECT_NEAR(zeta_prime(-2), -zeta(3) / (4 * kPi * kPi), 1e-14);
    EXPECT_NEAR(zeta_prime(3), -0.19812624288563685, 1e-12);
    EXPECT_NEAR(zeta_prime(0.5), -3.9226461392091517, 1e-11);
    EXPECT_NEAR(zeta_prime(1.5), -3.9322397374311015, 1e-11);
    EXPECT_NEAR(zeta_prime(-0.5), -0.36085433959994761, 1e-11);
    EXPECT_NEAR(zeta_derivative(2, 2), 1.989280234298901, 1e-10);
    EXPECT_NEAR(zeta_derivative(0, 2), -2.0063564559085849, 1e-10);
}

TEST(ZetaPrime, DirectSeriesAgreesWithDefaultPath) {
    for (double s : {1.5, 2.0, 3.0, 5.0}) EXPECT_NEAR(zeta_derivative_series(s, 1), zeta_prime(s), 1e-11) << s;
}

TEST(ZetaPrime, NegativeIntegerConstants) {
    EXPECT_NEAR(zeta_prime_neg(0), -0.91893853320467274, 1e-15);
    EXPECT_NEAR(zeta_prime_neg(1), -0.16542114370045093, 1e-13);
    EXPECT_NEAR(zeta_prime_neg(2), -0.030448457058393271, 1e-15);
    EXPECT_NEAR(zeta_prime_neg(3), 0.0053785763577743011, 1e-13);
    const double g = 0.57721566490153286;
    double f7 = (1 - g - std::log(2 * kPi)) / 12 + zeta_prime(2) / (2 * kPi * kPi);
    EXPECT_NEAR(zeta_prime_neg(1), f7, 1e-13);
    EXPECT_THROW(zeta_prime_neg(4), domain_error);
    EXPECT_THROW(zeta_prime_neg(-1), domain_error);
}

TEST(EtaPrime, Values) {
    const double g = 0.57721566490153286, l2 = std::log(2.0);
    EXPECT_NEAR(eta_prime(1), l2 * (g - l2 / 2), 1e-14);
    EXPECT_NEAR(eta_prime(1), 0.15986890374243097, 1e-14);
    EXPECT_NEAR(eta_prime(-1), -3 * zeta_prime_neg(1) - l2 / 3, 1e-13);
    EXPECT_NEAR(eta_prime(-1), 0.26521437091470435, 1e-12);
    EXPECT_NEAR(eta_prime(2), 0.5 * zeta_prime(2) + 0.5 * zeta(2) * l2, 1e-12);
    EXPECT_NEAR(eta_prime(2), 0.1013165781635045, 1e-12);
    EXPECT_NEAR(eta_prime(0.5), 0.19328883163928274, 1e-11);
    EXPECT_NEAR(eta_prime(3), 0.059705906160195358, 1e-12);
    EXPECT_NEAR(eta_derivative(1, 2), -0.065372592558898599, 1e-10);
}

TEST(ZetaBounds, PoleAndTailBrackets) {
    for (double s : {1.001, 1.01, 1.1, 1.5, 2.0}) {
        double v = (s - 1) * zeta(s);
        EXPECT_GT(v, 1);
        EXPECT_LT(v, s);
    }
    for (int n = 3; n <= 12; ++n) {
        double q = 1 - std::pow(2.0, 1 - n);
        EXPECT_LT((1 - std::pow(2.0, -n)) / q, zeta(n));
        EXPECT_LT(zeta(n), 1 / q);
    }
}

TEST(ZetaCache, IntegerValues) {
    for (int k = 2; k <= 80; ++k) EXPECT_NEAR(zeta_int(k), zeta(k), 1e-15) << k;
    EXPECT_THROW(zeta_derivative(2, 3), domain_error);
}
