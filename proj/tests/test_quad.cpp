#include <zetakit/zetakit.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace zetakit;

namespace {

const double kPi = 3.14159265358979323846;
const double kGamma = 0.57721566490153286;
const double kLn2 = 0.69314718055994531;

void expect_honest(const QuadResult& q, double truth, double tol) {
    EXPECT_GE(q.abs_err, 0);
    EXPECT_GE(q.evals, 1);
    EXPECT_NEAR(q.value, truth, tol);
    EXPECT_LE(std::fabs(q.value - truth), 10 * std::max(q.abs_err, 1e-16));
}

} // namespace

TEST(Integrate, Catalogue) {
    expect_honest(integrate([](double x) { return std::log(std::sin(x)); }, 0, kPi / 2), -kPi / 2 * kLn2, 1e-11);
    expect_honest(integrate([](double) { return 1.0; }, 0, 1), 1.0, 1e-14);
    expect_honest(integrate([](double t) { return (t - 1) / ((1 + t) * std::log(t)); }, 0, 1), std::log(kPi / 2),
                  1e-11);
    expect_honest(integrate([](double x) { return std::pow(x, -0.5); }, 0, 1), 2.0, 1e-11);
    expect_honest(integrate([](double x) { return std::pow(x, -0.75); }, 0, 1), 4.0, 1e-10);
    expect_honest(integrate([](double x) { return std::log(x) * std::log(1 - x); }, 0, 1), 2 - kPi * kPi / 6,
                  1e-11);
}

TEST(Integrate, NeverTouchesEndpoints) {
    auto f = [](double x) {
        if (x <= 0 || x >= 1) throw std::logic_error("endpoint evaluated");
        return std::log(x) / (1 - x);
    };
    EXPECT_NEAR(integrate(f, 0, 1).value, -kPi * kPi / 6, 1e-10);
}

TEST(Integrate, Linearity) {
    auto f = [](double x) { return std::log(x) / (1 + x); };
    auto g = [](double x) { return std::sqrt(x) * std::exp(-x); };
    const double a = 2.5, b = -0.75, tol = 1e-11;
    double lhs = integrate([&](double x) { return a * f(x) + b * g(x); }, 0, 1, tol).value;
    double rhs = a * integrate(f, 0, 1, tol).value + b * integrate(g, 0, 1, tol).value;
    EXPECT_NEAR(lhs, rhs, 10 * tol);
}

TEST(Integrate, SplitConsistency) {
    auto f = [](double x) { return std::log(x) * std::cos(3 * x); };
    const double tol = 1e-11;
    double whole = integrate(f, 0, 2, tol).value;
    for (double c : {0.1, 0.7, 1.5})
        EXPECT_NEAR(whole, integrate(f, 0, c, tol).value + integrate(f, c, 2, tol).value, 10 * tol) << c;
}

TEST(Integrate, Errors) {
    EXPECT_THROW(integrate([](double) { return 1.0; }, 1, 0), domain_error);
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0, INFINITY), domain_error);
    EXPECT_THROW(integrate([](double) { return 1.0; }, 0, 1, 0), domain_error);
    try {
        integrate([](double x) { return std::cos(1 / (x * x)); }, 0, 1, 1e-14);
        FAIL() << "expected convergence_error";
    } catch (const convergence_error& e) {
        EXPECT_TRUE(std::isfinite(e.best_estimate));
        EXPECT_GT(e.error_estimate, 0);
    }
}

TEST(SemiInfinite, Catalogue) {
    expect_honest(integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 1e-11, true),
                  std::sqrt(kPi) / 2, 1e-11);
    expect_honest(integrate_semi_infinite([](double x) { return std::exp(-x); }), 1.0, 1e-11);
    expect_honest(integrate_semi_infinite([](double x) { return std::exp(-x) * std::log(x); }), -kGamma, 1e-10);
    // Gamma''(1)
    expect_honest(integrate_semi_infinite([](double x) { return std::exp(-x) * std::pow(std::log(x), 2); }),
                  kGamma * kGamma + kPi * kPi / 6, 1e-9);
}

TEST(SemiInfinite, GaussianFlagMatchesPlainOnGaussian) {
    auto f = [](double x) { return x * x * std::exp(-x * x); };
    double a = integrate_semi_infinite(f, 1e-11, true).value;
    double b = integrate_semi_infinite(f, 1e-11, false).value;
    EXPECT_NEAR(a, std::sqrt(kPi) / 4, 1e-11);
    EXPECT_NEAR(b, std::sqrt(kPi) / 4, 1e-9);
}

TEST(LogLog, Catalogue) {
    expect_honest(integrate_loglog([](double x) { return 1 / (1 + x); }), -0.5 * kLn2 * kLn2, 1e-10);
    // g = x^(n-1)/(1+x^n), n = 2
    expect_honest(integrate_loglog([](double x) { return x / (1 + x * x); }), -kLn2 * std::log(8.0) / 4, 1e-10);
    // g = x^(n-1), n = 3
    expect_honest(integrate_loglog([](double x) { return x * x; }), -(std::log(3.0) + kGamma) / 3, 1e-10);
    expect_honest(integrate_loglog([](double) { return 1.0; }), -kGamma, 1e-10);
}

TEST(LogLog, AgreesWithDirectIntegral) {
    auto g = [](double x) { return 1 / (1 + x); };
    double direct =
        integrate([&](double x) { return g(x) * std::log(std::log(1 / x)); }, 0, 1, 1e-11).value;
    EXPECT_NEAR(integrate_loglog(g).value, direct, 1e-9);
}
