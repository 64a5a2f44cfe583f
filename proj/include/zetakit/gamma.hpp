#pragma once

// Gamma family on the real line.

#include "fwd.hpp"
#include "detail/numeric.hpp"

#include <cmath>
#include <vector>

namespace zetakit {
namespace detail {

// log Gamma(1+t) = -gamma t + sum_{k>=2} (-1)^k zeta(k) t^k / k, |t| <= 1/2
inline double log_gamma_1p_series(double t) {
    double acc = -euler_gamma() * t;
    double tk = -t;
    for (int k = 2; k <= 80; ++k) {
        tk *= -t;  // (-t)^k
        double term = zeta_int(k) * tk / k;
        acc += term;
        if (std::fabs(term) < 1e-18) break;
    }
    return acc;
}

inline double log_gamma_stirling(double x) {
    double acc = (x - 0.5) * std::log(x) - x + 0.5 * ln_2pi;
    double x2 = x * x, xp = x, prev = 1e300;
    for (unsigned k = 1; k < 60; ++k) {
        double term = bernoulli_d(2 * k) / (2.0 * k * (2.0 * k - 1) * xp);
        if (std::fabs(term) > prev) break;
        acc += term;
        if (std::fabs(term) < 1e-17 * std::fabs(acc)) break;
        prev = std::fabs(term);
        xp *= x2;
    }
    return acc;
}

} // namespace detail

inline double log_gamma(double x) {
    if (!(x > 0)) throw domain_error("log_gamma: x must be > 0");
    if (x >= 10) return detail::log_gamma_stirling(x);
    double shift = 0;
    while (x < 1.5) {
        shift -= std::log(x);
        x += 1;
    }
    while (x > 2.5) {
        x -= 1;
        shift += std::log(x);
    }
    double t = x - 2;  // log Gamma(2+t) = log(1+t) + log Gamma(1+t)
    return shift + std::log1p(t) + detail::log_gamma_1p_series(t);
}

inline double gamma_function(double x) {
    if (is_integer(x) && x <= 0) throw pole_error("gamma: pole at non-positive integer");
    if (x > 0) {
        if (is_integer(x) && x <= 20) return to_double(Rational(factorial(static_cast<unsigned>(x) - 1)));
        return std::exp(log_gamma(x));
    }
    return pi / (sin_pi(x) * gamma_function(1 - x));
}

inline double reflection_gamma_product(double x) {
    if (is_integer(x)) throw pole_error("reflection_gamma_product: integer argument");
    return pi / sin_pi(x);
}

inline double legendre_duplication_residual(double x) {
    if (!(x > 0)) throw domain_error("legendre_duplication_residual: x must be > 0");
    double lhs = log_gamma(x / 2) + log_gamma((1 + x) / 2);
    double rhs = 0.5 * std::log(pi) + (1 - x) * ln2 + log_gamma(x);
    // |G(x/2)G((1+x)/2) - sqrt(pi) 2^(1-x) G(x)| / G(x)
    return std::sqrt(pi) * std::pow(2.0, 1 - x) * std::fabs(std::expm1(lhs - rhs));
}

inline double digamma(double x) {
    if (!(x > 0)) throw domain_error("digamma: x must be > 0");
    double acc = 0;
    while (x < 10) {
        acc -= 1 / x;
        x += 1;
    }
    acc += std::log(x) - 0.5 / x;
    double x2 = x * x, xp = x2;
    for (unsigned k = 1; k < 30; ++k) {
        double term = detail::bernoulli_d(2 * k) / (2.0 * k * xp);
        acc -= term;
        if (std::fabs(term) < 1e-18 * std::fabs(acc)) break;
        xp *= x2;
    }
    return acc;
}

inline double polygamma(int n, double x) {
    if (n < 1) throw domain_error("polygamma: n must be >= 1");
    if (!(x > 0)) throw domain_error("polygamma: x must be > 0");
    double f = to_double(Rational(factorial(static_cast<unsigned>(n))));
    return ((n + 1) % 2 ? -f : f) * hurwitz_zeta(n + 1.0, x);
}

// Gamma(1+e) = sum a_n e^n with n a_n = sum_{k=1}^n b_k a_(n-k),
// b_1 = -gamma, b_k = (-1)^k zeta(k).
inline double gamma_derivative_at_1(int p) {
    if (p < 1 || p > 5) throw domain_error("gamma_derivative_at_1: p must be in 1..5");
    std::vector<double> b(p + 1), a(p + 1);
    b[1] = -euler_gamma();
    for (int k = 2; k <= p; ++k) b[k] = (k % 2 ? -1.0 : 1.0) * zeta_int(k);
    a[0] = 1;
    for (int n = 1; n <= p; ++n) {
        double acc = 0;
        for (int k = 1; k <= n; ++k) acc += b[k] * a[n - k];
        a[n] = acc / n;
    }
    double fact = 1;
    for (int k = 2; k <= p; ++k) fact *= k;
    return fact * a[p];
}

// lambda_(n+1) = (1/n)[gamma lambda_n + sum_{j=0}^{n-2} (-1)^(n-j-1) zeta(n-j) lambda_(j+1)]
inline LambdaCoeffs reciprocal_gamma_coeffs(int J) {
    if (J < 1) throw domain_error("reciprocal_gamma_coeffs: J must be >= 1");
    LambdaCoeffs c;
    c.lambda.assign(J, 0.0);
    c.lambda[0] = 1;
    const double g = euler_gamma();
    for (int n = 1; n < J; ++n) {
        double acc = g * c.lambda[n - 1];
        for (int j = 0; j <= n - 2; ++j)
            acc += ((n - j - 1) % 2 ? -1.0 : 1.0) * zeta_int(n - j) * c.lambda[j];
        c.lambda[n] = acc / n;
    }
    return c;
}

// sum_{k=2}^K (-1)^k zeta(k) x^k / k - log|x| - gamma x, i.e. log|Gamma(x)|
inline double log_gamma_maclaurin(double x, int K) {
    if (x == 0) throw domain_error("log_gamma_maclaurin: x = 0");
    if (!(std::fabs(x) <= 1)) throw domain_error("log_gamma_maclaurin: |x| must be <= 1");
    if (K < 2) throw domain_error("log_gamma_maclaurin: K must be >= 2");
    double acc = 0, xk = -x;
    for (int k = 2; k <= K; ++k) {
        xk *= -x;
        acc += zeta_int(k) * xk / k;
    }
    return acc - std::log(std::fabs(x)) - euler_gamma() * x;
}

inline double raabe_integral(double x) {
    if (!(x >= 0)) throw domain_error("raabe_integral: x must be >= 0");
    return 0.5 * ln_2pi + (x > 0 ? x * std::log(x) : 0.0) - x;
}

inline double kummer_fourier_coeff(FourierKind kind, int k) {
    if (k < 1) throw domain_error("kummer_fourier_coeff: k must be >= 1");
    if (kind == FourierKind::cosine) return 1.0 / (4.0 * k);
    return (euler_gamma() + std::log(2 * pi * k)) / (2 * pi * k);
}

// 1/2 log pi - 1/2 log sin(pi x) + sum_{n<=K} (gamma + log 2 pi n) sin(2 pi n x) / (pi n)
inline double log_gamma_fourier(double x, int K) {
    if (!(x > 0 && x < 1)) throw domain_error("log_gamma_fourier: x must be in (0,1)");
    const double g = euler_gamma();
    double acc = 0.5 * std::log(pi) - 0.5 * std::log(sin_pi(x));
    for (int n = 1; n <= K; ++n) acc += (g + std::log(2 * pi * n)) * sin_pi(2.0 * n * x) / (pi * n);
    return acc;
}

// x log x - x + sum_{k=0}^K [(x+k) log(1 + 1/(x+k)) - k log(1 + 1/k)]  ->  log Gamma(1+x)
inline double van_der_pol_product(double x, long K) {
    if (!(x > 0)) throw domain_error("van_der_pol_product: x must be > 0");
    double acc = x * std::log(x) - x;
    for (long k = 0; k <= K; ++k) {
        double y = x + k;
        double term = y * std::log1p(1 / y);
        if (k > 0) term -= k * std::log1p(1.0 / k);
        acc += term;
    }
    return acc;
}

// Gamma(x) ~ (1/x) prod_{n<=N} (1+1/n)^x / (1+x/n)
inline double euler_product_gamma(double x, long N) {
    if (!(x > 0)) throw domain_error("euler_product_gamma: x must be > 0");
    double lg = -std::log(x);
    for (long n = 1; n <= N; ++n) lg += x * std::log1p(1.0 / n) - std::log1p(x / n);
    return std::exp(lg);
}

// 1/Gamma(x) ~ x e^(gamma x) prod_{n<=N} (1+x/n) e^(-x/n)
inline double weierstrass_product_gamma(double x, long N) {
    if (!(x > 0)) throw domain_error("weierstrass_product_gamma: x must be > 0");
    double lr = std::log(x) + euler_gamma() * x;
    for (long n = 1; n <= N; ++n) lr += std::log1p(x / n) - x / n;
    return std::exp(-lr);
}

} // namespace zetakit

#include "constants.hpp"
#include "zeta.hpp"
