#pragma once

// Real-argument zeta family: Riemann, alternating (eta), Hurwitz, Dirichlet
// beta, integer-order polylogarithms, and derivatives in s.

#include "fwd.hpp"
#include "detail/numeric.hpp"
#include "series.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace zetakit {
namespace detail {

// For s < 0 the head terms k^|s| grow and cancel against the correction terms,
// so a short head is more accurate there.
inline int em_cutoff(double s) {
    if (s < 0) return 6;
    return std::max(10, static_cast<int>(std::ceil(s)) + 10);
}

template <class T>
struct em_result {
    T value;
    double err;
    int terms;
};

// zeta(s, a) = sum_{k<n} (k+a)^-s + (n+a)^(1-s)/(s-1) + (n+a)^-s / 2
//            + sum_j B_2j/(2j)! (s)_(2j-1) (n+a)^(-s-2j+1)
// The Bernoulli tail is cut at its smallest term; err is the first omitted term
// plus a rounding allowance. T is double, or jet2 to carry d/ds and d2/ds2.
template <class T>
em_result<T> euler_maclaurin_hurwitz(const T& s, double a, int n) {
    T acc = 0.0;
    double absacc = 0;
    for (int k = 0; k < n; ++k) {
        T t = pow_neg(k + a, s);
        acc += t;
        absacc += magnitude(t);
    }
    const double N = n + a;
    const T Ns = pow_neg(N, s);
    T head = Ns * N / (s - T(1.0));
    acc += head;
    acc += Ns * 0.5;
    absacc += magnitude(head) + magnitude(Ns);

    const auto& bf = bernoulli_over_factorial();
    T poch = s;
    T Npow = Ns * (1.0 / N);
    const double inv_N2 = 1.0 / (N * N);
    double prev = std::numeric_limits<double>::infinity();
    double err = 0;
    int j = 1;
    for (; j < static_cast<int>(bf.size()); ++j) {
        T term = poch * Npow * bf[j];
        double m = magnitude(term);
        if (m > prev || m <= 1e-17 * magnitude(acc)) {
            err = m;
            break;
        }
        acc += term;
        prev = m;
        poch = poch * (s + T(2.0 * j - 1.0)) * (s + T(2.0 * j));
        Npow = Npow * inv_N2;
    }
    if (j == static_cast<int>(bf.size())) err = prev;
    err += 8 * eps * absacc;
    return {acc, err, n + j};
}

inline double zeta_reflection(double s, double* err) {
    // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), s < 0
    double z1 = zeta(1.0 - s);
    double sn = sin_pi(s / 2);
    double lg = log_gamma(1.0 - s);
    double value;
    if (lg < 600) {
        value = std::pow(2.0, s) * std::pow(pi, s - 1) * sn * std::exp(lg) * z1;
    } else {
        double lv = s * ln2 + (s - 1) * std::log(pi) + std::log(std::fabs(sn)) + lg +
                    std::log(std::fabs(z1));
        value = std::copysign(std::exp(lv), sn * z1);
    }
    *err = std::fabs(value) * 1e-14 * (1 + std::fabs(s));
    return value;
}

} // namespace detail

inline Rational zeta_nonpositive_int(unsigned m) {
    if (m == 0) return make_rational(-1, 2);
    return -bernoulli(m + 1) / Rational(Integer(m + 1));
}

inline Rational zeta_even_pi_coeff(unsigned n) {
    if (n == 0) return make_rational(-1, 2);
    Rational c = Rational(boost::multiprecision::pow(Integer(2), 2 * n - 1)) * bernoulli(2 * n) /
                 Rational(factorial(2 * n));
    return (n % 2) ? c : Rational(-c);
}

inline ZetaEval zeta_eval(double s) {
    ZetaEval r;
    r.s = s;
    if (s == 1.0) throw pole_error("zeta: pole at s = 1");
    if (std::isnan(s)) throw domain_error("zeta: NaN argument");
    if (is_integer(s) && s <= 0 && s > -400) {
        r.value = to_double(zeta_nonpositive_int(static_cast<unsigned>(-s)));
        r.method = ZetaMethod::closed_form;
        return r;
    }
    if (is_integer(s) && s >= 2 && s <= 100 && static_cast<long>(s) % 2 == 0) {
        unsigned n = static_cast<unsigned>(s) / 2;
        hp_float v = to_hp(zeta_even_pi_coeff(n)) * pow(boost::math::constants::pi<hp_float>(), 2 * n);
        r.value = static_cast<double>(v);
        r.err_estimate = eps * r.value;
        r.method = ZetaMethod::closed_form;
        return r;
    }
    if (s < 0) {
        r.value = detail::zeta_reflection(s, &r.err_estimate);
        r.method = ZetaMethod::reflection;
        return r;
    }
    auto em = detail::euler_maclaurin_hurwitz<double>(s, 1.0, detail::em_cutoff(s));
    r.value = em.value;
    r.err_estimate = em.err;
    r.terms_used = em.terms;
    r.method = ZetaMethod::euler_maclaurin;
    return r;
}

inline double zeta(double s) { return zeta_eval(s).value; }

inline double zeta_int(int k) {
    static const std::array<double, 81> table = [] {
        std::array<double, 81> t{};
        t[0] = -0.5;
        t[1] = std::numeric_limits<double>::infinity();
        for (int j = 2; j <= 80; ++j) t[j] = zeta(j);
        return t;
    }();
    if (k < 2 || k > 80) {
        if (k >= 2) return zeta(k);
        throw domain_error("zeta_int: k must be >= 2");
    }
    return table[k];
}

namespace detail {

// sum_{n>=N} y^n / (n+1)
inline double hasse_remainder_kernel(double t, int N) {
    double y = -std::expm1(-t);
    if (y <= 0) return 0;
    if (y <= 0.95) {
        double term = std::pow(y, N) / (N + 1);
        double acc = 0;
        for (int n = N; term > 1e-18 * acc || n < N + 2; ++n) {
            acc += term;
            term *= y * (n + 1.0) / (n + 2.0);
            if (term == 0) break;
        }
        return acc;
    }
    // -log(1-y) = t exactly here
    double partial = 0, ym = 1;
    for (int m = 1; m <= N; ++m) {
        ym *= y;
        partial += ym / m;
    }
    return (t - partial) / y;
}

} // namespace detail

// Hasse's double sum at s = -m. (k+1)^(m+1) is a polynomial of degree m+1 in k,
// so the n-th forward difference vanishes past n = m+1 and the sum is finite.
inline Rational zeta_hasse_nonpositive_int(unsigned m) {
    const unsigned d = m + 1;
    Rational outer = 0;
    for (unsigned n = 0; n <= d; ++n) {
        Integer inner = 0;
        for (unsigned k = 0; k <= n; ++k) {
            Integer t = binomial(n, k) * boost::multiprecision::pow(Integer(k + 1), d);
            if (k % 2) inner -= t;
            else inner += t;
        }
        outer += Rational(inner, Integer(n + 1));
    }
    return outer / Rational(Integer(-static_cast<long>(d)));
}

inline ZetaEval zeta_hasse_eval(double s) {
    if (s == 1.0) throw pole_error("zeta_hasse: pole at s = 1");
    ZetaEval r;
    r.s = s;
    r.method = ZetaMethod::hasse;
    if (is_integer(s) && s <= 0) {
        unsigned m = static_cast<unsigned>(-s);
        r.value = to_double(zeta_hasse_nonpositive_int(m));
        r.terms_used = static_cast<int>(m) + 2;
        return r;
    }
    constexpr int N = 40;
    std::vector<hp_float> p(N);
    auto logs = detail::hp_log_table(N);
    for (int k = 0; k < N; ++k) p[k] = exp(hp_float(1 - s) * logs[k + 1]);
    hp_float partial = 0;
    for (int n = 0; n < N; ++n) {
        hp_float inner = 0, c = 1;
        for (int k = 0; k <= n; ++k) {
            inner += (k % 2 ? -c : c) * p[k];
            c = c * (n - k) / (k + 1);
        }
        partial += inner / (n + 1);
    }
    // Remainder of the outer series:
    //   (1/Gamma(s-1)) int_0^inf t^(s-2) e^-t sum_{n>=N} (1-e^-t)^n/(n+1) dt
    double g = gamma_function(s - 1);
    auto f = [s](double t) {
        if (t <= 0) return 0.0;
        return std::pow(t, s - 2) * std::exp(-t) * detail::hasse_remainder_kernel(t, N);
    };
    // the integrand peaks near t = s - 1; split there so the mapped tail stays tame
    const double T = std::max(4.0, 2 * s);
    const double tol = 1e-13 * std::max(1.0, std::fabs(g));
    QuadResult q = integrate(f, 0.0, T, tol / 2);
    QuadResult q2 = integrate_semi_infinite([&f, T](double x) { return f(T + x); }, tol / 2);
    q.value += q2.value;
    q.abs_err += q2.abs_err;
    double tail = q.value / g;
    r.value = static_cast<double>((partial + hp_float(tail)) / hp_float(s - 1));
    r.err_estimate = (q.abs_err / std::fabs(g) + 1e-16 * std::fabs(static_cast<double>(partial))) /
                     std::fabs(s - 1);
    r.terms_used = N;
    return r;
}

inline double zeta_hasse(double s) { return zeta_hasse_eval(s).value; }

// Sondow's form: sum_n 2^-(n+1) sum_k C(n,k) (-1)^k (k+1)^-s
inline double eta(double s) {
    if (std::isnan(s)) throw domain_error("eta: NaN argument");
    constexpr int max_n = 400;
    auto logs = detail::hp_log_table(max_n + 1);
    std::vector<hp_float> p;
    p.reserve(max_n + 1);
    hp_float acc = 0, scale = 0.5;
    int small = 0;
    for (int n = 0; n <= max_n; ++n) {
        p.push_back(exp(hp_float(-s) * logs[n + 1]));
        hp_float inner = 0, c = 1;
        for (int k = 0; k <= n; ++k) {
            inner += (k % 2 ? -c : c) * p[k];
            c = c * (n - k) / (k + 1);
        }
        hp_float term = inner * scale;
        acc += term;
        scale /= 2;
        hp_float scale_ref = abs(acc) > 1e-3 ? hp_float(abs(acc)) : hp_float(1e-3);
        if (abs(term) <= hp_float(1e-20) * scale_ref) {
            if (++small >= 3) return static_cast<double>(acc);
        } else {
            small = 0;
        }
    }
    throw convergence_error("eta: double series did not settle", static_cast<double>(acc),
                            static_cast<double>(abs(acc)) * 1e-10);
}

inline double hurwitz_zeta(double s, double a) {
    if (s == 1.0) throw pole_error("hurwitz_zeta: pole at s = 1");
    if (!(a > 0)) throw domain_error("hurwitz_zeta: a must be > 0");
    return detail::euler_maclaurin_hurwitz<double>(s, a, detail::em_cutoff(s)).value;
}

// beta(s) = sum_{n>=0} (-1)^n (2n+1)^-s: 50 plain terms, Euler transform of the tail.
inline double dirichlet_beta(double s) {
    if (!(s > 0)) throw unsupported_error("dirichlet_beta: only s > 0 is supported");
    auto a = [s](long k) { return std::pow(2.0 * k + 1.0, -s); };
    return alternating_sum(a, 0, 50, 30).value;
}

inline double polylog(int n, double x) {
    if (n < 1) throw domain_error("polylog: n must be >= 1");
    if (!(std::fabs(x) <= 1)) throw domain_error("polylog: |x| must be <= 1");
    if (n == 1) {
        if (x == 1) throw divergence_error("polylog: Li_1(1) diverges");
        return -std::log1p(-x);
    }
    if (x == 0) return 0;
    if (x == 1) return zeta_int(n);
    if (x == -1) return -eta(n);
    if (std::fabs(x) <= 0.5) {
        double acc = 0, xk = 1;
        for (int k = 1; k < 200; ++k) {
            xk *= x;
            double t = xk / std::pow(k, n);
            acc += t;
            if (std::fabs(t) < 1e-18 * std::fabs(acc)) break;
        }
        return acc;
    }
    if (x < 0) return std::ldexp(polylog(n, x * x), 1 - n) - polylog(n, -x);
    // Li_n(e^mu) = sum_{k != n-1} zeta(n-k) mu^k/k! + mu^(n-1)/(n-1)! (H_(n-1) - log(-mu))
    double mu = std::log(x);
    double acc = 0, mk = 1;  // mu^k / k!
    for (int k = 0; k < 160; ++k) {
        if (k > 0) mk *= mu / k;
        double t;
        if (k == n - 1) {
            t = mk * (to_double(harmonic(n - 1)) - std::log(-mu));
        } else {
            int m = n - k;
            double z = (m >= 2) ? zeta_int(m) : to_double(zeta_nonpositive_int(static_cast<unsigned>(-m)));
            t = z * mk;
        }
        acc += t;
        if (k > n + 2 && t != 0 && std::fabs(t) < 1e-18 * std::fabs(acc)) break;
    }
    return acc;
}

inline double functional_equation_residual(double s) {
    if (!(s > 1)) throw domain_error("functional_equation_residual: need s > 1");
    double lhs = zeta(1.0 - s);
    double rhs = 2.0 * std::pow(2.0 * pi, -s) * gamma_function(s) * cos_pi(s / 2) * zeta(s);
    return std::fabs(lhs - rhs);
}

inline double zeta_prime_neg(int n) {
    switch (n) {
    case 0: return -0.5 * ln_2pi;
    case 1: return 1.0 / 12 - glaisher_log_A();
    case 2: return -zeta_int(3) / (4 * pi * pi);
    case 3: return -log_C() - 11.0 / 720;
    default: throw domain_error("zeta_prime_neg: n must be in {0,1,2,3}");
    }
}

inline double zeta_derivative(double s, int order) {
    if (order == 0) return zeta(s);
    if (s == 1.0) throw pole_error("zeta derivative: pole at s = 1");
    if (order == 1 && is_integer(s) && s <= 0 && s >= -3)
        return zeta_prime_neg(static_cast<int>(-s));
    if (order != 1 && order != 2) throw domain_error("zeta_derivative: order must be 0, 1 or 2");
    return zeta_derivative_series(s, order);
}

inline double zeta_prime(double s) { return zeta_derivative(s, 1); }

// Euler-Maclaurin value of the order-th derivative with no closed-form shortcuts.
inline double zeta_derivative_series(double s, int order) {
    if (s == 1.0) throw pole_error("zeta derivative: pole at s = 1");
    if (order < 0 || order > 2) throw domain_error("zeta_derivative_series: order must be 0, 1 or 2");
    detail::jet2 js(s, 1.0, 0.0);
    auto em = detail::euler_maclaurin_hurwitz<detail::jet2>(js, 1.0, detail::em_cutoff(s));
    return order == 0 ? em.value.v : order == 1 ? em.value.d1 : 2.0 * em.value.d2;
}

inline double eta_prime(double s) {
    if (s == 1.0) return ln2 * (euler_gamma() - 0.5 * ln2);
    if (s == -1.0) return -3.0 * zeta_prime_neg(1) - ln2 / 3;
    double p = std::pow(2.0, 1.0 - s);
    return (1.0 - p) * zeta_prime(s) + p * zeta(s) * ln2;
}

inline double eta_derivative(double s, int order) {
    switch (order) {
    case 0: return eta(s);
    case 1: return eta_prime(s);
    case 2: {
        if (s == 1.0) return eta_second_at_1();
        double p = std::pow(2.0, 1.0 - s);
        return (1.0 - p) * zeta_derivative(s, 2) + 2.0 * p * ln2 * zeta_prime(s) -
               p * ln2 * ln2 * zeta(s);
    }
    default: throw domain_error("eta_derivative: order must be 0, 1 or 2");
    }
}

} // namespace zetakit

#include "constants.hpp"
#include "gamma.hpp"
#include "quad.hpp"
