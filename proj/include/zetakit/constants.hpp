#pragma once

// Euler's constant with a proven enclosure, Stieltjes gamma_1, Glaisher-type
// constants, Catalan's constant and the generalized Euler-constant function.

#include "fwd.hpp"
#include "detail/numeric.hpp"
#include "series.hpp"

#include <cmath>

namespace zetakit {

// From H_n - log n - 1/(2n) + sum_{k<=2N} B_2k/(2k n^2k) < gamma
//                           < H_n - log n - 1/(2n) + sum_{k<=2N+1} B_2k/(2k n^2k)
inline BracketedHp euler_gamma_bracket_hp(int n, int N) {
    if (n < 2) throw domain_error("euler_gamma_bracket: n must be >= 2");
    if (N < 1) throw domain_error("euler_gamma_bracket: N must be >= 1");
    hp_float hn = to_hp(harmonic(static_cast<unsigned>(n)));
    hp_float d = hn - log(hp_float(n)) - hp_float(1) / (2 * n);
    hp_float n2 = hp_float(n) * n, np = 1;
    hp_float lower = d, prev = 0, last = 0;
    for (int k = 1; k <= 2 * N + 1; ++k) {
        np *= n2;
        hp_float t = to_hp(bernoulli(2 * k)) / (2 * k * np);
        if (k <= 2 * N) lower += t;
        prev = last;
        last = t;
    }
    if (abs(last) > abs(prev))
        throw regime_error("euler_gamma_bracket: N too large for n (terms no longer shrink)");
    BracketedHp b{lower, lower + last};
    if (!(b.lower < b.upper)) throw regime_error("euler_gamma_bracket: bracket inverted");
    return b;
}

inline BracketedValue euler_gamma_bracket(int n, int N) {
    BracketedHp b = euler_gamma_bracket_hp(n, N);
    double lo = static_cast<double>(b.lower);
    if (hp_float(lo) > b.lower) lo = std::nextafter(lo, -INFINITY);
    double hi = static_cast<double>(b.upper);
    if (hp_float(hi) < b.upper) hi = std::nextafter(hi, INFINITY);
    return {lo, hi, 0.5 * (lo + hi)};
}

inline double euler_gamma() {
    static const double g = euler_gamma_bracket(20, 4).mid;
    return g;
}

// ~45 correct digits
inline const hp_float& euler_gamma_hp() {
    static const hp_float g = euler_gamma_bracket_hp(40, 8).mid();
    return g;
}

namespace detail {

// sum_{k<=n} log k / k - 1/2 log^2 n - log n/(2n) - (1 - log n)/(12 n^2)
inline hp_float stieltjes_partial(unsigned n) {
    auto logs = hp_log_table(n);
    hp_float s = 0;
    for (unsigned k = 2; k <= n; ++k) s += logs[k] / k;
    hp_float L = logs[n], nn = n;
    return s - L * L / 2 - L / (2 * nn) - (1 - L) / (12 * nn * nn);
}

// sum_{k<=n} k^m log k in 50 digits
inline hp_float power_log_sum(unsigned n, unsigned m) {
    auto logs = hp_log_table(n);
    hp_float s = 0;
    for (unsigned k = 2; k <= n; ++k) s += logs[k] * boost::multiprecision::pow(hp_float(k), m);
    return s;
}

} // namespace detail

inline double stieltjes_gamma1() {
    static const double g1 = [] {
        constexpr unsigned n = 1000;
        hp_float a = detail::stieltjes_partial(n), b = detail::stieltjes_partial(2 * n);
        return static_cast<double>((16 * b - a) / 15);
    }();
    return g1;
}

// log A = 1/12 - zeta'(-1), with zeta'(-1) written through zeta'(2).
inline double glaisher_log_A() {
    static const double v = (euler_gamma() + ln_2pi) / 12 - zeta_prime(2) / (2 * pi * pi);
    return v;
}

inline double glaisher_A_limit(unsigned n) {
    hp_float N = n, L = log(N);
    hp_float v = detail::power_log_sum(n, 1) - (N * N / 2 + N / 2 + hp_float(1) / 12) * L + N * N / 4;
    return static_cast<double>(v);
}

inline double log_B() { return zeta_int(3) / (4 * pi * pi); }

inline double log_B_limit(unsigned n) {
    hp_float N = n, L = log(N);
    hp_float v = detail::power_log_sum(n, 2) - (N * N * N / 3 + N * N / 2 + N / 6) * L +
                 N * N * N / 9 - N / 12;
    return static_cast<double>(v);
}

inline double log_C_limit(unsigned n) {
    hp_float N = n, L = log(N), N2 = N * N;
    hp_float v = detail::power_log_sum(n, 3) -
                 (N2 * N2 / 4 + N2 * N / 2 + N2 / 4 - hp_float(1) / 120) * L + N2 * N2 / 16 - N2 / 12;
    return static_cast<double>(v);
}

// Finite-n limit at n = 1e4 plus the next Euler-Maclaurin term, 1/(5040 n^2).
inline double log_C() {
    static const double v = [] {
        constexpr unsigned n = 10000;
        return log_C_limit(n) + 1.0 / (5040.0 * n * n);
    }();
    return v;
}

inline double catalan_G() {
    static const double v = dirichlet_beta(2);
    return v;
}

// gamma(x) = sum_{n>=1} x^(n-1) [1/n - log(1 + 1/n)]
inline double gen_euler_const(double x) {
    if (!(std::fabs(x) <= 1)) throw domain_error("gen_euler_const: |x| must be <= 1");
    if (x == 0) return 1 - ln2;
    auto t = [](double n) { return 1 / n - std::log1p(1 / n); };
    if (x == 1) {
        constexpr int N = 100;
        double acc = 0;
        for (int n = N; n >= 1; --n) acc += t(n);
        // sum_{n>N} t_n = sum_{j>=2} (-1)^j zeta(j, N+1) / j
        for (int j = 2; j < 40; ++j) {
            double term = (j % 2 ? -1.0 : 1.0) * hurwitz_zeta(j, N + 1.0) / j;
            acc += term;
            if (std::fabs(term) < 1e-19) break;
        }
        return acc;
    }
    if (x == -1) {
        // sum (-1)^(n-1) t_n
        return -alternating_sum([&](long n) { return t(static_cast<double>(n)); }, 1, 20, 40).value;
    }
    double acc = 0, xp = 1;
    for (long n = 1; n < 50000000; ++n) {
        double term = xp * t(static_cast<double>(n));
        acc += term;
        if (std::fabs(term) < 1e-19 * std::fabs(acc) && n > 2) break;
        xp *= x;
    }
    return acc;
}

// x gamma(x) = sum_{j>=2} (-1)^j Li_j(x) / j, summed as
// x(1 - log 2) + sum_j (-1)^j (Li_j(x) - x) / j so the tail converges geometrically.
inline double gen_euler_const_polylog(double x) {
    if (!(std::fabs(x) <= 1)) throw domain_error("gen_euler_const_polylog: |x| must be <= 1");
    if (x == 0) return 1 - ln2;
    double acc = x * (1 - ln2);
    for (int j = 2; j < 200; ++j) {
        double d = polylog(j, x) - x;
        acc += (j % 2 ? -d : d) / j;
        if (std::fabs(d) < 1e-19) break;
    }
    return acc / x;
}

// zeta_a''(1) = (1/3) log^3 2 - gamma log^2 2 - 2 gamma_1 log 2
inline double eta_second_at_1() {
    return ln2 * ln2 * ln2 / 3 - euler_gamma() * ln2 * ln2 - 2 * stieltjes_gamma1() * ln2;
}

} // namespace zetakit

#include "gamma.hpp"
#include "zeta.hpp"
