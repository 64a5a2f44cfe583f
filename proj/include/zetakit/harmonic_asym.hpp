#pragma once

// Harmonic-number limits as finite-n residuals. Finite sums are exact rationals;
// constants and logs are applied once at the end in 50-digit arithmetic.

#include "constants.hpp"
#include "exact_core.hpp"
#include "zeta.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <string>

namespace zetakit {

enum class Rate { inv_n, log_over_n, log2_over_n };

inline const char* to_string(Rate r) {
    switch (r) {
    case Rate::inv_n: return "inv_n";
    case Rate::log_over_n: return "log_over_n";
    case Rate::log2_over_n: return "log2_over_n";
    }
    return "?";
}

inline double rate_value(Rate r, double n) {
    switch (r) {
    case Rate::inv_n: return 1 / n;
    case Rate::log_over_n: return std::log(n) / n;
    case Rate::log2_over_n: return std::log(n) * std::log(n) / n;
    }
    return 0;
}

struct LimitProbe {
    unsigned n = 0;
    double residual = 0;
    Rate claimed_rate = Rate::inv_n;
};

namespace detail {

struct hp_consts {
    hp_float g, z2, z3;
};

inline const hp_consts& asym_consts() {
    static const hp_consts c = [] {
        hp_float pi_hp = boost::math::constants::pi<hp_float>();
        hp_float z3 = 0;
        // zeta(3) = (5/2) sum (-1)^(k+1) / (k^3 C(2k,k))
        hp_float term_c = 1;
        for (int k = 1; k < 200; ++k) {
            term_c = term_c * (2 * k) * (2 * k - 1) / (hp_float(k) * k);  // C(2k,k)
            hp_float t = 1 / (hp_float(k) * k * k * term_c);
            z3 += (k % 2 ? t : hp_float(-t));
            if (t < hp_float(1e-55)) break;
        }
        z3 *= hp_float(5) / 2;
        return hp_consts{euler_gamma_hp(), pi_hp * pi_hp / 6, z3};
    }();
    return c;
}

inline hp_float hp_log(unsigned n) { return log(hp_float(n)); }

} // namespace detail

// sum_{k<=n} H_k/k - gamma log n - 1/2 log^2 n - 1/2 (zeta(2) + gamma^2), with the
// sum taken exactly as (H_n^2 + H_n^(2)) / 2
inline double residual_E28(unsigned n) {
    if (n < 2) throw domain_error("residual_E28: n must be >= 2");
    const auto& c = detail::asym_consts();
    Rational s = (rpow(harmonic(n), 2) + harmonic(n, 2)) / 2;
    hp_float L = detail::hp_log(n);
    return static_cast<double>(to_hp(s) - c.g * L - L * L / 2 - (c.z2 + c.g * c.g) / 2);
}

// 1/2 H_n^2 - gamma log n - 1/2 log^2 n - 1/2 gamma^2
inline double residual_E29(unsigned n) {
    if (n < 2) throw domain_error("residual_E29: n must be >= 2");
    const auto& c = detail::asym_consts();
    hp_float h = to_hp(harmonic(n)), L = detail::hp_log(n);
    return static_cast<double>(h * h / 2 - c.g * L - L * L / 2 - c.g * c.g / 2);
}

namespace detail {

// sum_{k<=n} (H_k^2 + H_k^(2)) / k, exact
inline Rational sum_h2_over_k(unsigned n) {
    harmonic_prefix hp(n, 2);
    Integer acc = 0;
    for (unsigned k = 1; k <= n; ++k) acc += (hp.h1[k] * hp.h1[k] + hp.h2[k]) * hp.quot[k];
    Integer D3 = hp.D * hp.D * hp.D;
    return Rational(acc, D3);
}

} // namespace detail

// sum (H_k)^2/k + sum H_k^(2)/k - H_n H_n^(2) - (4/3) zeta(3), literally as stated.
inline double residual_E32a(unsigned n) {
    if (n < 1) throw domain_error("residual_E32a: n must be >= 1");
    const auto& c = detail::asym_consts();
    Rational lhs = detail::sum_h2_over_k(n) - harmonic(n) * harmonic(n, 2);
    return static_cast<double>(to_hp(lhs) - c.z3 * 4 / 3);
}

// Corrected form: ... - H_n H_n^(2) - H_n^3/3 -> (2/3) zeta(3)
inline double residual_E32a_corrected(unsigned n) {
    if (n < 1) throw domain_error("residual_E32a_corrected: n must be >= 1");
    const auto& c = detail::asym_consts();
    Rational h = harmonic(n);
    Rational lhs = detail::sum_h2_over_k(n) - h * harmonic(n, 2) - rpow(h, 3) / 3;
    return static_cast<double>(to_hp(lhs) - c.z3 * 2 / 3);
}

// H^3/6 + H H2/2 - [log^3 n/6 + (gamma/2) log^2 n + (zeta(2)+gamma^2)/2 log n]
//   - (zeta(2) gamma/2 + gamma^3/6)
inline double residual_E33c(unsigned n) {
    if (n < 2) throw domain_error("residual_E33c: n must be >= 2");
    const auto& c = detail::asym_consts();
    Rational h = harmonic(n);
    Rational s = rpow(h, 3) / 6 + h * harmonic(n, 2) / 2;
    hp_float L = detail::hp_log(n);
    hp_float poly = L * L * L / 6 + c.g / 2 * L * L + (c.z2 + c.g * c.g) / 2 * L;
    return static_cast<double>(to_hp(s) - poly - (c.z2 * c.g / 2 + c.g * c.g * c.g / 6));
}

// H H2 + H^2/(2n) - zeta(2) log n - gamma zeta(2)
inline double residual_E33h(unsigned n) {
    if (n < 1) throw domain_error("residual_E33h: n must be >= 1");
    const auto& c = detail::asym_consts();
    Rational h = harmonic(n);
    Rational s = h * harmonic(n, 2) + h * h / Rational(Integer(2 * n));
    hp_float L = detail::hp_log(n);
    return static_cast<double>(to_hp(s) - c.z2 * L - c.g * c.z2);
}

// H_n^2 / (n+1)
inline double residual_E58a(unsigned n) {
    if (n < 1) throw domain_error("residual_E58a: n must be >= 1");
    return to_double(harmonic(n) * harmonic(n) / Rational(Integer(n + 1)));
}

// n (H_n - log n - gamma) - 1/2
inline double residual_E25(unsigned n) {
    if (n < 1) throw domain_error("residual_E25: n must be >= 1");
    const auto& c = detail::asym_consts();
    hp_float d = to_hp(harmonic(n)) - detail::hp_log(n) - c.g;
    return static_cast<double>(d * n - hp_float(0.5));
}

// log n (H_n - log n - gamma)
inline double residual_E26(unsigned n) {
    if (n < 1) throw domain_error("residual_E26: n must be >= 1");
    const auto& c = detail::asym_consts();
    hp_float L = detail::hp_log(n);
    return static_cast<double>(L * (to_hp(harmonic(n)) - L - c.g));
}

// -S_n(m), exact
inline Rational flajolet_S(unsigned n, unsigned m) {
    if (m != 2 && m != 3) throw unsupported_error("flajolet_S: m must be 2 or 3");
    return dilcher_sum(n, m);
}

inline double flajolet_S_asymptotic(unsigned n, unsigned m) {
    if (n < 1) throw domain_error("flajolet_S_asymptotic: n must be >= 1");
    const double g = euler_gamma(), z2 = zeta_int(2), L = std::log(static_cast<double>(n));
    if (m == 2) return 0.5 * L * L + g * L + 0.5 * (z2 + g * g);
    if (m == 3)
        return L * L * L / 6 + g / 2 * L * L + 0.5 * (z2 + g * g) * L + 0.5 * (z2 + g * g / 3) * g +
               zeta_int(3) / 3;
    throw unsupported_error("flajolet_S_asymptotic: m must be 2 or 3");
}

} // namespace zetakit
