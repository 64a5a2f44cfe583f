#pragma once

#include "../exact_core.hpp"


#include <cmath>
#include <limits>
#include <mutex>
#include <vector>

namespace zetakit {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double ln2 = 0.693147180559945309417232121458176568;
inline constexpr double ln_2pi = 1.837877066409345483560659472811235279;
inline constexpr double eps = std::numeric_limits<double>::epsilon();

inline bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

// sin(pi x) with exact zeros at integers and exact +-1 at half-integers.
inline double sin_pi(double x) {
    if (is_integer(x)) return 0.0;
    double r = std::fmod(x, 2.0);  // (-2, 2)
    if (r < 0) r += 2.0;           // [0, 2)
    double sign = 1.0;
    if (r >= 1.0) { r -= 1.0; sign = -1.0; }
    if (r > 0.5) r = 1.0 - r;
    return sign * (r == 0.5 ? 1.0 : std::sin(pi * r));
}

inline double cos_pi(double x) { return sin_pi(x + 0.5); }

namespace detail {

// B_2j / (2j)! as doubles, j = 0..jmax.
inline const std::vector<double>& bernoulli_over_factorial() {
    static const std::vector<double> table = [] {
        std::vector<double> t;
        for (unsigned j = 0; j <= 120; ++j)
            t.push_back(to_double(bernoulli(2 * j) / Rational(factorial(2 * j))));
        return t;
    }();
    return table;
}

inline double bernoulli_d(unsigned n) {
    static const std::vector<double> table = [] {
        std::vector<double> t;
        for (unsigned k = 0; k <= 240; ++k) t.push_back(to_double(bernoulli(k)));
        return t;
    }();
    return table.at(n);
}

// a + b e + c e^2, truncated Taylor arithmetic used to differentiate the
// Euler-Maclaurin formula in s.
struct jet2 {
    double v = 0, d1 = 0, d2 = 0;
    jet2() = default;
    jet2(double a) : v(a) {}
    jet2(double a, double b, double c) : v(a), d1(b), d2(c) {}
    double magnitude() const { return std::fabs(v) + std::fabs(d1) + std::fabs(d2); }
};

inline jet2 operator+(jet2 a, const jet2& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
inline jet2 operator-(jet2 a, const jet2& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
inline jet2 operator-(const jet2& a) { return {-a.v, -a.d1, -a.d2}; }
inline jet2 operator*(const jet2& a, const jet2& b) {
    return {a.v * b.v, a.v * b.d1 + a.d1 * b.v, a.v * b.d2 + a.d1 * b.d1 + a.d2 * b.v};
}
inline jet2 operator*(const jet2& a, double k) { return {a.v * k, a.d1 * k, a.d2 * k}; }
inline jet2 operator*(double k, const jet2& a) { return a * k; }
inline jet2 reciprocal(const jet2& a) {
    double r = 1.0 / a.v;
    return {r, -a.d1 * r * r, (a.d1 * a.d1 * r - a.d2) * r * r};
}
inline jet2 operator/(const jet2& a, const jet2& b) { return a * reciprocal(b); }
inline jet2& operator+=(jet2& a, const jet2& b) { return a = a + b; }
inline jet2& operator*=(jet2& a, const jet2& b) { return a = a * b; }

inline jet2 exp(const jet2& u) {
    double e = std::exp(u.v);
    return {e, e * u.d1, e * (u.d2 + 0.5 * u.d1 * u.d1)};
}

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(const jet2& x) { return x.magnitude(); }

// x^(-s) for x > 0
inline double pow_neg(double x, double s) { return std::pow(x, -s); }
inline jet2 pow_neg(double x, const jet2& s) { return exp(s * (-std::log(x))); }

// log k for k = 0..n in 50-digit precision; composites from their prime factors.
inline std::vector<hp_float> hp_log_table(unsigned n) {
    static std::mutex mu;
    static std::vector<hp_float> logs{hp_float(0), hp_float(0)};
    std::lock_guard<std::mutex> lock(mu);
    if (logs.size() <= n) {
        unsigned old = static_cast<unsigned>(logs.size());
        std::vector<unsigned> spf(n + 1, 0);
        for (unsigned i = 2; i <= n; ++i)
            if (spf[i] == 0)
                for (unsigned j = i; j <= n; j += i)
                    if (spf[j] == 0) spf[j] = i;
        logs.resize(n + 1);
        for (unsigned k = old; k <= n; ++k) {
            unsigned p = spf[k];
            logs[k] = (p == k) ? hp_float(boost::multiprecision::log(hp_float(k)))
                               : hp_float(logs[p] + logs[k / p]);
        }
    }
    return std::vector<hp_float>(logs.begin(), logs.begin() + n + 1);
}

} // namespace detail
} // namespace zetakit
