#pragma once

// Exact combinatorics: Bernoulli/Euler numbers and polynomials, Stirling
// numbers, harmonic numbers and a few finite binomial sums. No floating point.

#include "errors.hpp"
#include "rational.hpp"

#include <mutex>
#include <string>
#include <vector>

namespace zetakit {

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

namespace detail {

class bernoulli_cache {
public:
    Rational get(unsigned n) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(n);
        return values_[n];
    }

private:
    // B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k
    void grow(unsigned n) {
        if (values_.empty()) {
            values_.push_back(Rational(1));
            values_.push_back(make_rational(-1, 2));
        }
        for (unsigned m = static_cast<unsigned>(values_.size()); m <= n; ++m) {
            if (m % 2 == 1) {
                values_.push_back(Rational(0));
                continue;
            }
            Rational acc = 0;
            for (unsigned k = 0; k < m; ++k) {
                if (k >= 3 && k % 2 == 1) continue;
                acc += Rational(binomial(m + 1, k)) * values_[k];
            }
            values_.push_back(-acc / Rational(Integer(m + 1)));
        }
    }

    std::mutex mu_;
    std::vector<Rational> values_;
};

inline bernoulli_cache& bernoulli_store() {
    static bernoulli_cache cache;
    return cache;
}

// Rows of the signed first-kind and second-kind triangles, grown on demand.
class stirling_cache {
public:
    Integer first(unsigned n, unsigned k) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(n);
        return s1_[n][k];
    }
    Integer second(unsigned n, unsigned k) {
        std::lock_guard<std::mutex> lock(mu_);
        grow(n);
        return s2_[n][k];
    }

private:
    void grow(unsigned n) {
        if (s1_.empty()) {
            s1_.push_back({Integer(1)});
            s2_.push_back({Integer(1)});
        }
        for (unsigned m = static_cast<unsigned>(s1_.size()); m <= n; ++m) {
            const auto& p1 = s1_[m - 1];
            const auto& p2 = s2_[m - 1];
            std::vector<Integer> r1(m + 1), r2(m + 1);
            for (unsigned k = 0; k <= m; ++k) {
                Integer a1 = k >= 1 ? p1[k - 1] : Integer(0);
                Integer b1 = k <= m - 1 ? p1[k] : Integer(0);
                r1[k] = a1 - Integer(m - 1) * b1;  // s(m,k) = s(m-1,k-1) - (m-1) s(m-1,k)
                Integer a2 = k >= 1 ? p2[k - 1] : Integer(0);
                Integer b2 = k <= m - 1 ? p2[k] : Integer(0);
                r2[k] = a2 + Integer(k) * b2;      // S(m,k) = S(m-1,k-1) + k S(m-1,k)
            }
            s1_.push_back(std::move(r1));
            s2_.push_back(std::move(r2));
        }
    }

    std::mutex mu_;
    std::vector<std::vector<Integer>> s1_, s2_;
};

inline stirling_cache& stirling_store() {
    static stirling_cache cache;
    return cache;
}

} // namespace detail

inline Rational bernoulli(unsigned n) { return detail::bernoulli_store().get(n); }

inline Integer stirling2(unsigned n, unsigned k) {
    if (k > n)
        throw domain_error("stirling2: k > n");
    return detail::stirling_store().second(n, k);
}

// Signed convention: s(n,1) = (-1)^(n+1) (n-1)!.
inline Integer stirling1(unsigned n, unsigned k) {
    if (k > n)
        throw domain_error("stirling1: k > n");
    return detail::stirling_store().first(n, k);
}

// sum_{k=0}^n (-1)^k k!/(k+1) S(n,k)
inline Rational bernoulli_via_stirling(unsigned n) {
    Rational acc = 0;
    Integer kfact = 1;
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) kfact *= k;
        Rational term(kfact * stirling2(n, k), Integer(k + 1));
        if (k % 2) acc -= term;
        else acc += term;
    }
    return acc;
}

// sum_k C(n,k) B_k x^(n-k)
inline Rational bernoulli_poly(unsigned n, const Rational& x) {
    Rational acc = 0;
    Rational xp = 1;  // x^(n-k), built from k = n downwards
    for (unsigned j = 0; j <= n; ++j) {
        unsigned k = n - j;
        acc += Rational(binomial(n, k)) * bernoulli(k) * xp;
        xp *= x;
    }
    return acc;
}

// Double-sum form: sum_{k=0}^n 1/(k+1) sum_{j=0}^k (-1)^j C(k,j) (x+j)^n
inline Rational bernoulli_poly_double_sum(unsigned n, const Rational& x) {
    std::vector<Rational> powers(n + 1);
    for (unsigned j = 0; j <= n; ++j) powers[j] = rpow(x + Rational(j), n);
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
        Rational inner = 0;
        for (unsigned j = 0; j <= k; ++j) {
            Rational t = Rational(binomial(k, j)) * powers[j];
            if (j % 2) inner -= t;
            else inner += t;
        }
        acc += inner / Rational(Integer(k + 1));
    }
    return acc;
}

// Checks sum_r s(k,r) B_r = (-1)^k k!/(k+1) for k <= N and that the two
// Stirling transforms are mutually inverse on sequences of length N.
inline bool stirling_pair_inverse_check(unsigned N) {
    if (N < 1) throw domain_error("stirling_pair_inverse_check: N < 1");
    for (unsigned k = 1; k <= N; ++k) {
        Rational lhs = 0;
        for (unsigned r = 1; r <= k; ++r) lhs += Rational(stirling1(k, r)) * bernoulli(r);
        Rational rhs(factorial(k), Integer(k + 1));
        if (k % 2) rhs = -rhs;
        if (lhs != rhs) return false;
    }
    // (S * s)[k][j] = delta_kj and (s * S)[k][j] = delta_kj on 1..N
    for (unsigned k = 1; k <= N; ++k) {
        for (unsigned j = 1; j <= k; ++j) {
            Integer a = 0, b = 0;
            for (unsigned m = j; m <= k; ++m) {
                a += stirling2(k, m) * stirling1(m, j);
                b += stirling1(k, m) * stirling2(m, j);
            }
            Integer want = (k == j) ? 1 : 0;
            if (a != want || b != want) return false;
        }
    }
    return true;
}

// E_n(x) from 2 E_n(x) + sum_{k<n} C(n,k) E_k(x) = 2 x^n.
inline Rational euler_poly(unsigned n, const Rational& x) {
    std::vector<Rational> e(n + 1);
    Rational xp = 1;
    for (unsigned m = 0; m <= n; ++m) {
        Rational acc = 0;
        for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m, k)) * e[k];
        e[m] = xp - acc / 2;
        xp *= x;
    }
    return e[n];
}

inline Integer euler_number(unsigned n) {
    Rational v = euler_poly(n, make_rational(1, 2)) * Rational(boost::multiprecision::pow(Integer(2), n));
    return num(v);
}

namespace detail {

// P/Q = sum_{k=a}^{b-1} 1/k^p, by binary splitting.
inline void harmonic_split(unsigned a, unsigned b, unsigned p, Integer& P, Integer& Q) {
    if (b - a == 1) {
        P = 1;
        Q = boost::multiprecision::pow(Integer(a), p);
        return;
    }
    unsigned m = a + (b - a) / 2;
    Integer P1, Q1, P2, Q2;
    harmonic_split(a, m, p, P1, Q1);
    harmonic_split(m, b, p, P2, Q2);
    P = P1 * Q2 + P2 * Q1;
    Q = Q1 * Q2;
}

} // namespace detail

// H_n^(p) = sum_{k<=n} 1/k^p
inline Rational harmonic(unsigned n, unsigned p = 1) {
    if (p < 1) throw domain_error("harmonic: p must be >= 1");
    if (n == 0) return Rational(0);
    Integer P, Q;
    detail::harmonic_split(1, n + 1, p, P, Q);
    return Rational(P, Q);
}

inline Integer lcm_upto(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) mpz_lcm_ui(r.backend().data(), r.backend().data(), k);
    return r;
}

// Prefix harmonic numbers over a common denominator: H_k^(p) = numer[k] / D^p,
// D = lcm(1..n). Lets long sums of harmonic products run in integer arithmetic.
struct harmonic_prefix {
    Integer D;
    std::vector<Integer> quot;   // D / k
    std::vector<Integer> h1;     // H_k * D
    std::vector<Integer> h2;     // H_k^(2) * D^2
    std::vector<Integer> h3;     // H_k^(3) * D^3

    explicit harmonic_prefix(unsigned n, unsigned max_order = 3) : D(lcm_upto(n)) {
        quot.resize(n + 1);
        h1.assign(n + 1, 0);
        if (max_order >= 2) h2.assign(n + 1, 0);
        if (max_order >= 3) h3.assign(n + 1, 0);
        for (unsigned k = 1; k <= n; ++k) {
            quot[k] = D / k;
            h1[k] = h1[k - 1] + quot[k];
            if (max_order >= 2) h2[k] = h2[k - 1] + quot[k] * quot[k];
            if (max_order >= 3) h3[k] = h3[k - 1] + quot[k] * quot[k] * quot[k];
        }
    }
    unsigned size() const { return static_cast<unsigned>(quot.size()) - 1; }
};

// sum_{k=0}^n C(n,k) (-1)^k / (k+1)^m
inline Rational alt_binomial_sum(unsigned n, unsigned m) {
    if (m < 1) throw domain_error("alt_binomial_sum: m must be >= 1");
    Rational acc = 0;
    for (unsigned k = 0; k <= n; ++k) {
        Rational t(binomial(n, k), boost::multiprecision::pow(Integer(k + 1), m));
        if (k % 2) acc -= t;
        else acc += t;
    }
    return acc;
}

// sum_{k=1}^n C(n,k) (-1)^(k+1) / k^s
inline Rational dilcher_sum(unsigned n, unsigned s) {
    if (n < 1 || s < 1) throw domain_error("dilcher_sum: need n >= 1, s >= 1");
    Rational acc = 0;
    for (unsigned k = 1; k <= n; ++k) {
        Rational t(binomial(n, k), boost::multiprecision::pow(Integer(k), s));
        if (k % 2) acc += t;
        else acc -= t;
    }
    return acc;
}

enum class TrigKind { cot, tan, csc, sec };

inline TrigKind parse_trig_kind(const std::string& s) {
    if (s == "cot") return TrigKind::cot;
    if (s == "tan") return TrigKind::tan;
    if (s == "csc") return TrigKind::csc;
    if (s == "sec") return TrigKind::sec;
    throw usage_error("unknown trig kind: " + s);
}

// Maclaurin coefficients: x cot x, x csc x and sec x at x^(2n); tan x at x^(2n-1).
inline Rational trig_series_coeff(TrigKind kind, unsigned n) {
    Integer four_n = boost::multiprecision::pow(Integer(2), 2 * n);
    Rational f(Integer(1), factorial(2 * n));
    Rational sgn = (n % 2) ? Rational(-1) : Rational(1);  // (-1)^n
    switch (kind) {
    case TrigKind::cot:
        return sgn * Rational(four_n) * bernoulli(2 * n) * f;
    case TrigKind::tan:
        if (n == 0) return Rational(0);
        return -sgn * Rational(four_n) * Rational(four_n - 1) * bernoulli(2 * n) * f;
    case TrigKind::csc: {
        // (-1)^(n+1) 2 (2^(2n-1) - 1) B_2n / (2n)!
        Rational c = Rational(four_n) - 2;
        return -sgn * c * bernoulli(2 * n) * f;
    }
    case TrigKind::sec:
        return sgn * Rational(euler_number(2 * n)) * f;
    }
    return Rational(0);
}

// T_k(n) = sum_{j=0}^{n-1} (-1)^j j^k
inline Integer alt_power_sum(unsigned n, unsigned k) {
    Integer acc = 0;
    for (unsigned j = 0; j < n; ++j) {
        Integer t = boost::multiprecision::pow(Integer(j), k);
        if (j % 2) acc -= t;
        else acc += t;
    }
    return acc;
}

} // namespace zetakit
