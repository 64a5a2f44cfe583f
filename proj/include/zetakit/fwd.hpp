#pragma once

// Declarations for the analytic modules. zeta, gamma, constants and quad call
// each other, so every module header includes this first and pulls in the
// definitions it needs at its end.

#include "errors.hpp"
#include "rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetakit {

// ---- zeta ----------------------------------------------------------------

enum class ZetaMethod { euler_maclaurin, hasse, closed_form, reflection };

struct ZetaEval {
    double s = 0;
    double value = 0;
    ZetaMethod method = ZetaMethod::euler_maclaurin;
    int terms_used = 1;
    double err_estimate = 0;
};

inline const char* to_string(ZetaMethod m) {
    switch (m) {
    case ZetaMethod::euler_maclaurin: return "euler_maclaurin";
    case ZetaMethod::hasse: return "hasse";
    case ZetaMethod::closed_form: return "closed_form";
    case ZetaMethod::reflection: return "reflection";
    }
    return "?";
}

inline ZetaEval zeta_eval(double s);
inline double zeta(double s);
inline Rational zeta_nonpositive_int(unsigned m);   // zeta(-m), exact
inline Rational zeta_even_pi_coeff(unsigned n);     // zeta(2n) / pi^(2n), exact
inline Rational zeta_hasse_nonpositive_int(unsigned m);
inline ZetaEval zeta_hasse_eval(double s);
inline double zeta_hasse(double s);
inline double eta(double s);
inline double hurwitz_zeta(double s, double a);
inline double dirichlet_beta(double s);
inline double polylog(int n, double x);
inline double functional_equation_residual(double s);
inline double zeta_prime(double s);
inline double zeta_derivative(double s, int order);
inline double zeta_derivative_series(double s, int order);
inline double zeta_prime_neg(int n);
inline double eta_prime(double s);
inline double eta_derivative(double s, int order);
inline double zeta_int(int k);                      // cached zeta(k), 2 <= k <= 80

// ---- gamma ---------------------------------------------------------------

struct LambdaCoeffs {
    std::vector<double> lambda;  // lambda[0] holds lambda_1
    double operator[](std::size_t j) const { return lambda.at(j - 1); }
    std::size_t size() const { return lambda.size(); }
    // sum_j lambda_j x^j, approximating 1/Gamma(x)
    double eval(double x) const {
        double acc = 0;
        for (std::size_t j = lambda.size(); j >= 1; --j) acc = (acc + lambda[j - 1]) * x;
        return acc;
    }
};

enum class FourierKind { cosine, sine };

inline double log_gamma(double x);
inline double gamma_function(double x);
inline double reflection_gamma_product(double x);
inline double legendre_duplication_residual(double x);
inline double digamma(double x);
inline double polygamma(int n, double x);
inline double gamma_derivative_at_1(int p);
inline LambdaCoeffs reciprocal_gamma_coeffs(int J);
inline double log_gamma_maclaurin(double x, int K);
inline double raabe_integral(double x);
inline double kummer_fourier_coeff(FourierKind kind, int k);
inline double log_gamma_fourier(double x, int K);
inline double van_der_pol_product(double x, long K);
inline double euler_product_gamma(double x, long N);
inline double weierstrass_product_gamma(double x, long N);

// ---- constants -----------------------------------------------------------

struct BracketedValue {
    double lower = 0;
    double upper = 0;
    double mid = 0;
    double width() const { return upper - lower; }
    bool contains(double v) const { return lower <= v && v <= upper; }
};

struct BracketedHp {
    hp_float lower, upper;
    hp_float mid() const { return (lower + upper) / 2; }
};

inline BracketedValue euler_gamma_bracket(int n, int N);
inline BracketedHp euler_gamma_bracket_hp(int n, int N);
inline double euler_gamma();
inline const hp_float& euler_gamma_hp();
inline double stieltjes_gamma1();
inline double glaisher_log_A();
inline double log_B();
inline double log_C();
inline double catalan_G();
inline double gen_euler_const(double x);
inline double gen_euler_const_polylog(double x);
inline double glaisher_A_limit(unsigned n);
inline double log_B_limit(unsigned n);
inline double log_C_limit(unsigned n);
inline double eta_second_at_1();

// ---- quad ----------------------------------------------------------------

struct QuadResult {
    double value = 0;
    double abs_err = 0;
    long evals = 0;
};

using RealFn = std::function<double(double)>;

inline QuadResult integrate(const RealFn& f, double a, double b, double tol = 1e-11);
inline QuadResult integrate_semi_infinite(const RealFn& f, double tol = 1e-11,
                                          bool gaussian_tail = false);
inline QuadResult integrate_loglog(const RealFn& g, double tol = 1e-11);

} // namespace zetakit
