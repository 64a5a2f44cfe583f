#pragma once

// Harmonic-number limits with calibrated rate envelopes, and the inequality suite.

#include "builders.hpp"
#include "../constants.hpp"
#include "../harmonic_asym.hpp"
#include "../zeta.hpp"

#include <cmath>
#include <vector>

namespace zetakit::verify::detail {

// Envelope constants: max |residual(n)| / rate(n) over n in [10, 1000] by
// bisection (tools/calibrate_envelopes), frozen with 2x headroom.
struct Envelope {
    double C;
    Rate rate;
};

inline Identity limit(std::string id, std::string ref, Tags tags, unsigned n, Envelope env, double (*res)(unsigned),
                      std::string note = {}) {
    std::string full = "n = " + std::to_string(n) + ", |residual| <= " + fmt(env.C) + " * " + to_string(env.rate);
    if (!note.empty()) full += "; " + note;
    return numeric(Kind::limit, std::move(id), std::move(ref), std::move(tags),
                   env.C * rate_value(env.rate, n), [res, n] { return res(n); }, [] { return 0.0; },
                   std::move(full));
}

inline double residual_flajolet2(unsigned n) { return to_double(flajolet_S(n, 2)) - flajolet_S_asymptotic(n, 2); }
inline double residual_flajolet3(unsigned n) { return to_double(flajolet_S(n, 3)) - flajolet_S_asymptotic(n, 3); }

inline void add_limit_identities(std::vector<Identity>& r) {
    const Tags H = {"appendix-e", "limit", "harmonic"};
    constexpr unsigned n = 10000;

    r.push_back(limit("E.25", "n (H_n - log n - gamma) -> 1/2", H, n, {0.167, Rate::inv_n}, residual_E25));
    r.push_back(limit("E.26", "log n (H_n - log n - gamma) -> 0", H, n, {1.0, Rate::log_over_n}, residual_E26));
    r.push_back(limit("E.28", "sum H_k/k - gamma log n - (1/2) log^2 n -> (zeta(2) + gamma^2)/2", H, n,
                      {0.939, Rate::log_over_n}, residual_E28));
    r.push_back(limit("E.29", "(1/2) H_n^2 - gamma log n - (1/2) log^2 n -> gamma^2/2", H, n,
                      {1.24, Rate::log_over_n}, residual_E29));
    r.push_back(limit("E.30", "Flajolet-Sedgewick asymptotic for the m = 2 Dilcher sum", H, 1000,
                      {0.939, Rate::log_over_n}, residual_flajolet2));
    r.push_back(limit("E.31", "Flajolet-Sedgewick asymptotic for the m = 3 Dilcher sum", H, 1000,
                      {0.447, Rate::log2_over_n}, residual_flajolet3));
    r.push_back(limit("E.32a", "sum H_k^2/k + sum H_k^(2)/k - H_n H_n^(2) -> (4/3) zeta(3), as printed", H, n,
                      {2.78e5, Rate::inv_n}, residual_E32a,
                      "the printed limit diverges like (log n)^3/3; see E.32a-corrected"));
    r.push_back(limit("E.32a-corrected",
                      "sum H_k^2/k + sum H_k^(2)/k - H_n H_n^(2) - H_n^3/3 -> (2/3) zeta(3)", H, n,
                      {0.0603, Rate::inv_n}, residual_E32a_corrected, "resolved-by-oracle"));
    r.push_back(limit("E.33c", "H^3/6 + H H^(2)/2 minus the cubic log polynomial -> zeta(2) gamma/2 + gamma^3/6", H,
                      n, {0.447, Rate::log2_over_n}, residual_E33c));
    r.push_back(limit("E.33h", "H H^(2) + H^2/(2n) - zeta(2) log n -> gamma zeta(2)", H, n,
                      {0.895, Rate::log2_over_n}, residual_E33h));
    r.push_back(limit("E.58a", "H_n^2/(n+1) -> 0", H, n, {2.94, Rate::log2_over_n}, residual_E58a));
}

inline void add_inequalities(std::vector<Identity>& r) {
    r.push_back(inequality("E.23", "Bernoulli bracket strictly contains gamma, (n, N) in {2,5,10,20} x {1,2,3}",
                           {"appendix-e", "inequality", "constants"},
                           {2, 5, 10, 20},
                           [](double nd) {
                               const hp_float& g = euler_gamma_hp();
                               for (int N = 1; N <= 3; ++N) {
                                   BracketedHp b = euler_gamma_bracket_hp(static_cast<int>(nd), N);
                                   if (!(b.lower < g && g < b.upper)) return false;
                               }
                               return true;
                           },
                           "cases count values of n; each case checks N = 1, 2, 3"));

    r.push_back(inequality("E.6b",
                           "1/(2n + alpha) <= H_n - log n - gamma < 1/(2n + 1/3), alpha = 1/(1-gamma) - 2, n <= 1e4",
                           {"appendix-e", "inequality", "constants"}, {1.0, 10000.0},
                           [](double block) {
                               // block 1 is n = 1 (the equality case), block 10000 sweeps n = 2..1e4
                               const hp_float& g = euler_gamma_hp();
                               const hp_float alpha = 1 / (1 - g) - 2, beta = hp_float(1) / 3;
                               const hp_float slack("1e-40");
                               hp_float h = 1;
                               auto holds = [&](unsigned n, bool allow_equal) {
                                   hp_float d = h - log(hp_float(n)) - g;
                                   hp_float lo = 1 / (2 * hp_float(n) + alpha), hi = 1 / (2 * hp_float(n) + beta);
                                   bool lower = allow_equal ? (lo <= d + slack) : (lo < d);
                                   return lower && d < hi;
                               };
                               if (block == 1) return holds(1, true);
                               for (unsigned n = 2; n <= 10000; ++n) {
                                   h += hp_float(1) / n;
                                   if (!holds(n, false)) return false;
                               }
                               return true;
                           },
                           "resolved-by-oracle: alpha bounds from below, beta = 1/3 from above; equality at n = 1"));

    std::vector<double> ns;
    for (int n = 3; n <= 12; ++n) ns.push_back(n);
    r.push_back(inequality("A.10:bounds", "(1 - 2^-n)/(1 - 2^(1-n)) < zeta(n) < 1/(1 - 2^(1-n)), n = 3..12",
                           {"appendix-a", "inequality", "zeta"}, ns, [](double n) {
                               double q = 1 - std::pow(2.0, 1 - n), z = zeta(n);
                               return (1 - std::pow(2.0, -n)) / q < z && z < 1 / q;
                           }));
    r.push_back(inequality("F.pole", "1 < (s-1) zeta(s) < s for s in (1, 2]", {"appendix-f", "inequality", "zeta"},
                           {1.001, 1.01, 1.1, 1.25, 1.5, 1.75, 2.0}, [](double s) {
                               double v = (s - 1) * zeta(s);
                               return 1 < v && v < s;
                           }));
    r.push_back(inequality("E.6:monotone", "H_n - log n decreases and H_n - log(n+1) increases, n <= 1000",
                           {"appendix-e", "inequality", "constants"}, {1000.0}, [](double) {
                               hp_float h = 1, prev_a = 1, prev_b = 1 - log(hp_float(2));
                               for (unsigned n = 2; n <= 1000; ++n) {
                                   h += hp_float(1) / n;
                                   hp_float a = h - log(hp_float(n)), b = h - log(hp_float(n + 1));
                                   if (!(a < prev_a && b > prev_b)) return false;
                                   prev_a = a;
                                   prev_b = b;
                               }
                               return true;
                           }));
}

} // namespace zetakit::verify::detail
