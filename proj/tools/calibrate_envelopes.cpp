// Rate-envelope calibration for the limit residuals: for each residual, the
// smallest C with |r(n)| <= C rate(n) on n = 10..1000. The registry stores 2C.
#include <zetakit/harmonic_asym.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace zetakit;

namespace {

struct Probe {
    std::string name;
    std::function<double(unsigned)> residual;
    Rate rate;
};

bool fits(const Probe& p, double C, const std::vector<double>& r) {
    for (unsigned n = 10; n <= 1000; ++n)
        if (std::fabs(r[n]) > C * rate_value(p.rate, n)) return false;
    return true;
}

} // namespace

int main() {
    std::vector<Probe> probes = {
        {"E.28", residual_E28, Rate::log_over_n},
        {"E.29", residual_E29, Rate::log_over_n},
        {"E.32a", residual_E32a, Rate::inv_n},
        {"E.32a-corrected", residual_E32a_corrected, Rate::inv_n},
        {"E.33c", residual_E33c, Rate::log2_over_n},
        {"E.33h", residual_E33h, Rate::log2_over_n},
        {"E.58a", residual_E58a, Rate::log2_over_n},
        {"E.25", residual_E25, Rate::inv_n},
        {"E.26", residual_E26, Rate::log_over_n},
        {"E.30", [](unsigned n) { return to_double(flajolet_S(n, 2)) - flajolet_S_asymptotic(n, 2); },
         Rate::log_over_n},
        {"E.31", [](unsigned n) { return to_double(flajolet_S(n, 3)) - flajolet_S_asymptotic(n, 3); },
         Rate::log2_over_n},
    };
    for (const auto& p : probes) {
        std::vector<double> r(1001);
        for (unsigned n = 10; n <= 1000; ++n) r[n] = p.residual(n);
        double lo = 0, hi = 1;
        while (!fits(p, hi, r)) hi *= 2;
        for (int it = 0; it < 60; ++it) {
            double mid = 0.5 * (lo + hi);
            (fits(p, mid, r) ? hi : lo) = mid;
        }
        double r4 = p.residual(10000);
        std::printf("%-16s %-12s C=%.6g  C2=%.3g  r(1e4)=%.6g  ratio(1e4)=%.6g\n", p.name.c_str(),
                    to_string(p.rate), hi, 2 * hi, r4, std::fabs(r4) / rate_value(p.rate, 1e4));
    }
}
