#pragma once

// Globally adaptive Gauss-Kronrod (10/21) quadrature. Open rule: f is never
// evaluated at an interval endpoint, so integrable endpoint singularities
// (log t, 1/log t, log log 1/x, x^-a) are fine.

#include "fwd.hpp"
#include "detail/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace zetakit {
namespace detail {

struct gk_segment {
    double a, b, value, err;
    int depth;
    bool operator<(const gk_segment& o) const { return err < o.err; }
};

// QUADPACK qk21 with its error scaling.
inline gk_segment gk21(const RealFn& f, double a, double b, int depth, long& evals) {
    static constexpr double xgk[11] = {
        0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
        0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
        0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
        0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
        0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
        0.0};
    static constexpr double wgk[11] = {
        0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
        0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
        0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
        0.123491976262065851077208292457104, 0.134709217311473325928054001771707,
        0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
        0.149445554002916905664936468389821};
    static constexpr double wg[5] = {
        0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
        0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
        0.295524224714752870173892994651338};

    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    // on very short intervals c +- dx can round onto an endpoint
    const double lo = std::nextafter(a, b), hi = std::nextafter(b, a);
    double fv1[10], fv2[10];
    double fc = f(std::clamp(c, lo, hi));
    double resk = wgk[10] * fc, resg = 0, resabs = std::fabs(resk);
    for (int j = 0; j < 10; ++j) {
        double dx = h * xgk[j];
        fv1[j] = f(std::clamp(c - dx, lo, hi));
        fv2[j] = f(std::clamp(c + dx, lo, hi));
        double s = fv1[j] + fv2[j];
        resk += wgk[j] * s;
        resabs += wgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
        if (j % 2 == 1) resg += wg[j / 2] * s;
    }
    evals += 21;
    double mean = resk * 0.5;
    double resasc = wgk[10] * std::fabs(fc - mean);
    for (int j = 0; j < 10; ++j) resasc += wgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));

    double value = resk * h;
    resabs *= std::fabs(h);
    resasc *= std::fabs(h);
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0 && err != 0) err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
    if (resabs > std::numeric_limits<double>::min() / (50 * eps)) err = std::max(50 * eps * resabs, err);
    if (!std::isfinite(value) || !std::isfinite(err))
        throw domain_error("integrate: integrand is not finite inside the interval");
    return {a, b, value, err, depth};
}

inline QuadResult gk_adaptive(const RealFn& f, double a, double b, double tol) {
    constexpr int max_depth = 60;
    constexpr std::size_t max_segments = 4000;

    QuadResult r;
    std::priority_queue<detail::gk_segment> work;
    std::vector<detail::gk_segment> frozen;  // at max depth, cannot be refined
    work.push(detail::gk21(f, a, b, 0, r.evals));
    double total = work.top().value, total_err = work.top().err;

    while (true) {
        double floor = 50 * eps * std::fabs(total);
        if (total_err <= std::max(tol, floor)) break;
        if (work.empty()) {
            throw convergence_error("integrate: maximum subdivision depth reached", total, total_err);
        }
        if (work.size() + frozen.size() >= max_segments)
            throw convergence_error("integrate: maximum number of subintervals reached", total, total_err);
        detail::gk_segment s = work.top();
        work.pop();
        double m = 0.5 * (s.a + s.b);
        if (s.depth >= max_depth || m <= s.a || m >= s.b) {
            frozen.push_back(s);
            continue;
        }
        auto left = detail::gk21(f, s.a, m, s.depth + 1, r.evals);
        auto right = detail::gk21(f, m, s.b, s.depth + 1, r.evals);
        total += left.value + right.value - s.value;
        total_err += left.err + right.err - s.err;
        work.push(left);
        work.push(right);
    }
    // re-add to limit drift from the running updates
    double sum = 0, esum = 0;
    while (!work.empty()) {
        sum += work.top().value;
        esum += work.top().err;
        work.pop();
    }
    for (const auto& s : frozen) {
        sum += s.value;
        esum += s.err;
    }
    r.value = sum;
    r.abs_err = esum;
    return r;
}

// x = a + (b-a) phi(u), phi(u) = (1 + tanh(z))/2, z = (u - 1/2)/(u(1-u)).
// phi' decays like exp(-1/u) at both ends, which flattens any integrable
// algebraic endpoint singularity.
inline QuadResult gk_adaptive_flattened(const RealFn& f, double a, double b, double tol) {
    const double w = b - a;
    auto g = [&f, a, b, w](double u) {
        double v = 1 - u;
        double z = (u - 0.5) / (u * v);
        double e = std::exp(-2 * std::fabs(z));
        double tail = e / (1 + e);  // distance of phi from the nearer end
        double x = z < 0 ? a + w * tail : b - w * tail;
        if (x <= a || x >= b || tail == 0) return 0.0;
        double dphi = e / ((1 + e) * (1 + e)) * (u * u + v * v) / (u * u * v * v);
        double fx = f(x);
        return fx == 0 ? 0.0 : fx * w * dphi;
    };
    return gk_adaptive(g, 0.0, 1.0, tol);
}

} // namespace detail

// Adaptive Gauss-Kronrod on [a,b]; if subdivision runs out (typically a strong
// algebraic endpoint singularity), retry once on the endpoint-flattened form.
inline QuadResult integrate(const RealFn& f, double a, double b, double tol) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw domain_error("integrate: need finite a < b");
    if (!(tol > 0)) throw domain_error("integrate: tol must be > 0");
    try {
        return detail::gk_adaptive(f, a, b, tol);
    } catch (const convergence_error& first) {
        try {
            return detail::gk_adaptive_flattened(f, a, b, tol);
        } catch (const convergence_error& second) {
            if (second.error_estimate < first.error_estimate) throw;
            throw first;
        } catch (const domain_error&) {
            // the flattening map can push nodes onto a non-finite endpoint value
            throw first;
        }
    }
}

inline QuadResult integrate_semi_infinite(const RealFn& f, double tol, bool gaussian_tail) {
    if (!(tol > 0)) throw domain_error("integrate_semi_infinite: tol must be > 0");
    if (gaussian_tail) {
        // [0,1] directly; on [1,inf) x = sqrt(y), y = 1 - log u
        QuadResult a = integrate(f, 0.0, 1.0, tol / 2);
        auto g = [f](double u) {
            double x = std::sqrt(1 - std::log(u));
            double v = f(x);
            return v == 0 ? 0.0 : v / (2 * x * u);
        };
        QuadResult b = integrate(g, 0.0, 1.0, tol / 2);
        return {a.value + b.value, a.abs_err + b.abs_err, a.evals + b.evals};
    }
    // x = -log u
    auto g = [f](double u) {
        double v = f(-std::log(u));
        return v == 0 ? 0.0 : v / u;
    };
    return integrate(g, 0.0, 1.0, tol);
}

// int_0^1 g(x) log log(1/x) dx = int_0^inf g(e^-u) e^-u log u du, split at u = 1.
inline QuadResult integrate_loglog(const RealFn& g, double tol) {
    auto near = [g](double u) {
        double x = std::exp(-u);
        return g(x) * x * std::log(u);
    };
    // u = 1 - log v on [1, inf)
    auto far = [g](double v) {
        double x = v / M_E;
        return g(x) * std::log(1 - std::log(v)) / M_E;
    };
    QuadResult a = integrate(near, 0.0, 1.0, tol / 2);
    QuadResult b = integrate(far, 0.0, 1.0, tol / 2);
    return {a.value + b.value, a.abs_err + b.abs_err, a.evals + b.evals};
}

} // namespace zetakit
