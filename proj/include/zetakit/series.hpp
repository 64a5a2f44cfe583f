#pragma once

// Acceleration helpers for slowly converging alternating series.

#include "rational.hpp"

#include <cmath>
#include <vector>

namespace zetakit {

struct SeriesResult {
    double value = 0;
    double err_estimate = 0;
    int terms = 0;
};

// sum_{j>=0} (-1)^j v(j) by the Euler transform
//   sum_k (-1)^k (Delta^k v)(0) / 2^(k+1)
// truncated after `depth` terms. Differences are taken in 50-digit arithmetic
// so the 2^k growth of the difference table does not eat the result.
template <class F>
SeriesResult euler_transform_alternating(F&& v, int depth) {
    std::vector<hp_float> row(depth);
    for (int j = 0; j < depth; ++j) row[j] = hp_float(v(j));
    hp_float acc = 0, scale = 0.5, last = 0;
    for (int k = 0; k < depth; ++k) {
        last = (k % 2 ? -row[0] : row[0]) * scale;
        acc += last;
        for (int j = 0; j + 1 < depth - k; ++j) row[j] = row[j + 1] - row[j];
        scale /= 2;
    }
    SeriesResult r;
    r.value = static_cast<double>(acc);
    r.err_estimate = std::fabs(static_cast<double>(last));
    r.terms = depth;
    return r;
}

// sum_{k>=k0} (-1)^k a(k): `direct` plain terms, then the Euler transform of the
// remaining tail.
template <class F>
SeriesResult alternating_sum(F&& a, long k0, int direct, int depth) {
    hp_float head = 0;
    for (long k = k0; k < k0 + direct; ++k) {
        hp_float t(a(k));
        head += (k % 2 ? -t : t);
    }
    long start = k0 + direct;
    auto tail = euler_transform_alternating([&](int j) { return a(start + j); }, depth);
    SeriesResult r;
    double sign = (start % 2) ? -1.0 : 1.0;
    r.value = static_cast<double>(head + hp_float(sign) * hp_float(tail.value));
    r.err_estimate = tail.err_estimate;
    r.terms = direct + depth;
    return r;
}

} // namespace zetakit
