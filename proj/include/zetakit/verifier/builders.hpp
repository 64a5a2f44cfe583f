#pragma once

// Small constructors shared by the registry tables.

#include "identity.hpp"
#include "../quad.hpp"

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace zetakit::verify::detail {

using Tags = std::vector<std::string>;

inline Identity exact(std::string id, std::string ref, Tags tags, std::function<Rational()> l,
                      std::function<Rational()> r, std::string note = {}) {
    Identity e;
    e.id = std::move(id);
    e.paper_ref = std::move(ref);
    e.kind = Kind::exact_rational;
    e.tags = std::move(tags);
    e.exact_lhs = std::move(l);
    e.exact_rhs = std::move(r);
    e.note = std::move(note);
    return e;
}

// Exact identity checked for every n in [lo, hi]: lhs counts the n that hold.
template <class Pred>
Identity exact_range(std::string id, std::string ref, Tags tags, unsigned lo, unsigned hi, Pred pred,
                     std::string note = {}) {
    auto count = [lo, hi, pred]() {
        long held = 0;
        for (unsigned n = lo; n <= hi; ++n)
            if (pred(n)) ++held;
        return Rational(held);
    };
    const long total = static_cast<long>(hi) - lo + 1;
    if (note.empty()) note = "cases holding exactly, n = " + std::to_string(lo) + ".." + std::to_string(hi);
    return exact(std::move(id), std::move(ref), std::move(tags), count, [total] { return Rational(total); },
                 std::move(note));
}

inline Identity numeric(Kind kind, std::string id, std::string ref, Tags tags, double tol,
                        std::function<double()> l, std::function<double()> r, std::string note = {}) {
    Identity e;
    e.id = std::move(id);
    e.paper_ref = std::move(ref);
    e.kind = kind;
    e.tol = tol;
    e.tags = std::move(tags);
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    e.note = std::move(note);
    return e;
}

inline Identity relative(Identity e) {
    e.relative = true;
    return e;
}

inline Identity series(std::string id, std::string ref, Tags tags, double tol, std::function<double()> l,
                       std::function<double()> r, std::string note = {}) {
    return numeric(Kind::series, std::move(id), std::move(ref), std::move(tags), tol, std::move(l),
                   std::move(r), std::move(note));
}

inline Identity integral(std::string id, std::string ref, Tags tags, double tol, std::function<double()> l,
                         std::function<double()> r, std::string note = {}) {
    return numeric(Kind::integral, std::move(id), std::move(ref), std::move(tags), tol, std::move(l),
                   std::move(r), std::move(note));
}

inline Identity product(std::string id, std::string ref, Tags tags, double tol, std::function<double()> l,
                        std::function<double()> r, std::string note = {}) {
    return numeric(Kind::product, std::move(id), std::move(ref), std::move(tags), tol, std::move(l),
                   std::move(r), std::move(note));
}

// Inequality over a finite family: lhs counts the strict cases, rhs is the family size.
template <class Pred>
Identity inequality(std::string id, std::string ref, Tags tags, std::vector<double> cases, Pred pred,
                    std::string note = {}) {
    auto held = [cases, pred]() {
        double n = 0;
        for (double c : cases)
            if (pred(c)) n += 1;
        return n;
    };
    const double total = static_cast<double>(cases.size());
    return numeric(Kind::inequality, std::move(id), std::move(ref), std::move(tags), 0.0, held,
                   [total] { return total; }, std::move(note));
}

inline double quad(const RealFn& f, double a = 0, double b = 1) { return integrate(f, a, b, 1e-11).value; }
inline double quad_inf(const RealFn& f, bool gaussian = false) {
    return integrate_semi_infinite(f, 1e-11, gaussian).value;
}

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

} // namespace zetakit::verify::detail
