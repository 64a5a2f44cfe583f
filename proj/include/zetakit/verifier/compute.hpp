#pragma once

// Name-based dispatch behind the `compute` subcommand.

#include "../zetakit.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace zetakit::verify {

using ComputeValue = std::variant<double, Rational>;

namespace detail {

inline double parse_real(const std::string& s) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw usage_error("not a number: '" + s + "'");
    }
    if (pos != s.size()) throw usage_error("not a number: '" + s + "'");
    return v;
}

inline long parse_int(const std::string& s) {
    std::size_t pos = 0;
    long v;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw usage_error("not an integer: '" + s + "'");
    }
    if (pos != s.size()) throw usage_error("not an integer: '" + s + "'");
    return v;
}

inline unsigned parse_count(const std::string& s) {
    long v = parse_int(s);
    if (v < 0) throw usage_error("expected a nonnegative integer: '" + s + "'");
    return static_cast<unsigned>(v);
}

inline Rational parse_exact(const std::string& s) {
    try {
        return parse_rational(s);
    } catch (const std::exception&) {
        throw usage_error("not a rational: '" + s + "'");
    }
}

struct ComputeFn {
    std::size_t min_args, max_args;
    const char* usage;
    std::function<ComputeValue(const std::vector<std::string>&)> fn;
};

inline const std::map<std::string, ComputeFn>& compute_table() {
    using A = std::vector<std::string>;
    static const std::map<std::string, ComputeFn> t = {
        {"zeta", {1, 1, "zeta S", [](const A& a) -> ComputeValue { return zeta(parse_real(a[0])); }}},
        {"eta", {1, 1, "eta S", [](const A& a) -> ComputeValue { return eta(parse_real(a[0])); }}},
        {"hurwitz", {2, 2, "hurwitz S A",
                     [](const A& a) -> ComputeValue { return hurwitz_zeta(parse_real(a[0]), parse_real(a[1])); }}},
        {"beta", {1, 1, "beta S", [](const A& a) -> ComputeValue { return dirichlet_beta(parse_real(a[0])); }}},
        {"polylog", {2, 2, "polylog N X",
                     [](const A& a) -> ComputeValue {
                         return polylog(static_cast<int>(parse_int(a[0])), parse_real(a[1]));
                     }}},
        {"gamma", {1, 1, "gamma X", [](const A& a) -> ComputeValue { return gamma_function(parse_real(a[0])); }}},
        {"loggamma", {1, 1, "loggamma X", [](const A& a) -> ComputeValue { return log_gamma(parse_real(a[0])); }}},
        {"digamma", {1, 1, "digamma X", [](const A& a) -> ComputeValue { return digamma(parse_real(a[0])); }}},
        {"polygamma", {2, 2, "polygamma N X",
                       [](const A& a) -> ComputeValue {
                           return polygamma(static_cast<int>(parse_int(a[0])), parse_real(a[1]));
                       }}},
        {"bernoulli", {1, 1, "bernoulli N",
                       [](const A& a) -> ComputeValue { return bernoulli(parse_count(a[0])); }}},
        {"bernoulli-poly", {2, 2, "bernoulli-poly N X",
                            [](const A& a) -> ComputeValue {
                                return bernoulli_poly(parse_count(a[0]), parse_exact(a[1]));
                            }}},
        {"stirling1", {2, 2, "stirling1 N K",
                       [](const A& a) -> ComputeValue {
                           return Rational(stirling1(parse_count(a[0]), parse_count(a[1])));
                       }}},
        {"stirling2", {2, 2, "stirling2 N K",
                       [](const A& a) -> ComputeValue {
                           return Rational(stirling2(parse_count(a[0]), parse_count(a[1])));
                       }}},
        {"euler-number", {1, 1, "euler-number N",
                          [](const A& a) -> ComputeValue { return Rational(euler_number(parse_count(a[0]))); }}},
        {"harmonic", {1, 2, "harmonic N [P]",
                      [](const A& a) -> ComputeValue {
                          unsigned p = a.size() > 1 ? parse_count(a[1]) : 1;
                          return harmonic(parse_count(a[0]), p);
                      }}},
        {"euler-gamma", {0, 0, "euler-gamma", [](const A&) -> ComputeValue { return euler_gamma(); }}},
        {"glaisher-A", {0, 0, "glaisher-A", [](const A&) -> ComputeValue { return std::exp(glaisher_log_A()); }}},
        {"catalan", {0, 0, "catalan", [](const A&) -> ComputeValue { return catalan_G(); }}},
        {"gen-euler-const", {1, 1, "gen-euler-const X",
                             [](const A& a) -> ComputeValue { return gen_euler_const(parse_real(a[0])); }}},
    };
    return t;
}

} // namespace detail

inline std::vector<std::string> compute_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : detail::compute_table()) out.push_back(name);
    return out;
}

// Throws usage_error for an unknown name, wrong arity or unparsable argument;
// domain errors from the library propagate unchanged.
inline ComputeValue compute(const std::string& name, const std::vector<std::string>& args) {
    const auto& t = detail::compute_table();
    auto it = t.find(name);
    if (it == t.end()) throw usage_error("unknown function: " + name);
    const auto& f = it->second;
    if (args.size() < f.min_args || args.size() > f.max_args)
        throw usage_error(std::string("usage: compute ") + f.usage);
    return f.fn(args);
}

// 15 significant digits for reals, num/den for rationals.
inline std::string format_value(const ComputeValue& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return zetakit::to_string(*q);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", std::get<double>(v));
    return buf;
}

} // namespace zetakit::verify
