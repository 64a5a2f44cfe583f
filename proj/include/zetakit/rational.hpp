#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace zetakit {

using Integer = boost::multiprecision::mpz_int;
// mpq_rational canonicalizes after every operation, so num/den are always coprime
// and den > 0.
using Rational = boost::multiprecision::mpq_rational;

// 50 significant digits; scratch type for sums that cancel badly in double.
using hp_float = boost::multiprecision::cpp_bin_float_50;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(Integer(num), Integer(den));
}

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Integer& z) { return z.convert_to<double>(); }

inline hp_float to_hp(const Rational& q) {
    return hp_float(num(q)) / hp_float(den(q));
}

inline std::string to_string(const Integer& z) { return z.str(); }

// Always "num/den", including den = 1.
inline std::string to_fraction_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

// "num/den", or just "num" for integers.
inline std::string to_string(const Rational& q) {
    if (den(q) == 1) return num(q).str();
    return to_fraction_string(q);
}

inline Rational rpow(const Rational& x, unsigned e) {
    Integer n = boost::multiprecision::pow(num(x), e);
    Integer d = boost::multiprecision::pow(den(x), e);
    return Rational(n, d);
}

// Parses "a", "a/b", or a plain decimal like "0.25" into an exact rational.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(Integer(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    Integer scale = boost::multiprecision::pow(Integer(10), unsigned(text.size() - dot - 1));
    return Rational(Integer(digits), scale);
}

} // namespace zetakit
