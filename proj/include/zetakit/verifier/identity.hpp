#pragma once

#include "../errors.hpp"
#include "../rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace zetakit::verify {

enum class Kind { exact_rational, series, integral, limit, inequality, product };

inline const char* to_string(Kind k) {
    switch (k) {
    case Kind::exact_rational: return "exact_rational";
    case Kind::series: return "series";
    case Kind::integral: return "integral";
    case Kind::limit: return "limit";
    case Kind::inequality: return "inequality";
    case Kind::product: return "product";
    }
    return "?";
}

struct Identity {
    std::string id;
    std::string paper_ref;
    Kind kind = Kind::series;
    double tol = 0;          // ignored for exact_rational
    bool relative = false;   // compare against tol * max(1, |rhs|)
    std::vector<std::string> tags;
    std::string note;

    // exact_rational entries use the Rational pair, everything else the doubles
    std::function<Rational()> exact_lhs, exact_rhs;
    std::function<double()> lhs, rhs;

    bool exact() const { return kind == Kind::exact_rational; }
    bool has_tag(const std::string& t) const {
        for (const auto& s : tags)
            if (s == t) return true;
        return false;
    }
};

struct Result {
    std::string id;
    std::string paper_ref;
    Kind kind = Kind::series;
    bool exact = false;
    double lhs = 0, rhs = 0;
    std::string lhs_exact, rhs_exact;  // "num/den" for exact entries
    double abs_err = 0, rel_err = 0, tol = 0;
    bool pass = false;
    std::string note;
    double seconds = 0;
};

struct Summary {
    int total = 0, passed = 0, failed = 0;
};

struct Report {
    std::vector<Result> results;
    Summary summary;
};

struct Filter {
    std::vector<std::string> ids;
    std::vector<std::string> tags;
    bool empty() const { return ids.empty() && tags.empty(); }
};

} // namespace zetakit::verify
