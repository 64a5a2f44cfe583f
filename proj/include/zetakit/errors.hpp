#pragma once

#include <stdexcept>
#include <string>

namespace zetakit {

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// s = 1 for zeta, integer x for the reflection product, ...
struct pole_error : domain_error {
    using domain_error::domain_error;
};

// Raised when an iterative method gives up; best_estimate holds the last value.
struct convergence_error : std::runtime_error {
    double best_estimate;
    double error_estimate;
    convergence_error(const std::string& what, double best, double err)
        : std::runtime_error(what), best_estimate(best), error_estimate(err) {}
};

struct usage_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Asymptotic bracket used outside the regime where it is valid.
struct regime_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct divergence_error : domain_error {
    using domain_error::domain_error;
};

struct unsupported_error : domain_error {
    using domain_error::domain_error;
};

} // namespace zetakit
