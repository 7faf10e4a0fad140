#pragma once

#include <boost/rational.hpp>

#include <stdexcept>
#include <string>

namespace hrlab {

// Exact arithmetic for the constant calculus. All closed-form constants in
// this project are small rationals, so a machine-word numerator/denominator
// is plenty; boost::rational keeps values normalized (lowest terms,
// positive denominator).
using Rational = boost::rational<long long>;

inline double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

inline std::string to_string(const Rational& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

// Space dimension N >= 3.
struct Dimension {
    explicit Dimension(int n_) : n(n_) {
        if (n < 3) throw std::domain_error("Dimension: N >= 3 required, got " + std::to_string(n));
    }
    int n;
};

// Spherical-harmonic degree k >= 0.
struct ModeIndex {
    explicit ModeIndex(int k_) : k(k_) {
        if (k < 0) throw std::domain_error("ModeIndex: k >= 0 required, got " + std::to_string(k));
    }
    int k;
};

// Adaptive quadrature did not reach the requested tolerance.
struct NumericalFailure : std::runtime_error {
    NumericalFailure(const std::string& what, double last, double previous)
        : std::runtime_error(what), last_value(last), previous_value(previous) {}
    double last_value;
    double previous_value;
};

// Eigensolver breakdown (factorization failure or non-convergence).
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Profile with vanishing denominator form.
struct DegenerateProfile : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hrlab
