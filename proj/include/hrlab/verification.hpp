#pragma once

#include "hrlab/functionals.hpp"
#include "hrlab/parallel.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Randomized property suite over bump profiles: inequality margins with
// strict positivity of the sharp-constant margin, the factored-square
// identity, and dilation/amplitude invariance of the mode quotients.

namespace hrlab::verification {

struct SuiteConfig {
    std::vector<int> dims{3, 4, 5, 6};
    int trials = 100;
    int kmax = 5;
    std::uint64_t seed = 1;
    double margin_tol = 1e-9;       // margins >= -margin_tol * scale
    double identity_tol = 1e-8;     // residual <= identity_tol * A
    double invariance_tol = 1e-10;  // quotient drift under dilation/amplitude
    Exec exec = Exec::parallel;
};

struct Issue {
    int dim;
    std::uint64_t trial;
    std::string what;
};

struct DimSummary {
    int dim = 0;
    int trials = 0;
    // margins scaled by max(|numerator|, C(N) denominator) etc.; minima over
    // all trials and modes
    double min_m1_scaled = 0.0;
    double min_m2_scaled = 0.0;
    double min_m3_scaled = 0.0;
    double min_m4_scaled = 0.0;
    double max_identity_rel = 0.0;
    double max_dilation_dev = 0.0;
    double max_amplitude_dev = 0.0;
    int violations = 0;
};

struct SuiteResult {
    std::vector<DimSummary> dims;
    std::vector<Issue> issues;
    bool ok = false;
};

SuiteResult run_property_suite(const SuiteConfig& cfg);

}  // namespace hrlab::verification
