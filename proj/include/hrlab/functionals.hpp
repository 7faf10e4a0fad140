#pragma once

#include "hrlab/constants.hpp"
#include "hrlab/profiles.hpp"
#include "hrlab/quadrature.hpp"

#include <vector>

// Per-mode weighted integrals and the quotient of the Hardy-Rellich
// quadratic forms. For a single spherical-harmonic mode k with radial
// factor u,
//   numerator   = A + (N-1+2c_k) B + (c_k^2 + 2c_k(N-4)) D
//   denominator = B + c_k D
// with A = int r^{N-1} u''^2, B = int r^{N-3} u'^2, D = int r^{N-5} u^2.

namespace hrlab::functionals {

using profiles::RadialProfile;
using quadrature::QuadratureConfig;

struct ModeIntegrals {
    double A, B, D;
    double err;  // aggregated quadrature error estimate
};

struct QuotientReport {
    int n;
    int k;
    double numerator;
    double denominator;
    double quotient;
    // Proof-chain margins, all nonnegative for admissible profiles:
    //   m1 = A - ((N-2)^2/4) B          radial Hardy step
    //   m2 = B - ((N-4)^2/4) D          weighted Hardy step
    //   m3 = numerator - C(N) denominator
    //   m4 = numerator - min{N^2/4,(N^2-2N-2)/2} denominator
    double m1, m2, m3, m4;
    double err;
};

// A, B, D for the profile: analytic singular core plus numeric [1,2] tail
// for PowerCutoff, fully numeric for Bump. GridSampled profiles are not
// admissible here.
ModeIntegrals mode_integrals(const RadialProfile& p, Dimension dim,
                             const QuadratureConfig& cfg = {});

double mode_numerator(Dimension dim, ModeIndex mode, const ModeIntegrals& mi);
double mode_denominator(Dimension dim, ModeIndex mode, const ModeIntegrals& mi);

// Quotient and margins for one (N, k, profile). Throws DegenerateProfile
// when the denominator form vanishes.
QuotientReport mode_quotient(Dimension dim, ModeIndex mode, const RadialProfile& p,
                             const QuadratureConfig& cfg = {});

struct InequalityReport {
    double m1, m2;
    double identity_residual;  // |A - ((N-2)^2/4)B - int |(r^{(N-2)/2}u')'|^2 r dr|
    ModeIntegrals integrals;
};

// 1-d inequality margins plus the factored-square identity residual,
// computed by an independent quadrature pass. Bump profiles only: the
// integration-by-parts boundary terms must vanish at both ends.
InequalityReport check_inequalities(const RadialProfile& p, Dimension dim,
                                    const QuadratureConfig& cfg = {});

// Mode of the minimizing family: k = 1 in dimensions 3 and 4, k = 0 above.
ModeIndex minseq_mode(Dimension dim);

// Quotient of u_eps = r^{-(N-4)/2+eps} g(r) (times a degree-1 harmonic in
// dimensions 3 and 4) in the dimension-determined mode.
QuotientReport quotient_ueps(Dimension dim, double eps, const QuadratureConfig& cfg = {});

struct SequenceLimit {
    double extrapolated;       // Richardson-table value at eps = 0
    double last_raw;           // quotient at the smallest eps
    std::vector<double> raw;   // quotient per eps, input order
};

// Quotients along a decreasing eps list plus the Richardson extrapolation
// to eps = 0 (linear leading order; two points give the plain linear rule).
SequenceLimit sequence_limit(Dimension dim, const std::vector<double>& eps_list,
                             const QuadratureConfig& cfg = {});

}  // namespace hrlab::functionals
