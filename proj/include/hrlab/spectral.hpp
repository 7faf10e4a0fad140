#pragma once

#include "hrlab/constants.hpp"
#include "hrlab/log_grid.hpp"
#include "hrlab/parallel.hpp"
#include "hrlab/profiles.hpp"

#include <utility>
#include <vector>

// Variational estimation of the per-mode sharp constants: finite
// differences on a log grid turn the per-mode quotient into a banded
// symmetric generalized eigenvalue problem; an independent oracle obtains
// the same constants by minimizing the rational symbol produced by testing
// the forms on r^{sigma + i xi}, sigma = -(N-4)/2.

namespace hrlab::spectral {

// Symmetric banded quadratic form, bandwidth <= 2.
struct QuadraticForm {
    explicit QuadraticForm(int order_)
        : order(order_), diag(order_, 0.0), off1(order_ > 0 ? order_ - 1 : 0, 0.0),
          off2(order_ > 1 ? order_ - 2 : 0, 0.0) {}

    int order;
    int bandwidth = 2;
    std::vector<double> diag;  // (i, i)
    std::vector<double> off1;  // (i, i+1)
    std::vector<double> off2;  // (i, i+2)

    void apply(const std::vector<double>& v, std::vector<double>& out) const;
    double quad(const std::vector<double>& v) const;  // v^T F v
};

// Discrete numerator/denominator forms for mode k on the grid, with value
// and discrete slope clamped to zero at both ends (the two outermost nodes
// on each side carry no unknowns). Central differences in t = ln r:
// u' = e^{-t} v_t, u'' = e^{-2t}(v_tt - v_t); integrals are node sums with
// weight r dt.
std::pair<QuadraticForm, QuadraticForm> assemble_forms(Dimension dim, ModeIndex mode,
                                                       const LogGrid& grid);

struct EigenResult {
    double lambda;
    double residual;  // ||P v - lambda Q v|| / ||Q v||
    std::vector<double> v;
    int iterations;
};

// Smallest lambda with P v = lambda Q v: shifted inverse iteration on the
// diagonally equilibrated pencil, banded LDL^T factorization, shifts
// safeguarded below lambda (a failed factorization backs the shift off
// toward the last positive-definite one). Throws SolverFailure on
// factorization breakdown at zero shift or non-convergence.
EigenResult smallest_generalized_eigenvalue(const QuadraticForm& P, const QuadraticForm& Q,
                                            double tol);

// Discrete per-mode constant; an upper estimate of the continuum per-mode
// infimum up to discretization error.
double per_mode_constant(Dimension dim, ModeIndex mode, const LogGrid& grid);

struct ModeScanResult {
    std::vector<double> lambda;  // index k
    int argmin_mode;             // ties broken toward smaller k
    LogGrid grid;
};

// Per-mode constants for k = 0..kmax: independent solves, run through the
// parallel kernel and merged in mode order.
ModeScanResult scan_modes(Dimension dim, int kmax, const LogGrid& grid,
                          Exec exec = Exec::parallel);

// Rational symbol S_k(xi) of the per-mode quotient on r^{sigma+i xi}:
//   S_k = [(s2)((sigma-1)^2+xi^2) + (N-1+2c_k) s2 + c_k^2 + 2c_k(N-4)] / (s2 + c_k),
// s2 = sigma^2 + xi^2. Rejects the degenerate (N,k,xi) = (4,0,0).
double symbol_value(Dimension dim, ModeIndex mode, double xi);

// Same in exact rational arithmetic (for identity checks at rational xi).
Rational symbol_value_exact(Dimension dim, ModeIndex mode, const Rational& xi);

// min over real xi of S_k(xi) by golden-section search on s = xi^2, with
// the bracket grown until the symbol increases. Tolerance 1e-12 in s.
double symbol_min(Dimension dim, ModeIndex mode);

// min over k <= kmax of symbol_min; kmax >= 10 (S_k grows with c_k).
double global_constant_estimate(Dimension dim, int kmax);

// argmin over k <= kmax of symbol_min, ties toward smaller k.
int symbol_argmin_mode(Dimension dim, int kmax);

// Ground eigenvector of mode k embedded as a grid-sampled radial profile
// (zeros at the boundary nodes); diagnostics.
profiles::RadialProfile ground_profile(Dimension dim, ModeIndex mode, const LogGrid& grid);

}  // namespace hrlab::spectral
