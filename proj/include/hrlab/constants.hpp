#pragma once

#include "hrlab/types.hpp"

// Closed-form constant calculus for the Hardy-Rellich inequality
//
//     int |Delta u|^2 dx  >=  C(N) int |grad u|^2 / |x|^2 dx,   N >= 3,
//
// evaluated in exact rational arithmetic. Floating point enters only at
// module boundaries (callers convert with to_double).

namespace hrlab::constants {

// Laplace-Beltrami eigenvalue c_k = k(k+N-2) of degree-k spherical harmonics.
Rational eigenvalue_ck(Dimension dim, ModeIndex mode);

// Sharp constant C(N): 25/36 for N=3, 3 for N=4, N^2/4 for N>=5.
Rational sharp_constant(Dimension dim);

// Spherical-part lower bound g(N,k) = (N-4)^2/2 + c_k + 2(N-4).
Rational g_lower(Dimension dim, ModeIndex mode);

// Epsilon-balanced spherical bound h(eps,k) = (2+eps/c_k)(N-4)^2/4 + c_k + 2(N-4).
// Requires k >= 1 (divides by c_k).
Rational h_lower(Dimension dim, const Rational& eps, ModeIndex mode);

// The balancing value eps(N) = (N-1)(-N^2+4N+4)/(N^2-4N+12), defined for
// N in {3,4}; satisfies N^2/4 - eps(N) = C(N).
Rational eps_star(Dimension dim);

// min{N^2/4, (N^2-2N-2)/2}, the constant of the unbalanced split.
Rational min_split(Dimension dim);

// Limit of the minimizing-sequence quotient in mode k:
//   Q(N,k) = [s^2 t^2 + (N-1+2 c_k) s^2 + c_k^2 + 2(N-4) c_k] / (s^2 + c_k),
// with s = (N-4)/2, t = (N-2)/2. Rejects (N,k) = (4,0) where it is 0/0.
Rational mode_limit_quotient(Dimension dim, ModeIndex mode);

// Leading-order quotient of the minimizing family at finite eps:
// same fraction with a = -(N-4)/2 + eps and b = -(N-2)/2 + eps in place of
// the eps->0 exponents (cutoff-dependent O(eps) remainders dropped).
Rational asymptotic_quotient(Dimension dim, ModeIndex mode, const Rational& eps);

}  // namespace hrlab::constants
