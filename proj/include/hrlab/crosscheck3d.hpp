#pragma once

#include "hrlab/profiles.hpp"
#include "hrlab/quadrature.hpp"

// Independent validation of the spherical decomposition in N = 3: explicit
// zonal harmonics of degree 0 and 1, and direct two-dimensional (r, theta)
// quadrature of int |Delta u|^2 and int |grad u|^2/|x|^2 for u = u_k(r)
// phi_k(theta), to be compared against the one-dimensional mode formulas.

namespace hrlab::crosscheck3d {

using profiles::RadialProfile;
using quadrature::QuadratureConfig;

// Unit-L2 zonal harmonic on S^2: (4 pi)^{-1/2} for degree 0,
// sqrt(3/(4 pi)) cos(theta) for degree 1.
struct SphericalHarmonic3 {
    int degree;
    double normalization;

    double value(double theta) const;
    double dtheta(double theta) const;
    double ddtheta(double theta) const;

    static SphericalHarmonic3 make(int degree);  // degree in {0,1}
};

// max over a theta grid of |(1/sin) d/dtheta(sin dphi/dtheta) + c_k phi|,
// the sphere Laplacian assembled from the analytic derivatives.
double sphere_eigencheck(const SphericalHarmonic3& h);

// int_{S^2} phi^2 dsigma by quadrature (should be 1).
double sphere_norm(const SphericalHarmonic3& h);

// int_{S^2} phi_0 phi_1 dsigma by quadrature (should vanish).
double sphere_orthogonality();

struct DirectIntegrals {
    double num;  // int |Delta u|^2 dx
    double den;  // int |grad u|^2 / |x|^2 dx
};

// Direct quadrature of both integrals with the sphere Laplacian evaluated
// from the harmonic's derivatives, not from the eigenvalue shortcut. The
// r panels run through the parallel kernel.
DirectIntegrals direct_integrals_3d(const RadialProfile& p, const SphericalHarmonic3& h,
                                    const QuadratureConfig& cfg = {});

}  // namespace hrlab::crosscheck3d
