#include "hrlab/crosscheck3d.hpp"

#include "hrlab/constants.hpp"

#include <cmath>

namespace hrlab::crosscheck3d {

using profiles::Bump;
using profiles::eval_profile;
using profiles::PowerCutoff;
using quadrature::integrate_weighted;

double SphericalHarmonic3::value(double theta) const {
    return degree == 0 ? normalization : normalization * std::cos(theta);
}

double SphericalHarmonic3::dtheta(double theta) const {
    return degree == 0 ? 0.0 : -normalization * std::sin(theta);
}

double SphericalHarmonic3::ddtheta(double theta) const {
    return degree == 0 ? 0.0 : -normalization * std::cos(theta);
}

SphericalHarmonic3 SphericalHarmonic3::make(int degree) {
    if (degree != 0 && degree != 1)
        throw std::invalid_argument("SphericalHarmonic3: degree 0 or 1 only");
    const double norm =
        degree == 0 ? 1.0 / std::sqrt(4.0 * M_PI) : std::sqrt(3.0 / (4.0 * M_PI));
    return {degree, norm};
}

namespace {

// Laplace-Beltrami action on a zonal function from its analytic jet:
// (1/sin) d/dtheta (sin dphi/dtheta) = phi'' + cot(theta) phi'.
double sphere_laplacian(const SphericalHarmonic3& h, double theta) {
    return h.ddtheta(theta) + std::cos(theta) / std::sin(theta) * h.dtheta(theta);
}

// 2 pi int_0^pi f(theta) sin(theta) dtheta with one high-order rule; the
// integrands here are low-degree polynomials in cos(theta).
double sphere_integral(const std::function<double(double)>& f) {
    const auto& rule = quadrature::gauss_legendre(48);
    const double half = M_PI / 2.0;
    double acc = 0.0;
    for (std::size_t j = 0; j < rule.x.size(); ++j) {
        const double theta = half + half * rule.x[j];
        acc += rule.w[j] * f(theta) * std::sin(theta);
    }
    return 2.0 * M_PI * acc * half;
}

}  // namespace

double sphere_eigencheck(const SphericalHarmonic3& h) {
    const double ck =
        to_double(constants::eigenvalue_ck(Dimension(3), ModeIndex(h.degree)));
    double worst = 0.0;
    const int grid = 1024;
    for (int j = 0; j < grid; ++j) {
        const double theta = M_PI * (j + 0.5) / grid;
        const double residual = std::abs(sphere_laplacian(h, theta) + ck * h.value(theta));
        worst = std::max(worst, residual);
    }
    return worst;
}

double sphere_norm(const SphericalHarmonic3& h) {
    return sphere_integral([&](double theta) { const double v = h.value(theta); return v * v; });
}

double sphere_orthogonality() {
    const auto h0 = SphericalHarmonic3::make(0);
    const auto h1 = SphericalHarmonic3::make(1);
    return sphere_integral([&](double theta) { return h0.value(theta) * h1.value(theta); });
}

namespace {

DirectIntegrals numeric_part(const RadialProfile& p, const SphericalHarmonic3& h, double lo,
                             double hi, const QuadratureConfig& cfg) {
    // Outer adaptive quadrature in r; the inner theta integral is evaluated
    // pointwise under the square, with no algebraic mode reduction.
    const auto num_inner = [&](double r) {
        const auto j = eval_profile(p, r);
        return sphere_integral([&](double theta) {
            const double radial = j.ddu + 2.0 / r * j.du;
            const double term = radial * h.value(theta) + j.u / (r * r) * sphere_laplacian(h, theta);
            return term * term;
        });
    };
    const auto den_inner = [&](double r) {
        const auto j = eval_profile(p, r);
        return sphere_integral([&](double theta) {
            const double dphi = h.dtheta(theta);
            const double v = h.value(theta);
            return j.du * j.du * v * v + j.u * j.u * dphi * dphi / (r * r);
        });
    };
    const auto num = integrate_weighted(num_inner, 2.0, lo, hi, cfg);
    const auto den = integrate_weighted(den_inner, 0.0, lo, hi, cfg);
    return {num.value, den.value};
}

}  // namespace

DirectIntegrals direct_integrals_3d(const RadialProfile& p, const SphericalHarmonic3& h,
                                    const QuadratureConfig& cfg) {
    if (std::holds_alternative<Bump>(p.kind)) {
        const auto [lo, hi] = profiles::support(p);
        return numeric_part(p, h, lo, hi, cfg);
    }
    const auto* pc = std::get_if<PowerCutoff>(&p.kind);
    if (!pc) throw std::invalid_argument("direct_integrals_3d: Bump or PowerCutoff only");
    if (pc->dim.n != 3)
        throw std::invalid_argument("direct_integrals_3d: PowerCutoff profiles must be 3-d");
    // On (0,1] the profile is the pure power r^alpha, so the radial factor
    // of both integrands is an exact power integral; the sphere factor
    // stays numeric. alpha = 1/2 + eps in N = 3, so r^{2 alpha - 2} and
    // r^{2 alpha - 4 + 2} both integrate to 1/(2 eps) on (0,1].
    const double alpha = profiles::power_exponent(pc->dim, pc->eps);
    const double core_radial = 1.0 / (2.0 * pc->eps);
    const double c = alpha * (alpha + 1.0);
    const double core_num = core_radial * sphere_integral([&](double theta) {
        const double term = c * h.value(theta) + sphere_laplacian(h, theta);
        return term * term;
    });
    const double core_den =
        core_radial *
        (alpha * alpha * sphere_norm(h) + sphere_integral([&](double theta) {
             const double d = h.dtheta(theta);
             return d * d;
         }));
    const DirectIntegrals tail = numeric_part(p, h, 1.0, 2.0, cfg);
    return {core_num + tail.num, core_den + tail.den};
}

}  // namespace hrlab::crosscheck3d
