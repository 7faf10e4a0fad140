#pragma once

#include "hrlab/log_grid.hpp"
#include "hrlab/types.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

// Radial profile representations with exact first and second derivatives:
// the smooth cutoff g, the minimizing family r^alpha g(r), and smooth bump
// test functions supported away from the origin.

namespace hrlab::profiles {

struct CutoffJet {
    double g, dg, ddg;
};

// Smooth cutoff: g = 1 on [0,1], g = 0 on [2,inf), and on (1,2) the bump
// ratio h(2-r)/(h(2-r)+h(r-1)) with h(s) = exp(-1/s). Values in [0,1],
// nonincreasing on [1,2].
CutoffJet eval_cutoff(double r);

struct ProfileJet {
    double u, du, ddu;
};

// alpha = -(N-4)/2 + eps, the exponent of the minimizing family.
double power_exponent(Dimension dim, double eps);

// u(r) = r^alpha g(r); equals the pure power on (0,1], vanishes beyond 2.
struct PowerCutoff {
    Dimension dim;
    double eps;  // > 0
};

// Compactly supported C-infinity bump on [a,b], 0 < a < b:
//   base(x) = exp(-1/((x-a)(b-x))) * (s0 + s1 y + s2 y^2 + s3 y^3),
// y the affine map of [a,b] onto [-1,1]. The evaluated profile is
// amplitude * base(arg_scale * r), so dilations u(lambda r) stay in the
// class exactly.
struct Bump {
    double a = 1.0;
    double b = 2.0;
    std::array<double, 4> shape{{1.0, 0.0, 0.0, 0.0}};
    double amplitude = 1.0;
    double arg_scale = 1.0;
};

// Grid samples with finite-difference jets; diagnostics only.
struct GridSampled {
    LogGrid grid;
    std::vector<double> values;  // one per grid node
};

using ProfileKind = std::variant<PowerCutoff, Bump, GridSampled>;

struct RadialProfile {
    ProfileKind kind;

    static RadialProfile power_cutoff(Dimension dim, double eps);
    static RadialProfile bump(double a, double b);
    static RadialProfile bump(const Bump& spec);
    static RadialProfile grid_sampled(const LogGrid& grid, std::vector<double> values);
};

// Exact analytic jet for PowerCutoff and Bump, finite differences for
// GridSampled. Throws std::invalid_argument for r <= 0.
ProfileJet eval_profile(const RadialProfile& p, double r);

// Smallest closed interval outside which the profile vanishes.
std::pair<double, double> support(const RadialProfile& p);

// u -> amplitude * u. Bump kind only.
RadialProfile scaled(const RadialProfile& p, double amplitude);

// u -> u(lambda r). Bump kind only.
RadialProfile dilated(const RadialProfile& p, double lambda);

// Deterministic random bump generator, version 1: support [a,b] inside
// [0.1, 10] and four shape coefficients drawn from seed/trial via
// mt19937_64 with an explicit bits-to-double map (no library
// distributions, so streams are reproducible across platforms).
Bump random_bump(std::uint64_t seed, std::uint64_t trial);

inline constexpr int random_bump_generator_version = 1;

}  // namespace hrlab::profiles
