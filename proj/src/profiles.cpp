#include "hrlab/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hrlab::profiles {

namespace {

// exp(-1/s) and its first two derivatives for s > 0. Below s = 1e-3 the
// value underflows double precision entirely, so the jet is exactly zero.
struct Flat {
    double h, dh, ddh;
};

Flat flat_exp(double s) {
    if (s < 1e-3) return {0.0, 0.0, 0.0};
    const double h = std::exp(-1.0 / s);
    const double s2 = s * s;
    const double dh = h / s2;
    const double ddh = h * (1.0 / (s2 * s2) - 2.0 / (s2 * s));
    return {h, dh, ddh};
}

}  // namespace

CutoffJet eval_cutoff(double r) {
    r = std::abs(r);
    if (r <= 1.0) return {1.0, 0.0, 0.0};
    if (r >= 2.0) return {0.0, 0.0, 0.0};
    // g = A/(A+B), A = h(2-r) decaying into the right seam, B = h(r-1).
    const Flat fa = flat_exp(2.0 - r);
    const Flat fb = flat_exp(r - 1.0);
    const double A = fa.h, dA = -fa.dh, ddA = fa.ddh;
    const double B = fb.h, dB = fb.dh, ddB = fb.ddh;
    const double S = A + B;
    const double dS = dA + dB;
    const double W = dA * B - A * dB;
    const double dW = ddA * B - A * ddB;
    const double g = A / S;
    const double dg = W / (S * S);
    const double ddg = (dW * S - 2.0 * W * dS) / (S * S * S);
    return {g, dg, ddg};
}

double power_exponent(Dimension dim, double eps) { return -(dim.n - 4) / 2.0 + eps; }

RadialProfile RadialProfile::power_cutoff(Dimension dim, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("PowerCutoff: eps > 0 required");
    return {PowerCutoff{dim, eps}};
}

RadialProfile RadialProfile::bump(double a, double b) {
    Bump spec;
    spec.a = a;
    spec.b = b;
    return bump(spec);
}

RadialProfile RadialProfile::bump(const Bump& spec) {
    if (!(0.0 < spec.a && spec.a < spec.b))
        throw std::invalid_argument("Bump: 0 < a < b required");
    if (!(spec.arg_scale > 0.0)) throw std::invalid_argument("Bump: arg_scale > 0 required");
    return {spec};
}

RadialProfile RadialProfile::grid_sampled(const LogGrid& grid, std::vector<double> values) {
    if (static_cast<int>(values.size()) != grid.m)
        throw std::invalid_argument("GridSampled: one value per grid node required");
    return {GridSampled{grid, std::move(values)}};
}

namespace {

ProfileJet eval_power_cutoff(const PowerCutoff& p, double r) {
    if (r >= 2.0) return {0.0, 0.0, 0.0};
    const double alpha = power_exponent(p.dim, p.eps);
    const double ra = std::pow(r, alpha);
    const double u_pow = ra;
    const double du_pow = alpha * ra / r;
    const double ddu_pow = alpha * (alpha - 1.0) * ra / (r * r);
    if (r <= 1.0) return {u_pow, du_pow, ddu_pow};
    const CutoffJet c = eval_cutoff(r);
    return {u_pow * c.g,
            du_pow * c.g + u_pow * c.dg,
            ddu_pow * c.g + 2.0 * du_pow * c.dg + u_pow * c.ddg};
}

ProfileJet eval_bump_base(const Bump& p, double x) {
    if (x <= p.a || x >= p.b) return {0.0, 0.0, 0.0};
    // q = (x-a)(b-x) > 0 inside; psi = exp(-1/q).
    const double q = (x - p.a) * (p.b - x);
    if (q < 1e-3) return {0.0, 0.0, 0.0};
    const double dq = (p.a + p.b) - 2.0 * x;
    const double ddq = -2.0;
    const double psi = std::exp(-1.0 / q);
    const double q2 = q * q;
    const double dpsi = psi * dq / q2;
    const double ddpsi = psi * ((dq * dq) / (q2 * q2) + ddq / q2 - 2.0 * dq * dq / (q2 * q));
    // polynomial modulation in y = affine(x) in [-1,1]
    const double sy = 2.0 / (p.b - p.a);
    const double y = (2.0 * x - (p.a + p.b)) / (p.b - p.a);
    const auto& s = p.shape;
    const double P = s[0] + y * (s[1] + y * (s[2] + y * s[3]));
    const double dP = (s[1] + y * (2.0 * s[2] + y * 3.0 * s[3])) * sy;
    const double ddP = (2.0 * s[2] + y * 6.0 * s[3]) * sy * sy;
    return {psi * P, dpsi * P + psi * dP, ddpsi * P + 2.0 * dpsi * dP + psi * ddP};
}

ProfileJet eval_bump(const Bump& p, double r) {
    const double x = p.arg_scale * r;
    const ProfileJet base = eval_bump_base(p, x);
    const double c = p.arg_scale;
    return {p.amplitude * base.u, p.amplitude * c * base.du, p.amplitude * c * c * base.ddu};
}

// Second-order differences of the node values in t = ln r, one-sided at
// the ends, then chain rule u' = e^{-t} u_t, u'' = e^{-2t}(u_tt - u_t).
// Evaluation between nodes interpolates the jet linearly.
ProfileJet eval_grid_sampled(const GridSampled& p, double r) {
    const LogGrid& g = p.grid;
    const double h = g.dt();
    const int m = g.m;
    const auto& v = p.values;
    auto node_jet = [&](int i) -> ProfileJet {
        double ut, utt;
        if (i == 0) {
            ut = (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
            utt = (2.0 * v[0] - 5.0 * v[1] + 4.0 * v[2] - v[3]) / (h * h);
        } else if (i == m - 1) {
            ut = (3.0 * v[m - 1] - 4.0 * v[m - 2] + v[m - 3]) / (2.0 * h);
            utt = (2.0 * v[m - 1] - 5.0 * v[m - 2] + 4.0 * v[m - 3] - v[m - 4]) / (h * h);
        } else {
            ut = (v[i + 1] - v[i - 1]) / (2.0 * h);
            utt = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
        }
        const double et = std::exp(-g.t(i));
        return {v[i], et * ut, et * et * (utt - ut)};
    };
    const double t = std::log(r);
    if (t < g.t_min || t > g.t_max) return {0.0, 0.0, 0.0};
    const double s = (t - g.t_min) / h;
    const int i = std::min(static_cast<int>(s), m - 2);
    const double w = s - i;
    const ProfileJet a = node_jet(i);
    const ProfileJet b = node_jet(i + 1);
    return {(1 - w) * a.u + w * b.u, (1 - w) * a.du + w * b.du, (1 - w) * a.ddu + w * b.ddu};
}

}  // namespace

ProfileJet eval_profile(const RadialProfile& p, double r) {
    if (!(r > 0.0)) throw std::invalid_argument("eval_profile: r > 0 required");
    return std::visit(
        [r](const auto& kind) -> ProfileJet {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, PowerCutoff>) return eval_power_cutoff(kind, r);
            else if constexpr (std::is_same_v<T, Bump>) return eval_bump(kind, r);
            else return eval_grid_sampled(kind, r);
        },
        p.kind);
}

std::pair<double, double> support(const RadialProfile& p) {
    return std::visit(
        [](const auto& kind) -> std::pair<double, double> {
            using T = std::decay_t<decltype(kind)>;
            if constexpr (std::is_same_v<T, PowerCutoff>) return {0.0, 2.0};
            else if constexpr (std::is_same_v<T, Bump>)
                return {kind.a / kind.arg_scale, kind.b / kind.arg_scale};
            else return {std::exp(kind.grid.t_min), std::exp(kind.grid.t_max)};
        },
        p.kind);
}

RadialProfile scaled(const RadialProfile& p, double amplitude) {
    const Bump* b = std::get_if<Bump>(&p.kind);
    if (!b) throw std::invalid_argument("scaled: Bump profiles only");
    Bump out = *b;
    out.amplitude *= amplitude;
    return RadialProfile::bump(out);
}

RadialProfile dilated(const RadialProfile& p, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("dilated: lambda > 0 required");
    const Bump* b = std::get_if<Bump>(&p.kind);
    if (!b) throw std::invalid_argument("dilated: Bump profiles only");
    Bump out = *b;
    out.arg_scale *= lambda;
    return RadialProfile::bump(out);
}

Bump random_bump(std::uint64_t seed, std::uint64_t trial) {
    // Stream i of the generator: mt19937_64 seeded with seed mixed with the
    // trial index by the splitmix64 increment. Uniform doubles take the top
    // 53 bits, so the stream does not depend on the standard library's
    // distribution internals.
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * (trial + 1));
    auto uniform = [&rng](double lo, double hi) {
        const double u01 = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u01;
    };
    Bump bump;
    bump.a = uniform(0.1, 4.0);
    const double width = uniform(0.5, std::min(6.0, 10.0 - bump.a));
    bump.b = bump.a + width;
    bump.shape[0] = uniform(0.5, 2.0);
    bump.shape[1] = uniform(-1.0, 1.0);
    bump.shape[2] = uniform(-1.0, 1.0);
    bump.shape[3] = uniform(-1.0, 1.0);
    return bump;
}

}  // namespace hrlab::profiles
