#include "hrlab/functionals.hpp"

#include <cmath>

namespace hrlab::functionals {

using profiles::Bump;
using profiles::eval_profile;
using profiles::GridSampled;
using profiles::PowerCutoff;
using quadrature::analytic_core_integrals;
using quadrature::integrate_weighted;
using quadrature::IntegralValue;

namespace {

ModeIntegrals numeric_integrals(const RadialProfile& p, Dimension dim, double lo, double hi,
                                const QuadratureConfig& cfg) {
    const double n = dim.n;
    const IntegralValue a = integrate_weighted(
        [&](double r) { const auto j = eval_profile(p, r); return j.ddu * j.ddu; }, n - 1, lo, hi,
        cfg);
    const IntegralValue b = integrate_weighted(
        [&](double r) { const auto j = eval_profile(p, r); return j.du * j.du; }, n - 3, lo, hi,
        cfg);
    const IntegralValue d = integrate_weighted(
        [&](double r) { const auto j = eval_profile(p, r); return j.u * j.u; }, n - 5, lo, hi,
        cfg);
    return {a.value, b.value, d.value, a.abs_error_estimate + b.abs_error_estimate + d.abs_error_estimate};
}

}  // namespace

ModeIntegrals mode_integrals(const RadialProfile& p, Dimension dim, const QuadratureConfig& cfg) {
    if (const auto* pc = std::get_if<PowerCutoff>(&p.kind)) {
        if (pc->dim.n != dim.n)
            throw std::invalid_argument("mode_integrals: profile dimension mismatch");
        // Exact on [0,1] where the cutoff is 1, numeric across the cutoff ramp.
        const auto core = analytic_core_integrals(dim, pc->eps);
        const ModeIntegrals tail = numeric_integrals(p, dim, 1.0, 2.0, cfg);
        return {core.A0 + tail.A, core.B0 + tail.B, core.D0 + tail.D, tail.err};
    }
    if (std::get_if<Bump>(&p.kind)) {
        const auto [lo, hi] = profiles::support(p);
        return numeric_integrals(p, dim, lo, hi, cfg);
    }
    throw std::invalid_argument("mode_integrals: PowerCutoff or Bump profiles only");
}

double mode_numerator(Dimension dim, ModeIndex mode, const ModeIntegrals& mi) {
    const double ck = to_double(constants::eigenvalue_ck(dim, mode));
    return mi.A + (dim.n - 1 + 2.0 * ck) * mi.B + (ck * ck + 2.0 * ck * (dim.n - 4)) * mi.D;
}

double mode_denominator(Dimension dim, ModeIndex mode, const ModeIntegrals& mi) {
    const double ck = to_double(constants::eigenvalue_ck(dim, mode));
    return mi.B + ck * mi.D;
}

QuotientReport mode_quotient(Dimension dim, ModeIndex mode, const RadialProfile& p,
                             const QuadratureConfig& cfg) {
    const ModeIntegrals mi = mode_integrals(p, dim, cfg);
    const double num = mode_numerator(dim, mode, mi);
    const double den = mode_denominator(dim, mode, mi);
    if (!(den > 0.0)) throw DegenerateProfile("mode_quotient: denominator form vanishes");
    QuotientReport rep;
    rep.n = dim.n;
    rep.k = mode.k;
    rep.numerator = num;
    rep.denominator = den;
    rep.quotient = num / den;
    const double n = dim.n;
    rep.m1 = mi.A - (n - 2) * (n - 2) / 4.0 * mi.B;
    rep.m2 = mi.B - (n - 4) * (n - 4) / 4.0 * mi.D;
    rep.m3 = num - to_double(constants::sharp_constant(dim)) * den;
    rep.m4 = num - to_double(constants::min_split(dim)) * den;
    rep.err = mi.err;
    return rep;
}

InequalityReport check_inequalities(const RadialProfile& p, Dimension dim,
                                    const QuadratureConfig& cfg) {
    if (!std::get_if<Bump>(&p.kind))
        throw std::invalid_argument(
            "check_inequalities: Bump profiles only (support must avoid the origin)");
    const ModeIntegrals mi = mode_integrals(p, dim, cfg);
    const double n = dim.n;
    const auto [lo, hi] = profiles::support(p);
    // Independent route to A - ((N-2)^2/4) B: the factored square
    // int |(r^{(N-2)/2} u')'|^2 r dr, assembled from the jet directly.
    const IntegralValue sq = integrate_weighted(
        [&](double r) {
            const auto j = eval_profile(p, r);
            const double inner =
                0.5 * (n - 2) * std::pow(r, (n - 4) / 2.0) * j.du + std::pow(r, (n - 2) / 2.0) * j.ddu;
            return inner * inner;
        },
        1.0, lo, hi, cfg);
    InequalityReport rep;
    rep.m1 = mi.A - (n - 2) * (n - 2) / 4.0 * mi.B;
    rep.m2 = mi.B - (n - 4) * (n - 4) / 4.0 * mi.D;
    rep.identity_residual = std::abs(rep.m1 - sq.value);
    rep.integrals = mi;
    return rep;
}

ModeIndex minseq_mode(Dimension dim) { return ModeIndex(dim.n <= 4 ? 1 : 0); }

QuotientReport quotient_ueps(Dimension dim, double eps, const QuadratureConfig& cfg) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("quotient_ueps: eps in (0,1)");
    return mode_quotient(dim, minseq_mode(dim), RadialProfile::power_cutoff(dim, eps), cfg);
}

SequenceLimit sequence_limit(Dimension dim, const std::vector<double>& eps_list,
                             const QuadratureConfig& cfg) {
    if (eps_list.size() < 2)
        throw std::invalid_argument("sequence_limit: at least two eps values required");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0 && eps_list[i] < 0.1))
            throw std::invalid_argument("sequence_limit: eps values must lie in (0, 0.1)");
        if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
            throw std::invalid_argument("sequence_limit: eps list must decrease");
    }
    SequenceLimit out;
    out.raw.reserve(eps_list.size());
    for (double eps : eps_list) out.raw.push_back(quotient_ueps(dim, eps, cfg).quotient);
    // Richardson table: Neville evaluation at eps = 0 of the polynomial
    // through (eps_i, q_i), eliminating the eps, eps^2, ... terms in turn.
    // With two points this is the plain linear rule.
    std::vector<double> table = out.raw;
    const std::size_t n = table.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double xi = eps_list[i], xj = eps_list[i + level];
            table[i] = (xj * table[i] - xi * table[i + 1]) / (xj - xi);
        }
    }
    out.extrapolated = table[0];
    out.last_raw = out.raw.back();
    return out;
}

}  // namespace hrlab::functionals
