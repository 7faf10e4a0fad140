#include "hrlab/verification.hpp"

#include "hrlab/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hrlab::verification {

using functionals::check_inequalities;
using functionals::mode_denominator;
using functionals::mode_integrals;
using functionals::mode_numerator;
using functionals::ModeIntegrals;
using profiles::RadialProfile;

namespace {

struct TrialOutcome {
    DimSummary local;  // single-trial extrema, merged later
    std::vector<std::string> problems;
};

void merge_min(double& into, double value) { into = std::min(into, value); }
void merge_max(double& into, double value) { into = std::max(into, value); }

TrialOutcome run_trial(Dimension dim, std::uint64_t seed, std::uint64_t trial,
                       const SuiteConfig& cfg) {
    quadrature::QuadratureConfig qcfg;
    qcfg.exec = Exec::serial;  // trials are the parallel axis

    TrialOutcome out;
    DimSummary& s = out.local;
    s.dim = dim.n;
    s.trials = 1;
    s.min_m1_scaled = s.min_m2_scaled = s.min_m3_scaled = s.min_m4_scaled =
        std::numeric_limits<double>::infinity();

    const RadialProfile p = RadialProfile::bump(profiles::random_bump(seed, trial));
    const auto ineq = check_inequalities(p, dim, qcfg);
    const ModeIntegrals& mi = ineq.integrals;
    const double n = dim.n;
    const double t2 = (n - 2.0) * (n - 2.0) / 4.0;
    const double s2 = (n - 4.0) * (n - 4.0) / 4.0;

    const double m1_scale = std::max(mi.A, t2 * mi.B);
    const double m2_scale = std::max(mi.B, s2 * mi.D);
    merge_min(s.min_m1_scaled, ineq.m1 / m1_scale);
    merge_min(s.min_m2_scaled, ineq.m2 / m2_scale);
    if (ineq.m1 < -cfg.margin_tol * m1_scale)
        out.problems.push_back("radial Hardy margin m1 negative");
    if (ineq.m2 < -cfg.margin_tol * m2_scale)
        out.problems.push_back("weighted Hardy margin m2 negative");

    const double identity_rel = ineq.identity_residual / mi.A;
    merge_max(s.max_identity_rel, identity_rel);
    if (identity_rel > cfg.identity_tol)
        out.problems.push_back("factored-square identity residual too large");

    const double cn = to_double(constants::sharp_constant(dim));
    const double split = to_double(constants::min_split(dim));
    std::vector<double> base_quotient(cfg.kmax + 1, 0.0);
    for (int k = 0; k <= cfg.kmax; ++k) {
        const ModeIndex mode(k);
        const double num = mode_numerator(dim, mode, mi);
        const double den = mode_denominator(dim, mode, mi);
        base_quotient[k] = num / den;
        const double scale = std::max(std::abs(num), cn * den);
        const double m3 = num - cn * den;
        const double m4 = num - split * den;
        merge_min(s.min_m3_scaled, m3 / scale);
        merge_min(s.min_m4_scaled, m4 / std::max(std::abs(num), split * den));
        if (m3 < -cfg.margin_tol * scale || !(m3 > 0.0)) {
            std::ostringstream msg;
            msg << "sharp margin m3 not strictly positive at k=" << k;
            out.problems.push_back(msg.str());
        }
        if (m4 < -cfg.margin_tol * std::max(std::abs(num), split * den)) {
            std::ostringstream msg;
            msg << "split margin m4 negative at k=" << k;
            out.problems.push_back(msg.str());
        }
        // split-chain assembly: nonnegative m1, m2 must force m4 >= 0
        if (ineq.m1 >= 0.0 && ineq.m2 >= 0.0 && m4 < -cfg.margin_tol * std::abs(num)) {
            std::ostringstream msg;
            msg << "split-chain implication broken at k=" << k;
            out.problems.push_back(msg.str());
        }
    }

    for (double lambda : {0.5, 2.0, 5.0}) {
        const ModeIntegrals di = mode_integrals(profiles::dilated(p, lambda), dim, qcfg);
        for (int k = 0; k <= cfg.kmax; ++k) {
            const ModeIndex mode(k);
            const double q = mode_numerator(dim, mode, di) / mode_denominator(dim, mode, di);
            const double dev = std::abs(q / base_quotient[k] - 1.0);
            merge_max(s.max_dilation_dev, dev);
            if (dev > cfg.invariance_tol) {
                std::ostringstream msg;
                msg << "dilation invariance broken at k=" << k << " lambda=" << lambda;
                out.problems.push_back(msg.str());
            }
        }
    }

    const ModeIntegrals ai = mode_integrals(profiles::scaled(p, 7.0), dim, qcfg);
    for (int k = 0; k <= cfg.kmax; ++k) {
        const ModeIndex mode(k);
        const double q = mode_numerator(dim, mode, ai) / mode_denominator(dim, mode, ai);
        const double dev = std::abs(q / base_quotient[k] - 1.0);
        merge_max(s.max_amplitude_dev, dev);
        if (dev > cfg.invariance_tol) {
            std::ostringstream msg;
            msg << "amplitude invariance broken at k=" << k;
            out.problems.push_back(msg.str());
        }
    }
    return out;
}

}  // namespace

SuiteResult run_property_suite(const SuiteConfig& cfg) {
    SuiteResult result;
    for (int dim_value : cfg.dims) {
        const Dimension dim(dim_value);
        std::vector<TrialOutcome> outcomes(cfg.trials);
        std::vector<std::exception_ptr> errors(cfg.trials);
        parallel_for(cfg.trials, cfg.exec, [&](std::ptrdiff_t trial) {
            try {
                outcomes[trial] =
                    run_trial(dim, cfg.seed, static_cast<std::uint64_t>(trial), cfg);
            } catch (...) {
                errors[trial] = std::current_exception();
            }
        });
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);

        DimSummary summary;
        summary.dim = dim_value;
        summary.trials = cfg.trials;
        summary.min_m1_scaled = summary.min_m2_scaled = summary.min_m3_scaled =
            summary.min_m4_scaled = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < cfg.trials; ++trial) {
            const DimSummary& local = outcomes[trial].local;
            merge_min(summary.min_m1_scaled, local.min_m1_scaled);
            merge_min(summary.min_m2_scaled, local.min_m2_scaled);
            merge_min(summary.min_m3_scaled, local.min_m3_scaled);
            merge_min(summary.min_m4_scaled, local.min_m4_scaled);
            merge_max(summary.max_identity_rel, local.max_identity_rel);
            merge_max(summary.max_dilation_dev, local.max_dilation_dev);
            merge_max(summary.max_amplitude_dev, local.max_amplitude_dev);
            summary.violations += static_cast<int>(outcomes[trial].problems.size());
            for (const auto& what : outcomes[trial].problems)
                result.issues.push_back({dim_value, static_cast<std::uint64_t>(trial), what});
        }
        result.dims.push_back(summary);
    }
    result.ok = result.issues.empty();
    return result;
}

}  // namespace hrlab::verification
