// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria mirror the project contract: exact constants, the
// minimizing-sequence sweeps, the mode-limit identities, symmetry breaking,
// variational recovery against the symbol oracle, the randomized property
// suite, the 3-d decomposition cross-check, and the non-attainability
// substitutes.

#include "hrlab/cli.hpp"
#include "hrlab/constants.hpp"
#include "hrlab/crosscheck3d.hpp"
#include "hrlab/functionals.hpp"
#include "hrlab/spectral.hpp"
#include "hrlab/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace hrlab;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
    double time_limit_s;  // 0 = no limit
};

bool check(bool condition, std::string& detail, const std::string& what) {
    if (!condition) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    return condition;
}

// 1. exact constant calculus, zero tolerance
bool criterion_constants(std::string& detail) {
    bool ok = true;
    ok &= check(constants::sharp_constant(Dimension(3)) == Rational(25, 36), detail, "C(3)");
    ok &= check(constants::sharp_constant(Dimension(4)) == Rational(3), detail, "C(4)");
    for (int n = 5; n <= 10; ++n)
        ok &= check(constants::sharp_constant(Dimension(n)) ==
                        Rational(static_cast<long long>(n) * n, 4),
                    detail, "C(" + std::to_string(n) + ")");
    for (int n = 3; n <= 10; ++n)
        ok &= check(constants::g_lower(Dimension(n), ModeIndex(1)) ==
                        Rational(static_cast<long long>(n) * n - 2 * n - 2, 2),
                    detail, "g(" + std::to_string(n) + ",1)");
    ok &= check(constants::eps_star(Dimension(3)) == Rational(14, 9), detail, "eps(3)");
    ok &= check(constants::eps_star(Dimension(4)) == Rational(1), detail, "eps(4)");
    for (int n : {3, 4})
        ok &= check(Rational(static_cast<long long>(n) * n, 4) - constants::eps_star(Dimension(n)) ==
                        constants::sharp_constant(Dimension(n)),
                    detail, "N^2/4-eps(N)=C(N) at N=" + std::to_string(n));
    // the CLI surface reports the same values
    const auto rep = cli::dispatch({"constants", "--dim", "3", "--kmax", "1"});
    ok &= check(rep.exit_code == 0 && rep.out.find("25/36") != std::string::npos, detail,
                "constants subcommand");
    return ok;
}

// 2. minimizing sequences: strict decrease and extrapolation within 1e-2
bool criterion_sequences(std::string& detail) {
    bool ok = true;
    for (int n : {3, 4, 5, 6}) {
        const auto limit = functionals::sequence_limit(Dimension(n), {0.04, 0.02, 0.01});
        ok &= check(limit.raw[0] > limit.raw[1] && limit.raw[1] > limit.raw[2], detail,
                    "monotone decrease at N=" + std::to_string(n));
        const double target = to_double(constants::sharp_constant(Dimension(n)));
        const double err = std::abs(limit.extrapolated - target);
        std::ostringstream what;
        what << "extrapolation at N=" << n << " off by " << err
             << " (cutoff-ramp terms still dominate the 1/(2 eps) core at these eps)";
        ok &= check(err <= 1e-2, detail, what.str());
    }
    return ok;
}

// 3. symbol(N,k,0) == mode limit quotient exactly; radial value N^2/4
bool criterion_mode_limits(std::string& detail) {
    bool ok = true;
    for (int n = 3; n <= 10; ++n) {
        for (int k = 0; k <= 20; ++k) {
            if (n == 4 && k == 0) continue;
            const auto lhs = spectral::symbol_value_exact(Dimension(n), ModeIndex(k), Rational(0));
            const auto rhs = constants::mode_limit_quotient(Dimension(n), ModeIndex(k));
            if (lhs != rhs) {
                ok = check(false, detail,
                           "symbol(" + std::to_string(n) + "," + std::to_string(k) + ",0)");
            }
        }
        if (n != 4)
            ok &= check(constants::mode_limit_quotient(Dimension(n), ModeIndex(0)) ==
                            Rational(static_cast<long long>(n) * n, 4),
                        detail, "radial limit at N=" + std::to_string(n));
    }
    return ok;
}

// 4. symmetry breaking of the scan argmin, agreeing with the oracle
bool criterion_symmetry_breaking(std::string& detail) {
    bool ok = true;
    const LogGrid grid = LogGrid::standard();
    for (int n : {3, 4, 5, 6, 7}) {
        const int expected = n <= 4 ? 1 : 0;
        const auto scan = spectral::scan_modes(Dimension(n), 5, grid);
        ok &= check(scan.argmin_mode == expected, detail,
                    "scan argmin at N=" + std::to_string(n));
        ok &= check(spectral::symbol_argmin_mode(Dimension(n), 5) == expected, detail,
                    "oracle argmin at N=" + std::to_string(n));
    }
    return ok;
}

// 5. variational recovery: discrete constants within 5% above the oracle;
//    global symbol estimate equals C(N) to 1e-9
bool criterion_variational(std::string& detail) {
    bool ok = true;
    const LogGrid grid = LogGrid::standard();
    for (int n : {3, 4, 5}) {
        for (int k = 0; k <= 5; ++k) {
            const double lambda = spectral::per_mode_constant(Dimension(n), ModeIndex(k), grid);
            const double oracle = spectral::symbol_min(Dimension(n), ModeIndex(k));
            std::ostringstream at;
            at << "(N=" << n << ",k=" << k << ")";
            ok &= check(lambda >= oracle - 1e-6, detail, "lower bound " + at.str());
            ok &= check(lambda <= 1.05 * oracle, detail, "5% excess " + at.str());
        }
    }
    for (int n = 3; n <= 10; ++n) {
        const double global = spectral::global_constant_estimate(Dimension(n), 20);
        const double target = to_double(constants::sharp_constant(Dimension(n)));
        ok &= check(std::abs(global - target) <= 1e-9, detail,
                    "global estimate at N=" + std::to_string(n));
    }
    return ok;
}

verification::SuiteResult& property_suite() {
    static verification::SuiteResult suite = [] {
        verification::SuiteConfig cfg;  // dims {3,4,5,6}, 100 trials, k <= 5
        return verification::run_property_suite(cfg);
    }();
    return suite;
}

// 6. randomized property suite
bool criterion_properties(std::string& detail) {
    const auto& suite = property_suite();
    bool ok = check(suite.ok, detail, "property suite reported violations");
    for (const auto& issue : suite.issues.size() > 5
             ? std::vector<verification::Issue>(suite.issues.begin(), suite.issues.begin() + 5)
             : suite.issues) {
        check(false, detail,
              "dim " + std::to_string(issue.dim) + " trial " + std::to_string(issue.trial) +
                  ": " + issue.what);
    }
    for (const auto& d : suite.dims) {
        ok &= check(d.min_m3_scaled > 0.0, detail,
                    "strict m3 at N=" + std::to_string(d.dim));
        ok &= check(d.max_identity_rel <= 1e-8, detail,
                    "identity residual at N=" + std::to_string(d.dim));
        ok &= check(d.max_dilation_dev <= 1e-10 && d.max_amplitude_dev <= 1e-10, detail,
                    "invariance at N=" + std::to_string(d.dim));
    }
    return ok;
}

// 7. decomposition cross-check in N=3
bool criterion_crosscheck(std::string& detail) {
    bool ok = true;
    ok &= check(constants::eigenvalue_ck(Dimension(3), ModeIndex(1)) == Rational(2), detail,
                "c_1 = 2");
    for (int degree : {0, 1}) {
        const auto h = crosscheck3d::SphericalHarmonic3::make(degree);
        ok &= check(crosscheck3d::sphere_eigencheck(h) <= 1e-10, detail,
                    "eigencheck degree " + std::to_string(degree));
        const auto profile = profiles::RadialProfile::bump(1.0, 2.0);
        const auto direct = crosscheck3d::direct_integrals_3d(profile, h);
        const auto mi = functionals::mode_integrals(profile, Dimension(3));
        const double num = functionals::mode_numerator(Dimension(3), ModeIndex(degree), mi);
        const double den = functionals::mode_denominator(Dimension(3), ModeIndex(degree), mi);
        ok &= check(std::abs(direct.num / num - 1.0) <= 1e-6, detail,
                    "numerator match degree " + std::to_string(degree));
        ok &= check(std::abs(direct.den / den - 1.0) <= 1e-6, detail,
                    "denominator match degree " + std::to_string(degree));
    }
    return ok;
}

// 8. non-attainability substitutes: strictly positive margins, sequences
//    decreasing to C(N) from above, discrete constants above the oracle
bool criterion_substitutes(std::string& detail) {
    bool ok = true;
    for (const auto& d : property_suite().dims)
        ok &= check(d.min_m3_scaled > 0.0, detail,
                    "strict margin at N=" + std::to_string(d.dim));
    for (int n : {3, 4, 5, 6}) {
        const auto limit = functionals::sequence_limit(Dimension(n), {0.04, 0.02, 0.01});
        const double target = to_double(constants::sharp_constant(Dimension(n)));
        for (double q : limit.raw)
            ok &= check(q > target, detail, "approach from above at N=" + std::to_string(n));
    }
    const LogGrid grid = LogGrid::standard();
    for (int n : {3, 4, 5}) {
        const ModeIndex k = functionals::minseq_mode(Dimension(n));
        const double lambda = spectral::per_mode_constant(Dimension(n), k, grid);
        ok &= check(lambda >= spectral::symbol_min(Dimension(n), k) - 1e-6, detail,
                    "discrete constant above oracle at N=" + std::to_string(n));
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "exact constants", criterion_constants, 1.0},
        {2, "minimizing sequences", criterion_sequences, 10.0},
        {3, "mode-limit identities", criterion_mode_limits, 0.0},
        {4, "symmetry breaking", criterion_symmetry_breaking, 60.0},
        {5, "variational recovery", criterion_variational, 0.0},
        {6, "property suite", criterion_properties, 60.0},
        {7, "decomposition cross-check", criterion_crosscheck, 0.0},
        {8, "non-attainability substitutes", criterion_substitutes, 0.0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0.0 && seconds > c.time_limit_s) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "runtime limit exceeded";
        }
        std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), seconds, detail.empty() ? "" : " -- ", detail.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
