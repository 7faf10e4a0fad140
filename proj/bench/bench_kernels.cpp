// Benchmark of the parallel kernels against their serial reference paths.
// Each kernel computes per-index results into index-addressed storage, so
// the two paths must agree bitwise; the benchmark verifies that while
// timing them.

#include "hrlab/crosscheck3d.hpp"
#include "hrlab/functionals.hpp"
#include "hrlab/spectral.hpp"
#include "hrlab/verification.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hrlab;

namespace {

double time_s(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-28s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n", name.c_str(),
                serial_s, parallel_s, serial_s / parallel_s,
                equal ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n\n", omp_get_max_threads());
#else
    std::printf("openmp not enabled; both paths run serially\n\n");
#endif

    {
        const auto profile = profiles::RadialProfile::bump(0.2, 9.5);
        const auto f = [&](double r) {
            const auto j = profiles::eval_profile(profile, r);
            return j.ddu * j.ddu + j.du * j.du * std::cos(10.0 * r);
        };
        quadrature::QuadratureConfig cfg;
        cfg.rel_tol = 1e-12;
        cfg.max_panel_doublings = 14;
        cfg.nodes_per_panel = 24;
        double vs = 0.0, vp = 0.0;
        cfg.exec = Exec::serial;
        quadrature::integrate_weighted(f, 2.0, 0.2, 9.5, cfg);  // warmup
        const double ts = time_s([&] {
            for (int rep = 0; rep < 20; ++rep)
                vs = quadrature::integrate_weighted(f, 2.0, 0.2, 9.5, cfg).value;
        });
        cfg.exec = Exec::parallel;
        const double tp = time_s([&] {
            for (int rep = 0; rep < 20; ++rep)
                vp = quadrature::integrate_weighted(f, 2.0, 0.2, 9.5, cfg).value;
        });
        report("panel quadrature", ts, tp, vs == vp);
    }

    {
        const auto profile = profiles::RadialProfile::bump(0.3, 8.0);
        const auto h = crosscheck3d::SphericalHarmonic3::make(1);
        quadrature::QuadratureConfig cfg;
        cfg.rel_tol = 1e-12;
        crosscheck3d::DirectIntegrals rs{}, rp{};
        cfg.exec = Exec::serial;
        const double ts =
            time_s([&] { rs = crosscheck3d::direct_integrals_3d(profile, h, cfg); });
        cfg.exec = Exec::parallel;
        const double tp =
            time_s([&] { rp = crosscheck3d::direct_integrals_3d(profile, h, cfg); });
        report("3-d cross-check", ts, tp, rs.num == rp.num && rs.den == rp.den);
    }

    {
        const LogGrid grid = LogGrid::decades(6.0, 3000);
        spectral::ModeScanResult rs{{}, 0, grid}, rp{{}, 0, grid};
        spectral::scan_modes(Dimension(5), 2, grid, Exec::serial);  // warmup
        const double ts =
            time_s([&] { rs = spectral::scan_modes(Dimension(5), 10, grid, Exec::serial); });
        const double tp =
            time_s([&] { rp = spectral::scan_modes(Dimension(5), 10, grid, Exec::parallel); });
        report("mode scan", ts, tp, rs.lambda == rp.lambda);
    }

    {
        verification::SuiteConfig cfg;
        cfg.dims = {3, 5};
        cfg.trials = 40;
        verification::SuiteResult rs, rp;
        cfg.exec = Exec::serial;
        const double ts = time_s([&] { rs = verification::run_property_suite(cfg); });
        cfg.exec = Exec::parallel;
        const double tp = time_s([&] { rp = verification::run_property_suite(cfg); });
        bool equal = rs.ok == rp.ok && rs.dims.size() == rp.dims.size();
        for (std::size_t i = 0; equal && i < rs.dims.size(); ++i)
            equal = rs.dims[i].min_m3_scaled == rp.dims[i].min_m3_scaled &&
                    rs.dims[i].max_identity_rel == rp.dims[i].max_identity_rel;
        report("property trials", ts, tp, equal);
    }

    return 0;
}
