#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrlab/crosscheck3d.hpp"
#include "hrlab/functionals.hpp"
#include "hrlab/parallel.hpp"
#include "hrlab/spectral.hpp"
#include "hrlab/verification.hpp"

#include <atomic>
#include <cmath>
#include <vector>

using namespace hrlab;

TEST_CASE("parallel_for covers every index exactly once") {
    std::vector<std::atomic<int>> hits(1000);
    for (auto& h : hits) h = 0;
    parallel_for(1000, Exec::parallel, [&](std::ptrdiff_t i) { hits[i]++; });
    for (const auto& h : hits) CHECK(h == 1);
}

TEST_CASE("quadrature kernel: serial and parallel results are bitwise equal") {
    const auto f = [](double r) {
        const auto j = profiles::eval_profile(profiles::RadialProfile::bump(0.5, 6.0), r);
        return j.ddu * j.ddu + std::sin(3.0 * r);
    };
    quadrature::QuadratureConfig serial, parallel;
    serial.exec = Exec::serial;
    parallel.exec = Exec::parallel;
    serial.rel_tol = parallel.rel_tol = 1e-12;
    const auto a = quadrature::integrate_weighted(f, 2.0, 0.5, 6.0, serial);
    const auto b = quadrature::integrate_weighted(f, 2.0, 0.5, 6.0, parallel);
    CHECK(a.value == b.value);
    CHECK(a.abs_error_estimate == b.abs_error_estimate);
}

TEST_CASE("mode scan: serial and parallel results are bitwise equal") {
    const LogGrid grid = LogGrid::decades(3.0, 500);
    const auto s = spectral::scan_modes(Dimension(4), 4, grid, Exec::serial);
    const auto p = spectral::scan_modes(Dimension(4), 4, grid, Exec::parallel);
    REQUIRE(s.lambda.size() == p.lambda.size());
    for (std::size_t k = 0; k < s.lambda.size(); ++k) CHECK(s.lambda[k] == p.lambda[k]);
    CHECK(s.argmin_mode == p.argmin_mode);
}

TEST_CASE("3-d cross-check: serial and parallel results are bitwise equal") {
    const auto p = profiles::RadialProfile::bump(1.0, 2.0);
    const auto h = crosscheck3d::SphericalHarmonic3::make(1);
    quadrature::QuadratureConfig serial, parallel;
    serial.exec = Exec::serial;
    parallel.exec = Exec::parallel;
    const auto a = crosscheck3d::direct_integrals_3d(p, h, serial);
    const auto b = crosscheck3d::direct_integrals_3d(p, h, parallel);
    CHECK(a.num == b.num);
    CHECK(a.den == b.den);
}

TEST_CASE("property suite: serial and parallel results are bitwise equal") {
    verification::SuiteConfig cfg;
    cfg.dims = {3, 5};
    cfg.trials = 8;
    cfg.seed = 99;
    cfg.exec = Exec::serial;
    const auto a = verification::run_property_suite(cfg);
    cfg.exec = Exec::parallel;
    const auto b = verification::run_property_suite(cfg);
    REQUIRE(a.dims.size() == b.dims.size());
    for (std::size_t i = 0; i < a.dims.size(); ++i) {
        CHECK(a.dims[i].min_m1_scaled == b.dims[i].min_m1_scaled);
        CHECK(a.dims[i].min_m3_scaled == b.dims[i].min_m3_scaled);
        CHECK(a.dims[i].max_identity_rel == b.dims[i].max_identity_rel);
        CHECK(a.dims[i].max_dilation_dev == b.dims[i].max_dilation_dev);
    }
    CHECK(a.ok == b.ok);
}
