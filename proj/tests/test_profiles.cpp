#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hrlab/profiles.hpp"

#include <cmath>
#include <random>

using namespace hrlab;
using namespace hrlab::profiles;

namespace {

// Finite-difference oracle for the analytic jets: each derivative level is
// checked against a central difference of the level below it (a second
// difference of u at step 1e-5 would drown in its own rounding noise).
double central_d1(const RadialProfile& p, double r, double h) {
    return (eval_profile(p, r + h).u - eval_profile(p, r - h).u) / (2.0 * h);
}

double central_d2(const RadialProfile& p, double r, double h) {
    return (eval_profile(p, r + h).du - eval_profile(p, r - h).du) / (2.0 * h);
}

}  // namespace

TEST_CASE("cutoff plateau and tail") {
    for (double r : {0.0, 0.25, 0.5, 1.0}) {
        const auto j = eval_cutoff(r);
        CHECK(j.g == 1.0);
        CHECK(j.dg == 0.0);
        CHECK(j.ddg == 0.0);
    }
    for (double r : {2.0, 2.5, 3.0, 100.0}) {
        const auto j = eval_cutoff(r);
        CHECK(j.g == 0.0);
        CHECK(j.dg == 0.0);
        CHECK(j.ddg == 0.0);
    }
    CHECK(eval_cutoff(1.5).g == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("cutoff is monotone and bounded on the ramp") {
    double prev = 1.0;
    for (int i = 1; i <= 200; ++i) {
        const double r = 1.0 + i / 200.0;
        const auto j = eval_cutoff(r);
        CHECK(j.g <= prev + 1e-15);
        CHECK(j.g >= 0.0);
        CHECK(j.g <= 1.0);
        CHECK(j.dg <= 1e-15);
        prev = j.g;
    }
}

TEST_CASE("cutoff seams are smooth") {
    const double d = 1e-8;
    for (double seam : {1.0, 2.0}) {
        const auto lo = eval_cutoff(seam - d);
        const auto hi = eval_cutoff(seam + d);
        CHECK(std::abs(lo.g - hi.g) <= 1e-10);
        CHECK(std::abs(lo.dg - hi.dg) <= 1e-10);
        CHECK(std::abs(lo.ddg - hi.ddg) <= 1e-10);
    }
}

TEST_CASE("power-cutoff profile equals the pure power below the ramp") {
    const auto p = RadialProfile::power_cutoff(Dimension(5), 0.1);
    const double alpha = power_exponent(Dimension(5), 0.1);
    CHECK(alpha == doctest::Approx(-0.4).epsilon(1e-15));
    const auto j = eval_profile(p, 0.5);
    CHECK(j.u == doctest::Approx(std::pow(0.5, alpha)).epsilon(1e-14));
    CHECK(j.du == doctest::Approx(alpha * std::pow(0.5, alpha - 1.0)).epsilon(1e-14));
    CHECK(j.ddu ==
          doctest::Approx(alpha * (alpha - 1.0) * std::pow(0.5, alpha - 2.0)).epsilon(1e-14));
    CHECK(eval_profile(p, 2.5).u == 0.0);
    CHECK_THROWS_AS(eval_profile(p, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(eval_profile(p, -1.0), std::invalid_argument);
}

TEST_CASE("supports") {
    const auto pc = RadialProfile::power_cutoff(Dimension(3), 0.01);
    CHECK(support(pc) == std::pair{0.0, 2.0});
    CHECK(support(RadialProfile::bump(1.0, 2.0)) == std::pair{1.0, 2.0});
    CHECK(support(RadialProfile::bump(0.25, 4.0)) == std::pair{0.25, 4.0});
    CHECK(eval_profile(RadialProfile::bump(1.0, 2.0), 3.0).u == 0.0);
    CHECK(eval_profile(RadialProfile::bump(1.0, 2.0), 0.5).u == 0.0);
}

TEST_CASE("analytic jets match finite differences") {
    std::mt19937_64 rng(7);
    auto uniform = [&rng](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    const double h = 1e-5;
    std::vector<RadialProfile> profiles;
    profiles.push_back(RadialProfile::power_cutoff(Dimension(3), 0.01));
    profiles.push_back(RadialProfile::power_cutoff(Dimension(5), 0.25));
    profiles.push_back(RadialProfile::bump(1.0, 2.0));
    Bump shaped;
    shaped.a = 0.5;
    shaped.b = 4.0;
    shaped.shape = {1.0, -0.5, 0.25, 0.75};
    profiles.push_back(RadialProfile::bump(shaped));
    for (const auto& p : profiles) {
        // stay off the support-edge boundary layers, where the oracle's own
        // truncation error blows up with the higher derivatives
        const auto [lo, hi] = support(p);
        const double margin = 0.05 * (hi - std::max(lo, 1e-3));
        const double from = std::max(lo, 1e-3) + margin;
        for (int i = 0; i < 100; ++i) {
            const double r = uniform(from, hi - margin);
            const auto j = eval_profile(p, r);
            CHECK(std::abs(j.du - central_d1(p, r, h)) <= 1e-6 * (1.0 + std::abs(j.du)));
            CHECK(std::abs(j.ddu - central_d2(p, r, h)) <= 1e-6 * (1.0 + std::abs(j.ddu)));
        }
    }
}

TEST_CASE("power cutoff jet matches finite differences on the ramp") {
    const auto p = RadialProfile::power_cutoff(Dimension(3), 0.01);
    const double h = 1e-5;
    const double r = 1.5;
    const auto j = eval_profile(p, r);
    CHECK(std::abs(j.du - central_d1(p, r, h)) <= 1e-6 * (1.0 + std::abs(j.du)));
    CHECK(std::abs(j.ddu - central_d2(p, r, h)) <= 1e-6 * (1.0 + std::abs(j.ddu)));
}

TEST_CASE("amplitude and dilation transforms") {
    const auto base = RadialProfile::bump(1.0, 2.0);
    const auto twice = scaled(base, 2.0);
    const auto squeezed = dilated(base, 2.0);  // u(2r)
    const double r = 1.37;
    CHECK(eval_profile(twice, r).u == doctest::Approx(2.0 * eval_profile(base, r).u));
    CHECK(eval_profile(squeezed, r / 2.0).u == doctest::Approx(eval_profile(base, r).u));
    const auto [lo, hi] = support(squeezed);
    CHECK(lo == doctest::Approx(0.5));
    CHECK(hi == doctest::Approx(1.0));
    CHECK_THROWS_AS(scaled(RadialProfile::power_cutoff(Dimension(3), 0.1), 2.0),
                    std::invalid_argument);
}

TEST_CASE("grid-sampled jets from node values") {
    const LogGrid grid(std::log(0.5), std::log(4.0), 64);
    std::vector<double> values(grid.m, 0.0);
    // sample a smooth function, zero-ish at the ends of the window
    const auto f = [](double r) { return std::exp(-(r - 2.0) * (r - 2.0)); };
    for (int i = 0; i < grid.m; ++i) values[i] = f(grid.r(i));
    const auto p = RadialProfile::grid_sampled(grid, values);
    const auto j = eval_profile(p, 2.0);
    CHECK(j.u == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(j.du == doctest::Approx(0.0).epsilon(1e-2));
    CHECK(j.ddu == doctest::Approx(-2.0).epsilon(5e-2));
    CHECK(eval_profile(p, 0.01).u == 0.0);
    CHECK(eval_profile(p, 100.0).u == 0.0);
}

TEST_CASE("random bump generator is deterministic and in range") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        const Bump b1 = random_bump(42, trial);
        const Bump b2 = random_bump(42, trial);
        CHECK(b1.a == b2.a);
        CHECK(b1.b == b2.b);
        CHECK(b1.shape == b2.shape);
        CHECK(b1.a >= 0.1);
        CHECK(b1.b <= 10.0);
        CHECK(b1.b - b1.a >= 0.5);
        CHECK(b1.shape[0] >= 0.5);
    }
    CHECK(random_bump(42, 0).a != random_bump(43, 0).a);
}
