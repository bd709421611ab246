#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "kgscat/errors.hpp"
#include "kgscat/oracle.hpp"
#include "kgscat/scattering.hpp"
#include "kgscat/spectra.hpp"

using namespace kgscat;
using namespace kgscat::model;
using namespace kgscat::oracle;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<WaveFunctionSample> sampled(double r0, double h, int count, double k, double phase) {
    std::vector<WaveFunctionSample> out(count);
    for (int i = 0; i < count; ++i) {
        const double r = r0 + i * h;
        out[i] = {r, Complex(1.7 * std::sin(k * r + phase), 0.0)};
    }
    return out;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("effective potential") {
    const Kinematics kin = Kinematics::relativistic(1.0, 1.5);

    SUBCASE("free s-wave has none") {
        const PotentialSpec free(PotentialKind::Hellmann, 0.0, 0.0, 0.3);
        for (double r : {0.01, 1.0, 10.0})
            CHECK(effective_potential(free, kin, 0, r) == 0.0);
    }
    SUBCASE("vanishes far out") {
        const PotentialSpec spec(PotentialKind::Varshni, 2.0, 1.0, 0.3);
        for (int l = 0; l < 4; ++l)
            CHECK(std::abs(effective_potential(spec, kin, l, 60.0 / 0.3)) < 1e-20);
    }
    SUBCASE("Hellmann matches the radial equation") {
        const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.3);
        const double c1 = kin.coupling();
        for (int l = 0; l < 3; ++l) {
            const double L = l * (l + 1.0);
            for (double r : {0.2, 1.0, 4.0}) {
                const double z = -std::expm1(-0.3 * r);
                const double expected = c1 * potential_approx(spec, r) + L * 0.09 / (z * z) +
                                        2.0 * c1 * 0.3 - L * 0.09;
                CHECK(effective_potential(spec, kin, l, r) == doctest::Approx(expected));
            }
        }
    }
    SUBCASE("radius must be positive") {
        const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.3);
        CHECK_THROWS_AS(effective_potential(spec, kin, 0, 0.0), DomainError);
    }
}

TEST_CASE("regular start follows the 1/r core") {
    const Kinematics kin = Kinematics::relativistic(1.0, 1.5);
    const double c1 = kin.coupling();
    for (int l = 0; l < 3; ++l) {
        const double L = l * (l + 1.0);
        const RegularStart h =
            regular_start(PotentialSpec(PotentialKind::Hellmann, 2.0, 0.5, 0.3), kin, l, 1e-6);
        CHECK(h.lambda == l + 1.0);
        CHECK(h.g == doctest::Approx(c1 * (0.5 - 2.0) + L * 0.3).epsilon(1e-6));
        const RegularStart v =
            regular_start(PotentialSpec(PotentialKind::Varshni, 2.0, 0.5, 0.3), kin, l, 1e-6);
        CHECK(v.g == doctest::Approx(-c1 * 2.0 * 0.5 + L * 0.3).epsilon(1e-6));
    }
    const PotentialSpec nothing(PotentialKind::Varshni, 0.0, 0.0, 0.3);
    const RegularStart free = regular_start(nothing, kin, 0, 1e-6);
    CHECK(std::abs(free.g) < 1e-9);
    CHECK(free(0.5) == doctest::Approx(0.5));
    CHECK_THROWS_AS(regular_start(nothing, kin, 0, 0.0), DomainError);
}

TEST_CASE("Numerov reproduces a harmonic oscillation") {
    const double h = 1e-3;
    const std::size_t count = 10001;
    const auto u = numerov([](double) { return 4.0; }, 0.0, h, count, 0.0, std::sin(2.0 * h));
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        worst = std::max(worst, std::abs(u[i] - std::sin(2.0 * i * h)));
    CHECK(worst < 1e-9);
}

TEST_CASE("Numerov stays bounded on an oscillation and overflows on growth") {
    const auto osc = numerov([](double) { return 1.0; }, 0.0, 0.05, 20000, 0.0, std::sin(0.05));
    double peak = 0.0;
    for (double v : osc)
        peak = std::max(peak, std::abs(v));
    CHECK(peak < 1.0 + 1e-6);
    CHECK_THROWS_AS(numerov([](double) { return -1.0; }, 0.0, 0.1, 8000, 1.0, std::exp(0.1)),
                    OverflowError);
}

TEST_CASE("free integration matches the exact solution with the same start") {
    const PotentialSpec free(PotentialKind::Varshni, 0.0, 0.0, 0.5);
    const Kinematics kin = Kinematics::non_relativistic(0.5, 1.0); // k = 1
    const IntegrationGrid grid = scattering_grid(free, kin, 0);
    const auto u = integrate_radial(free, kin, 0, grid);
    // u = A sin r + B cos r through the first two samples.
    const double r0 = u[0].r, r1 = u[1].r;
    const double det = std::sin(r0) * std::cos(r1) - std::cos(r0) * std::sin(r1);
    const double A = (u[0].u.real() * std::cos(r1) - u[1].u.real() * std::cos(r0)) / det;
    const double B = (std::sin(r0) * u[1].u.real() - std::sin(r1) * u[0].u.real()) / det;
    const auto at10 = static_cast<std::size_t>(std::lround((10.0 - r0) / grid.h));
    const double r = u[at10].r;
    const double scale = std::hypot(A, B);
    CHECK(std::abs(u[at10].u.real() - (A * std::sin(r) + B * std::cos(r))) < 1e-8 * scale);
}

TEST_CASE("phase extraction from synthetic sines") {
    const double k = 1.3;
    const double beta = 0.5;
    SUBCASE("s-wave") {
        const auto s = sampled(0.0, 0.01, 6000, k, 0.3);
        CHECK(extract_phase(s, k, 0, beta).delta_numeric == doctest::Approx(0.3).epsilon(1e-9));
        CHECK(extract_phase(s, k, 0, beta).amplitude == doctest::Approx(1.7).epsilon(1e-9));
    }
    SUBCASE("p-wave carries the l pi / 2 offset") {
        const auto s = sampled(0.0, 0.01, 6000, k, 1.7 - kPi / 2.0);
        CHECK(extract_phase(s, k, 1, beta).delta_numeric == doctest::Approx(1.7).epsilon(1e-9));
    }
    SUBCASE("result is reduced to [0, pi)") {
        const auto s = sampled(0.0, 0.01, 6000, k, -0.4);
        const double d = extract_phase(s, k, 0, beta).delta_numeric;
        CHECK(d >= 0.0);
        CHECK(d < kPi);
        CHECK(d == doctest::Approx(kPi - 0.4).epsilon(1e-9));
    }
    SUBCASE("no signal") {
        const auto s = sampled(0.0, 0.01, 6000, k, 0.0);
        std::vector<WaveFunctionSample> zeros(s);
        for (auto& x : zeros)
            x.u = 0.0;
        CHECK_THROWS_AS(extract_phase(zeros, k, 0, beta), MatchError);
    }
}

TEST_CASE("numerical phase shift agrees with the closed form") {
    const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.3);
    const Kinematics kin = Kinematics::relativistic(1.0, 1.4);
    for (int l = 0; l < 3; ++l) {
        const double analytic = scattering::phase_shift(spec, kin, l).delta;
        const OracleResult base = numeric_phase_shift(spec, kin, l);
        CHECK(circle_distance(base.delta_numeric, analytic, kPi) < 1e-8);

        const OracleResult fine = numeric_phase_shift(spec, kin, l, 30.0, 0.5);
        CHECK(circle_distance(base.delta_numeric, fine.delta_numeric, kPi) < 1e-5);

        const OracleResult far = numeric_phase_shift(spec, kin, l, 45.0);
        CHECK(circle_distance(base.delta_numeric, far.delta_numeric, kPi) < 1e-4);
    }
}

TEST_CASE("grid invariants") {
    const PotentialSpec spec(PotentialKind::Varshni, 2.0, 1.0, 0.2);
    const Kinematics kin = Kinematics::relativistic(1.0, 4.0);
    const IntegrationGrid grid = scattering_grid(spec, kin, 1);
    const double k = wave_number(spec, kin, 1).k.real();
    const double k_ref = std::max(k, 0.2);
    CHECK(satisfies_invariants(grid, 0.2, k_ref));
    CHECK(grid.h <= 2.0 * kPi / (40.0 * k_ref));
    CHECK(grid.r_max >= 30.0 / 0.2);
    CHECK(grid.r0 == doctest::Approx(1e-6 / 0.2));
    CHECK(grid.steps() >= static_cast<std::size_t>((grid.r_max - grid.r0) / grid.h));

    IntegrationGrid coarse = grid;
    coarse.h *= 3.0;
    CHECK_FALSE(satisfies_invariants(coarse, 0.2, k_ref));
    IntegrationGrid short_grid = grid;
    short_grid.r_max = 10.0;
    CHECK_FALSE(satisfies_invariants(short_grid, 0.2, k_ref));
}

TEST_CASE("circle distance") {
    CHECK(circle_distance(0.1, kPi - 0.1, kPi) == doctest::Approx(0.2));
    CHECK(circle_distance(5.0, 5.0 + 4.0 * kPi, 2.0 * kPi) < 1e-12);
    CHECK(circle_distance(0.0, 1.0, 2.0 * kPi) == doctest::Approx(1.0));
}

TEST_CASE("shooting finds the closed-form levels") {
    // Hellmann, a = 2, b = 1, beta = 0.1, mu = hbar = 1: threshold at -a beta = -0.2.
    const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.1);
    const Kinematics kin = Kinematics::non_relativistic(1.0, 0.0);
    const spectra::EnergyWindow window{-2.0, -0.2 - 1e-3};
    CHECK(spectra::nr_energy(spec, 1.0, 1.0, 0, 0) == doctest::Approx(-0.65125));
    CHECK(spectra::nr_energy(spec, 1.0, 1.0, 0, 1) == doctest::Approx(-0.28));
    for (int n = 0; n < 2; ++n) {
        const spectra::EnergyLevel level = shoot_bound_state(spec, kin, 0, window, n);
        CHECK(level.n == n);
        CHECK(std::abs(level.E - spectra::nr_energy(spec, 1.0, 1.0, 0, n)) < 1e-6);
        CHECK(level.residual < 1e-9);
    }
}

TEST_CASE("shooting approaches the Coulomb levels") {
    const double a = 1.0;
    const PotentialSpec spec(PotentialKind::Hellmann, a, 0.0, 0.01);
    const Kinematics kin = Kinematics::non_relativistic(1.0, 0.0);
    const spectra::EnergyLevel level = shoot_bound_state(spec, kin, 0, {-2.0, -0.02}, 0);
    // E = -a^2 / 2 - a beta / 2 + O(beta^2)
    CHECK(std::abs(level.E + a * a / 2.0 + a * 0.01 / 2.0) < 1e-4);
}

TEST_CASE("node counting contract") {
    const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.1);
    const Kinematics kin = Kinematics::non_relativistic(1.0, 0.0);
    const double h = 2e-3;
    const double r_max = 200.0;
    CHECK(count_nodes(spec, kin, 0, -0.8, h, r_max) == 0);
    CHECK(count_nodes(spec, kin, 0, -0.5, h, r_max) == 1);
    CHECK(count_nodes(spec, kin, 0, -0.25, h, r_max) == 2);

    CHECK_THROWS_AS(shoot_bound_state(spec, kin, 0, {-2.0, -1.0}, 0), NoRootError);
    CHECK_THROWS_AS(shoot_bound_state(spec, kin, 0, {-1.0, -2.0}, 0), DomainError);
    CHECK_THROWS_AS(shoot_bound_state(spec, kin, 0, {-2.0, -0.3}, -1), DomainError);
}

} // TEST_SUITE
