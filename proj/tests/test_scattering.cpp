#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "kgscat/errors.hpp"
#include "kgscat/oracle.hpp"
#include "kgscat/scattering.hpp"

using namespace kgscat;
using namespace kgscat::model;
using namespace kgscat::scattering;

namespace {

constexpr double kPi = std::numbers::pi;

const PotentialKind kKinds[] = {PotentialKind::Varshni, PotentialKind::Hellmann,
                                PotentialKind::VarshniShukla};

std::vector<double> uniform_radii(double r0, double h, int count) {
    std::vector<double> r(count);
    for (int i = 0; i < count; ++i)
        r[i] = r0 + i * h;
    return r;
}

} // namespace

TEST_SUITE("scattering") {

TEST_CASE("free s-wave has zero phase shift") {
    for (const PotentialKind kind : kKinds) {
        for (double beta : {0.2, 0.5, 1.0}) {
            const PotentialSpec spec(kind, 0.0, 0.0, beta);
            CHECK(std::abs(phase_shift(spec, Kinematics::relativistic(1.0, 2.0), 0).delta) < 1e-12);
            CHECK(std::abs(phase_shift(spec, Kinematics::non_relativistic(0.5, 1.0), 0).delta) <
                  1e-12);
        }
    }
}

TEST_CASE("free higher partial waves vanish as beta decreases") {
    // The approximated centrifugal term leaves an l(l+1) beta / r tail cut off
    // near r = 1/beta, so the phase decays like l(l+1) beta log(1/beta) / (2k).
    const Kinematics kin = Kinematics::non_relativistic(0.5, 1.0);
    for (int l : {1, 2}) {
        double previous = INFINITY;
        for (double beta : {1e-2, 5e-3, 2e-3, 1e-3, 1e-4}) {
            const PotentialSpec spec(PotentialKind::Hellmann, 0.0, 0.0, beta);
            const double d = oracle::circle_distance(phase_shift(spec, kin, l).delta, 0.0, kPi);
            CHECK(d < previous);
            CHECK(d < l * (l + 1.0) * beta * std::log(1.0 / beta));
            previous = d;
        }
    }
}

TEST_CASE("record reconstruction") {
    const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.3);
    const Kinematics kin = Kinematics::relativistic(1.0, 1.4);
    for (int l = 0; l < 4; ++l) {
        const PhaseShiftRecord rec = phase_shift(spec, kin, l);
        CHECK(rec.delta == doctest::Approx(rec.gamma_ratio_arg + kPi * (l + 1) / 2.0));
        CHECK(phase_shift_from_channel(rec.channel, rec.convention) == rec.delta);
        CHECK(rec.below_threshold == rec.channel.below_threshold);
        CHECK(rec.convention == ArgConvention::PrincipalLogGamma);
    }
}

TEST_CASE("Varshni with a = 0 ignores b and matches the other free channels") {
    const Kinematics kin = Kinematics::relativistic(1.0, 1.5);
    const auto delta = [&](PotentialKind kind, double b, int l) {
        return phase_shift(PotentialSpec(kind, 0.0, b, 0.3), kin, l).delta;
    };
    for (int l = 0; l < 4; ++l) {
        const double base = delta(PotentialKind::Varshni, 0.0, l);
        for (double b : {-2.0, 1.0, 2.0})
            CHECK(delta(PotentialKind::Varshni, b, l) == base);
        CHECK(delta(PotentialKind::Hellmann, 0.0, l) == base);
        CHECK(delta(PotentialKind::VarshniShukla, 0.0, l) == base);
    }
}

TEST_CASE("conventions differ by whole turns") {
    const Kinematics kin = Kinematics::relativistic(1.0, 1.0);
    for (const PotentialKind kind : kKinds) {
        const double a = kind == PotentialKind::VarshniShukla ? 0.0 : 2.0;
        for (double beta : {0.2, 0.35, 0.6, 0.9}) {
            const PotentialSpec spec(kind, a, 1.0, beta);
            for (int l = 0; l < 4; ++l) {
                double principal = 0.0;
                double wrapped = 0.0;
                try {
                    principal = phase_shift(spec, kin, l, ArgConvention::PrincipalLogGamma).delta;
                    wrapped = phase_shift(spec, kin, l, ArgConvention::WrappedArg).delta;
                } catch (const Error&) {
                    continue;
                }
                const double turns = (principal - wrapped) / (2.0 * kPi);
                CHECK(std::abs(turns - std::round(turns)) < 1e-9);
            }
        }
    }
}

TEST_CASE("normalization constant") {
    // k = 1, 2k/beta = 4: N = |Gamma(1) Gamma(1 + 4i) / Gamma(4i)| / sqrt(2) = 4 / sqrt(2).
    const PotentialSpec free(PotentialKind::Hellmann, 0.0, 0.0, 0.5);
    const Kinematics kin = Kinematics::non_relativistic(0.5, 1.0);
    CHECK(normalization_constant(free, kin, 0) == doctest::Approx(2.0 * std::sqrt(2.0)));

    const PotentialSpec spec(PotentialKind::Varshni, 0.5, 1.0, 0.4);
    const ChannelParams ch = channel_params(spec, kin, 1);
    const double direct = std::abs(std::exp(specfun::log_gamma(ch.xi1_star) +
                                            specfun::log_gamma(ch.xi2_star) -
                                            specfun::log_gamma(ch.two_ik_over_beta))) /
                          std::sqrt(ch.xi3.real());
    CHECK(normalization_constant(spec, kin, 1) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("normalization survives large imaginary arguments") {
    const PotentialSpec spec(PotentialKind::Hellmann, 0.5, 1.0, 0.01);
    const double n = normalization_constant(spec, Kinematics::relativistic(1.0, 3.0), 2);
    CHECK(std::isfinite(n));
    CHECK(n > 0.0);
}

TEST_CASE("wave function vanishes at the origin") {
    const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.3);
    const Kinematics kin = Kinematics::relativistic(1.0, 1.5);
    for (int l = 0; l < 3; ++l) {
        const std::vector<double> r = {1e-6, 1e-4, 1e-2};
        const auto u = radial_wavefunction(spec, kin, l, r);
        CHECK(std::abs(u[0].u) < std::abs(u[1].u));
        CHECK(std::abs(u[1].u) < std::abs(u[2].u));
        CHECK(std::abs(u[0].u) < 1e-5);
    }
    CHECK_THROWS_AS(radial_wavefunction(spec, kin, 0, std::vector<double>{0.0}), DomainError);
}

TEST_CASE("free s-wave is a sine") {
    const PotentialSpec free(PotentialKind::Varshni, 0.0, 0.0, 0.4);
    const Kinematics kin = Kinematics::non_relativistic(0.5, 1.0);
    const std::vector<double> r = {0.3, 1.1, 2.5, 4.0, 7.7};
    const auto u = radial_wavefunction(free, kin, 0, r);
    const Complex ratio0 = u[0].u / std::sin(r[0]);
    for (std::size_t i = 1; i < r.size(); ++i)
        CHECK(std::abs(u[i].u / std::sin(r[i]) - ratio0) < 1e-9 * std::abs(ratio0));
}

TEST_CASE("large-r wave function follows the asymptotic sine") {
    const PotentialSpec spec(PotentialKind::Hellmann, 0.5, 1.0, 0.5);
    const Kinematics kin = Kinematics::relativistic(1.0, 2.0);
    for (int l = 0; l < 3; ++l) {
        const PhaseShiftRecord rec = phase_shift(spec, kin, l);
        const double k = rec.channel.k.real();
        const double env = asymptotic_envelope(spec, kin, l);
        const auto u = radial_wavefunction(spec, kin, l, uniform_radii(40.0, 0.37, 12));
        for (const auto& s : u) {
            CHECK(std::abs(s.u.imag()) < 1e-8 * env);
            CHECK(s.u.real() / env ==
                  doctest::Approx(std::sin(k * s.r + rec.delta - l * kPi / 2.0)).epsilon(1e-6));
        }
        // Quarter-wave pair gives the envelope directly.
        const double r0 = 45.0;
        const double r1 = r0 + kPi / (2.0 * k);
        const auto pair = radial_wavefunction(spec, kin, l, std::vector<double>{r0, r1});
        CHECK(std::hypot(pair[0].u.real(), pair[1].u.real()) ==
              doctest::Approx(env).epsilon(1e-4));
        CHECK(env == doctest::Approx(2.0 * std::tgamma(2.0 * rec.channel.lambda) /
                                     std::sqrt(2.0 * rec.channel.lambda)));
    }
}

TEST_CASE("numerical phase of the analytic wave function") {
    const PotentialSpec spec(PotentialKind::Varshni, 0.5, 1.0, 0.4);
    const Kinematics kin = Kinematics::relativistic(1.0, 2.0);
    for (int l = 0; l < 3; ++l) {
        const PhaseShiftRecord rec = phase_shift(spec, kin, l);
        const double k = rec.channel.k.real();
        const double h = 0.01;
        const auto samples = radial_wavefunction(spec, kin, l, uniform_radii(60.0, h, 2000));
        const oracle::OracleResult fit = oracle::extract_phase(samples, k, l, 0.4);
        CHECK(oracle::circle_distance(fit.delta_numeric, rec.delta, kPi) < 1e-6);
    }
}

TEST_CASE("asymptotic amplitude and phase") {
    const PotentialSpec spec(PotentialKind::Hellmann, 2.0, 1.0, 0.3);
    const Kinematics kin = Kinematics::relativistic(1.0, 1.4);
    const AmplitudePhase ap = asymptotic_amplitude_phase(spec, kin, 2);
    CHECK(ap.amplitude == 2.0);
    CHECK(ap.phase_offset == doctest::Approx(phase_shift(spec, kin, 2).delta - kPi));
}

TEST_CASE("error channels") {
    SUBCASE("k = 0") {
        const PotentialSpec spec(PotentialKind::Varshni, 1.0, 0.5, 0.2);
        CHECK_THROWS_AS(phase_shift(spec, Kinematics::relativistic(1.0, 2.0), 0),
                        DegenerateChannelError);
    }
    SUBCASE("Gamma pole") {
        // 2 kappa / beta = 20 puts xi1* on a pole.
        const PotentialSpec spec(PotentialKind::Varshni, 2.0, 1.0, 0.2);
        CHECK_THROWS_AS(phase_shift(spec, Kinematics::relativistic(1.0, 1.0), 0), PoleError);
    }
    SUBCASE("below threshold") {
        const PotentialSpec spec(PotentialKind::Hellmann, 0.0, 0.0, 0.3);
        const Kinematics kin = Kinematics::non_relativistic(0.5, -1.0);
        const PhaseShiftRecord rec = phase_shift(spec, kin, 0);
        CHECK(rec.below_threshold);
        CHECK(std::isfinite(rec.delta));
        CHECK_THROWS_AS(asymptotic_amplitude_phase(spec, kin, 0), BelowThresholdError);
    }
}

} // TEST_SUITE
