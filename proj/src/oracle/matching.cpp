#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kgscat/errors.hpp"
#include "kgscat/oracle.hpp"

namespace kgscat::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// W has decayed below ~1e-10 once beta r exceeds this.
constexpr double kAsymptoticBetaR = 23.0;

double positive_mod(double x, double period) {
    double m = std::fmod(x, period);
    if (m < 0.0)
        m += period;
    if (m >= period)
        m = 0.0;
    return m;
}

} // namespace

double circle_distance(double x, double y, double period) {
    const double d = positive_mod(x - y, period);
    return std::min(d, period - d);
}

OracleResult extract_phase(std::span<const WaveFunctionSample> samples, double k, int l,
                           double beta) {
    if (!(k > 0.0))
        throw BelowThresholdError("phase extraction needs a real positive k");
    if (samples.size() < 8)
        throw MatchError("too few samples to fit an asymptotic sine");

    const double h = samples[1].r - samples[0].r;
    const auto quarter = static_cast<std::ptrdiff_t>(std::lround(kPi / (2.0 * k * h)));
    if (quarter < 1 || quarter * 4 >= static_cast<std::ptrdiff_t>(samples.size()))
        throw MatchError("grid too coarse or too short for a quarter-wavelength pair");

    double tail_peak = 0.0;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(samples.size()) - 4 * quarter;
         i < static_cast<std::ptrdiff_t>(samples.size()); ++i)
        tail_peak = std::max(tail_peak, std::abs(samples[static_cast<std::size_t>(i)].u.real()));

    std::ptrdiff_t i2 = static_cast<std::ptrdiff_t>(samples.size()) - 1;
    for (int attempt = 0; attempt <= 5; ++attempt, i2 -= std::max<std::ptrdiff_t>(quarter / 3, 1)) {
        const std::ptrdiff_t i1 = i2 - quarter;
        if (i1 < 0)
            break;
        const WaveFunctionSample& s1 = samples[static_cast<std::size_t>(i1)];
        const WaveFunctionSample& s2 = samples[static_cast<std::size_t>(i2)];
        if (beta * s1.r < kAsymptoticBetaR)
            throw MatchError("samples do not reach the asymptotic region");

        const double spacing = k * (s2.r - s1.r);
        const double sin_sp = std::sin(spacing);
        if (std::abs(sin_sp) < 0.5)
            continue;
        // u1 = A sin(t), u2 = A sin(t + spacing)
        const double a_sin = s1.u.real();
        const double a_cos = (s2.u.real() - a_sin * std::cos(spacing)) / sin_sp;
        const double amplitude = std::hypot(a_sin, a_cos);
        if (!(amplitude > 1e-8 * tail_peak))
            continue;

        const double phi = std::atan2(a_sin, a_cos) - k * s1.r;
        OracleResult res;
        res.delta_numeric = positive_mod(phi + kPi * l / 2.0, kPi);
        res.amplitude = amplitude;
        res.match_radius = s1.r;
        res.grid = {samples.front().r, samples.back().r, h};
        return res;
    }
    throw MatchError("no well-conditioned matching pair near the end of the samples");
}

OracleResult numeric_phase_shift(const model::PotentialSpec& spec, const model::Kinematics& kin,
                                 int l, double r_max_factor, double h_scale) {
    const model::WaveNumber wn = model::wave_number(spec, kin, l);
    if (wn.below_threshold)
        throw BelowThresholdError("no asymptotic phase below threshold");
    const IntegrationGrid grid = scattering_grid(spec, kin, l, r_max_factor, h_scale);
    const auto samples = integrate_radial(spec, kin, l, grid);
    OracleResult res = extract_phase(samples, wn.k.real(), l, spec.beta());
    res.grid = grid;
    return res;
}

} // namespace kgscat::oracle
