#include "kgscat/scattering.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "kgscat/errors.hpp"

namespace kgscat::scattering {

namespace {

constexpr double kPi = std::numbers::pi;

double log_abs_gamma(Complex z) { return specfun::log_gamma(z).real(); }

} // namespace

double phase_shift_from_channel(const model::ChannelParams& ch, ArgConvention conv) {
    using specfun::arg_gamma;
    return kPi * (ch.l + 1) / 2.0 + arg_gamma(ch.two_ik_over_beta, conv) -
           arg_gamma(ch.xi2_star, conv) - arg_gamma(ch.xi1_star, conv);
}

PhaseShiftRecord phase_shift(const model::PotentialSpec& spec, const model::Kinematics& kin,
                             int l, ArgConvention conv) {
    PhaseShiftRecord rec;
    rec.channel = model::channel_params(spec, kin, l);
    rec.convention = conv;
    rec.below_threshold = rec.channel.below_threshold;
    rec.delta = phase_shift_from_channel(rec.channel, conv);
    rec.gamma_ratio_arg = rec.delta - kPi * (l + 1) / 2.0;
    return rec;
}

double normalization_constant(const model::ChannelParams& ch) {
    const double log_modulus = log_abs_gamma(ch.xi1_star) + log_abs_gamma(ch.xi2_star) -
                               log_abs_gamma(ch.two_ik_over_beta);
    return std::exp(log_modulus) / std::sqrt(ch.xi3.real());
}

double normalization_constant(const model::PotentialSpec& spec, const model::Kinematics& kin,
                              int l) {
    return normalization_constant(model::channel_params(spec, kin, l));
}

std::vector<WaveFunctionSample> radial_wavefunction(const model::PotentialSpec& spec,
                                                    const model::Kinematics& kin, int l,
                                                    std::span<const double> r_points) {
    const model::ChannelParams ch = model::channel_params(spec, kin, l);
    const double norm = normalization_constant(ch);
    const double beta = spec.beta();

    std::vector<WaveFunctionSample> out;
    out.reserve(r_points.size());
    for (const double r : r_points) {
        if (!(r > 0.0)) {
            std::ostringstream os;
            os << "wave function sample radius must be positive, got " << r;
            throw DomainError(os.str());
        }
        const double z = -std::expm1(-beta * r);
        const Complex plane_wave = std::exp(Complex(0.0, 1.0) * ch.k * r);
        const Complex f =
            specfun::gauss_2f1_complement(ch.xi1, ch.xi2, ch.xi3, std::exp(-beta * r));
        out.push_back({r, norm * std::pow(z, ch.lambda) * plane_wave * f});
    }
    return out;
}

double asymptotic_envelope(const model::PotentialSpec& spec, const model::Kinematics& kin,
                           int l) {
    const model::ChannelParams ch = model::channel_params(spec, kin, l);
    const double log_ratio = log_abs_gamma(ch.xi3) + log_abs_gamma(ch.two_ik_over_beta) -
                             log_abs_gamma(ch.xi1_star) - log_abs_gamma(ch.xi2_star);
    return 2.0 * normalization_constant(ch) * std::exp(log_ratio);
}

AmplitudePhase asymptotic_amplitude_phase(const model::PotentialSpec& spec,
                                          const model::Kinematics& kin, int l,
                                          ArgConvention conv) {
    const PhaseShiftRecord rec = phase_shift(spec, kin, l, conv);
    if (rec.below_threshold)
        throw BelowThresholdError("asymptotic form needs a real wave number");
    return {2.0, rec.delta - kPi * l / 2.0};
}

} // namespace kgscat::scattering
