#pragma once

#include <span>
#include <vector>

#include "kgscat/model.hpp"
#include "kgscat/specfun.hpp"

namespace kgscat::scattering {

using specfun::ArgConvention;

/// Phase shift of one partial wave together with the channel it came from.
///
/// delta is never reduced modulo pi or 2 pi. For below-threshold channels
/// (imaginary k) it is the formal analytic continuation of the formula and
/// carries no asymptotic meaning; check below_threshold before using it.
struct PhaseShiftRecord {
    double delta = 0.0;
    double gamma_ratio_arg = 0.0; // delta - pi (l + 1) / 2
    model::ChannelParams channel;
    ArgConvention convention = ArgConvention::PrincipalLogGamma;
    bool below_threshold = false;
};

struct WaveFunctionSample {
    double r = 0.0;
    Complex u;
};

struct AmplitudePhase {
    double amplitude = 0.0;
    double phase_offset = 0.0;
};

PhaseShiftRecord phase_shift(const model::PotentialSpec& spec, const model::Kinematics& kin,
                             int l, ArgConvention conv = ArgConvention::PrincipalLogGamma);

// Recompute delta from stored channel parameters.
double phase_shift_from_channel(const model::ChannelParams& ch, ArgConvention conv);

/// |Gamma(xi1*) Gamma(xi2*) / Gamma(2ik/beta)| / sqrt(xi3), evaluated in log
/// space so large imaginary arguments do not overflow.
double normalization_constant(const model::PotentialSpec& spec, const model::Kinematics& kin,
                              int l);
double normalization_constant(const model::ChannelParams& ch);

// u(r) = N z^lambda e^{ikr} 2F1(xi1, xi2; xi3; z), z = 1 - e^{-beta r}.
std::vector<WaveFunctionSample> radial_wavefunction(const model::PotentialSpec& spec,
                                                    const model::Kinematics& kin, int l,
                                                    std::span<const double> r_points);

// Large-r envelope 2 N Gamma(xi3) |Gamma(2ik/beta) / (Gamma(xi1*) Gamma(xi2*))|
// of radial_wavefunction. With the normalization above this equals
// 2 Gamma(xi3) / sqrt(xi3).
double asymptotic_envelope(const model::PotentialSpec& spec, const model::Kinematics& kin,
                           int l);

// Unit-normalized asymptotic form u -> 2 sin(kr + delta - l pi / 2):
// amplitude 2 and offset delta - l pi / 2. BelowThresholdError for imaginary k.
AmplitudePhase asymptotic_amplitude_phase(const model::PotentialSpec& spec,
                                          const model::Kinematics& kin, int l,
                                          ArgConvention conv = ArgConvention::PrincipalLogGamma);

} // namespace kgscat::scattering
