#pragma once

#include <string>
#include <string_view>

#include "kgscat/specfun.hpp"

namespace kgscat::model {

enum class PotentialKind { Varshni, Hellmann, VarshniShukla };

const char* to_string(PotentialKind kind) noexcept;
// Accepts "varshni", "hellmann", "varshni-shukla" (also "vsp", "varshni_shukla").
PotentialKind parse_potential_kind(std::string_view name);

/// Strengths and screening of one of the three potentials.
///
///   Varshni        V(r) = a [1 - (b/r) e^{-beta r}]
///   Hellmann       V(r) = -a/r + (b/r) e^{-beta r}
///   Varshni-Shukla V(r) = (b/r^2) e^{-beta r}        (a must be zero)
class PotentialSpec {
public:
    // Throws DomainError on beta <= 0, non-finite values, or a != 0 for
    // Varshni-Shukla.
    PotentialSpec(PotentialKind kind, double a, double b, double beta);

    PotentialKind kind() const noexcept { return kind_; }
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double beta() const noexcept { return beta_; }
    // Varshni-Shukla repulsive range parameter.
    double rho() const noexcept { return 1.0 / beta_; }

    PotentialSpec with_a(double a) const { return {kind_, a, b_, beta_}; }
    PotentialSpec with_b(double b) const { return {kind_, a_, b, beta_}; }
    PotentialSpec with_beta(double beta) const { return {kind_, a_, b_, beta}; }

private:
    PotentialKind kind_;
    double a_;
    double b_;
    double beta_;
};

enum class Mode { Relativistic, NonRelativistic };

const char* to_string(Mode mode) noexcept;

/// Particle data. Relativistic mode uses natural units with mass M; the
/// non-relativistic mode carries the reduced mass mu and hbar.
class Kinematics {
public:
    static Kinematics relativistic(double mass, double energy);
    static Kinematics non_relativistic(double mu, double energy, double hbar = 1.0);

    Mode mode() const noexcept { return mode_; }
    double mass() const noexcept { return mass_; } // M or mu
    double energy() const noexcept { return energy_; }
    double hbar() const noexcept { return hbar_; }

    Kinematics with_energy(double energy) const;

    // Factor multiplying V(r) in the radial equation: E + M, or 2 mu / hbar^2.
    double coupling() const noexcept;
    // Energy term of the radial equation: E^2 - M^2, or 2 mu E / hbar^2.
    double energy_term() const noexcept;

private:
    Kinematics(Mode mode, double mass, double energy, double hbar);

    Mode mode_;
    double mass_;
    double energy_;
    double hbar_;
};

struct WaveNumber {
    Complex k;             // principal square root of k^2
    double k_squared;      // the real value under the root
    bool below_threshold;  // k^2 < 0
};

struct PQR {
    double P;
    double Q;
    double R;
};

/// Per-channel derived quantities shared by every formula.
struct ChannelParams {
    int l = 0;
    double beta = 0.0;
    Complex k;
    double k_squared = 0.0;
    double lambda = 0.0;
    double P = 0.0;
    double Q = 0.0;
    double R = 0.0;
    Complex s;         // sqrt(Q + R - k^2/beta^2), real or imaginary
    Complex xi1;       // lambda - i k/beta - s
    Complex xi2;       // lambda - i k/beta + s
    Complex xi3;       // 2 lambda
    Complex xi1_star;  // lambda + i k/beta - s
    Complex xi2_star;  // lambda + i k/beta + s
    Complex two_ik_over_beta; // xi3 - xi1 - xi2, argument of the free Gamma factor
    bool below_threshold = false;
};

bool operator==(const ChannelParams& lhs, const ChannelParams& rhs) noexcept;

// Literal potential value. DomainError for r <= 0.
double potential_exact(const PotentialSpec& spec, double r);
// Potential with every 1/r replaced by beta / (1 - e^{-beta r}).
double potential_approx(const PotentialSpec& spec, double r);
// Limit of potential_approx as r -> infinity.
double potential_approx_tail(const PotentialSpec& spec) noexcept;

// Throws DegenerateChannelError when k^2 is exactly zero.
WaveNumber wave_number(const PotentialSpec& spec, const Kinematics& kin, int l);
PQR pqr(const PotentialSpec& spec, const Kinematics& kin, int l);
// ComplexIndexError when the Varshni-Shukla radicand is negative.
double lambda_param(const PotentialSpec& spec, const Kinematics& kin, int l);
ChannelParams channel_params(const PotentialSpec& spec, const Kinematics& kin, int l);

// The real k^2 and Q + R without the zero check, for pole conditions.
double k_squared(const PotentialSpec& spec, const Kinematics& kin, int l);
double q_plus_r(const PotentialSpec& spec, const Kinematics& kin, int l);

} // namespace kgscat::model
