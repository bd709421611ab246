#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kgscat/model.hpp"
#include "kgscat/scattering.hpp"
#include "kgscat/spectra.hpp"

// Independent numerical route to the analytic results: Numerov integration of
// the radial equation with the approximated potential.
namespace kgscat::oracle {

using scattering::WaveFunctionSample;

struct IntegrationGrid {
    double r0 = 0.0;
    double r_max = 0.0;
    double h = 0.0;

    std::size_t steps() const;
};

// r0 = 1e-6/beta, h = min(1e-3/beta, 2 pi / (40 k_ref)) * h_scale with
// k_ref = max(|k|, beta), r_max = r_max_factor / beta.
IntegrationGrid scattering_grid(const model::PotentialSpec& spec, const model::Kinematics& kin,
                                int l, double r_max_factor = 30.0, double h_scale = 1.0);

// Checks h <= min(1e-3/beta, 2 pi / (40 k_ref)) and r_max >= 30/beta.
bool satisfies_invariants(const IntegrationGrid& grid, double beta, double k_ref);

enum class PotentialForm { Approximated, Exact };

/// W(r) in u'' + [k^2 - W(r)] u = 0, with k^2 the channel's asymptotic wave
/// number squared. W vanishes at infinity: the constant tails of the
/// approximated potential and centrifugal term are absorbed in k^2.
/// The Exact form keeps the literal 1/r and 1/r^2 terms (no contract; the
/// analytic results are not exact for it).
double effective_potential(const model::PotentialSpec& spec, const model::Kinematics& kin,
                           int l, double r, PotentialForm form = PotentialForm::Approximated);

/// Regular solution near the origin, r^lambda (1 + g r / (2 lambda)), where
/// W = lambda (lambda - 1) / r^2 + g / r + O(1). g is read off r^2 W at r0
/// and 2 r0, so r0 must be small on the scale 1/beta. Dropping the g term
/// makes a strong 1/r core cost the integration O(h) accuracy.
struct RegularStart {
    double lambda = 1.0;
    double g = 0.0;

    double operator()(double r) const;
};

RegularStart regular_start(const model::PotentialSpec& spec, const model::Kinematics& kin, int l,
                           double r0, PotentialForm form = PotentialForm::Approximated);

/// Plain Numerov recursion for u'' = -f(r) u on r_i = r0 + i h, i < count.
/// OverflowError once |u| exceeds 1e300.
std::vector<double> numerov(const std::function<double(double)>& f, double r0, double h,
                            std::size_t count, double u0, double u1);

/// Regular solution on the grid, started from regular_start at the first two
/// points. Values are real and stored in u.real().
std::vector<WaveFunctionSample> integrate_radial(const model::PotentialSpec& spec,
                                                 const model::Kinematics& kin, int l,
                                                 const IntegrationGrid& grid,
                                                 PotentialForm form = PotentialForm::Approximated);

struct OracleResult {
    double delta_numeric = 0.0; // in [0, pi)
    double amplitude = 0.0;
    double match_radius = 0.0;
    IntegrationGrid grid;
};

/// Fit u = A sin(kr + phi) through two samples a quarter wavelength apart near
/// the end of the samples; delta = (phi + l pi / 2) mod pi. Samples must be
/// uniformly spaced and reach the region where W is negligible. MatchError if
/// no well-conditioned pair is found after 5 shifts.
OracleResult extract_phase(std::span<const WaveFunctionSample> samples, double k, int l,
                           double beta);

// integrate_radial on scattering_grid followed by extract_phase.
OracleResult numeric_phase_shift(const model::PotentialSpec& spec, const model::Kinematics& kin,
                                 int l, double r_max_factor = 30.0, double h_scale = 1.0);

// Distance between two angles on the circle of circumference period.
double circle_distance(double x, double y, double period);

struct ShootingOptions {
    std::optional<double> h;     // default min(1e-3/beta, 2e-3)
    std::optional<double> r_max; // default min(30/beta, 80/kappa at the window top)
    double energy_tol = 1e-10;
};

/// Bound state with exactly n_target nodes, found by bisection on the node
/// count of the outward solution. kin_template supplies mode, mass and hbar.
/// The returned residual is the final energy bracket width.
/// NoRootError when the window does not bracket the level; NodeCountError
/// when the node count jumps past n_target.
spectra::EnergyLevel shoot_bound_state(const model::PotentialSpec& spec,
                                       const model::Kinematics& kin_template, int l,
                                       spectra::EnergyWindow window, int n_target,
                                       const ShootingOptions& opts = {});

// Number of sign changes of the outward solution at energy E.
int count_nodes(const model::PotentialSpec& spec, const model::Kinematics& kin_template, int l,
                double E, double h, double r_max);

/// max |u'' + (k^2 - W) u| / max |(k^2 - W) u| over interior samples, with u''
/// from the second difference. Samples must be uniformly spaced.
double wavefunction_ode_residual(const model::PotentialSpec& spec, const model::Kinematics& kin,
                                 int l, std::span<const WaveFunctionSample> samples);

} // namespace kgscat::oracle
