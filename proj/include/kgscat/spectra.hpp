#pragma once

#include <optional>
#include <vector>

#include "kgscat/model.hpp"

namespace kgscat::spectra {

struct EnergyLevel {
    int n = 0;
    int l = 0;
    double E = 0.0;
    double residual = 0.0;
    // The pole is not a physical bound state: either the potential is
    // constant or centrifugal-only, or the decay constant at the pole is not
    // positive (the squared pole condition admits both signs).
    bool suspect_redundant = false;
};

struct EnergyWindow {
    double lo;
    double hi;
};

/// Left-hand side of the squared S-matrix pole condition
///
///   k^2(E) + beta^2 [((n + lambda)^2 - (Q + R)) / (2 (n + lambda))]^2 = 0
///
/// for either kinematic mode; kin_template supplies mass, hbar and mode and
/// its energy is replaced by E. lambda is re-evaluated at E (it depends on E
/// for Varshni-Shukla). DomainError when lambda is complex.
double pole_residual(const model::PotentialSpec& spec, const model::Kinematics& kin_template,
                     int l, int n, double E);

double rel_pole_residual(const model::PotentialSpec& spec, double mass, int l, int n, double E);

// kappa / beta = ((Q + R) - (n + lambda)^2) / (2 (n + lambda)) at the pole,
// where k = i kappa. A physical bound state needs kappa > 0.
double pole_decay_over_beta(const model::PotentialSpec& spec, const model::Kinematics& kin,
                            int l, int n);

bool is_degenerate_potential(const model::PotentialSpec& spec) noexcept;

// (-M + 1e-6, M + |a| + 1).
EnergyWindow default_rel_window(const model::PotentialSpec& spec, double mass) noexcept;

struct RootScan {
    int points = 2000;
    double energy_tol = 1e-12;
};

/// Every sign change of rel_pole_residual for n = 0..n_max inside the window,
/// refined by bisection and sorted by energy. Brackets whose endpoint
/// residuals both exceed 1e3 times the median scan magnitude are treated as
/// branch crossings and dropped. An n without sign changes contributes
/// nothing.
std::vector<EnergyLevel> solve_rel_levels(const model::PotentialSpec& spec, double mass, int l,
                                          int n_max,
                                          std::optional<EnergyWindow> window = std::nullopt,
                                          const RootScan& scan = {});

/// Closed-form non-relativistic level, written exactly as the pole condition
/// solves for E. ComplexIndexError for a too attractive Varshni-Shukla b.
double nr_energy(const model::PotentialSpec& spec, double mu, double hbar, int l, int n);

std::vector<EnergyLevel> nr_levels(const model::PotentialSpec& spec, double mu, double hbar,
                                   int l, int n_max);

} // namespace kgscat::spectra
