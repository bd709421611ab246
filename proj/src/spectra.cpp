#include "kgscat/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgscat/errors.hpp"

namespace kgscat::spectra {

using model::Kinematics;
using model::PotentialKind;
using model::PotentialSpec;

namespace {

double lambda_at(const PotentialSpec& spec, const Kinematics& kin, int l) {
    try {
        return model::lambda_param(spec, kin, l);
    } catch (const ComplexIndexError& e) {
        throw DomainError(e.what());
    }
}

double median_of(std::vector<double> values) {
    if (values.empty())
        return 0.0;
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    return *mid;
}

EnergyLevel make_level(const PotentialSpec& spec, const Kinematics& kin_template, int l, int n,
                       double E) {
    const Kinematics kin = kin_template.with_energy(E);
    EnergyLevel level;
    level.n = n;
    level.l = l;
    level.E = E;
    level.residual = pole_residual(spec, kin_template, l, n, E);
    level.suspect_redundant =
        is_degenerate_potential(spec) || !(pole_decay_over_beta(spec, kin, l, n) > 0.0);
    return level;
}

} // namespace

double pole_residual(const PotentialSpec& spec, const Kinematics& kin_template, int l, int n,
                     double E) {
    if (n < 0)
        throw DomainError("radial quantum number n must be nonnegative");
    const Kinematics kin = kin_template.with_energy(E);
    const double lambda = lambda_at(spec, kin, l);
    const double m = n + lambda;
    const double beta = spec.beta();
    const double bracket = (m * m - model::q_plus_r(spec, kin, l)) / (2.0 * m);
    return model::k_squared(spec, kin, l) + beta * beta * bracket * bracket;
}

double rel_pole_residual(const PotentialSpec& spec, double mass, int l, int n, double E) {
    return pole_residual(spec, Kinematics::relativistic(mass, E), l, n, E);
}

double pole_decay_over_beta(const PotentialSpec& spec, const Kinematics& kin, int l, int n) {
    const double m = n + lambda_at(spec, kin, l);
    return (model::q_plus_r(spec, kin, l) - m * m) / (2.0 * m);
}

bool is_degenerate_potential(const PotentialSpec& spec) noexcept {
    switch (spec.kind()) {
    case PotentialKind::Varshni: return spec.a() == 0.0 || spec.b() == 0.0;
    case PotentialKind::Hellmann: return spec.a() == 0.0 && spec.b() == 0.0;
    case PotentialKind::VarshniShukla: return spec.b() == 0.0;
    }
    return false;
}

EnergyWindow default_rel_window(const PotentialSpec& spec, double mass) noexcept {
    return {-mass + 1e-6, mass + std::abs(spec.a()) + 1.0};
}

std::vector<EnergyLevel> solve_rel_levels(const PotentialSpec& spec, double mass, int l,
                                          int n_max, std::optional<EnergyWindow> window,
                                          const RootScan& scan) {
    const EnergyWindow w = window.value_or(default_rel_window(spec, mass));
    if (!(w.lo < w.hi)) {
        std::ostringstream os;
        os << "energy window must satisfy lo < hi, got (" << w.lo << ", " << w.hi << ")";
        throw DomainError(os.str());
    }
    if (scan.points < 2)
        throw DomainError("root scan needs at least two points");

    const Kinematics kin_template = Kinematics::relativistic(mass, w.lo);
    std::vector<EnergyLevel> levels;

    for (int n = 0; n <= n_max; ++n) {
        const auto residual = [&](double E) { return pole_residual(spec, kin_template, l, n, E); };

        std::vector<double> energies(static_cast<std::size_t>(scan.points));
        std::vector<double> values(energies.size(), std::nan(""));
        std::vector<double> magnitudes;
        for (std::size_t i = 0; i < energies.size(); ++i) {
            energies[i] = w.lo + (w.hi - w.lo) * static_cast<double>(i) / (scan.points - 1);
            try {
                values[i] = residual(energies[i]);
                magnitudes.push_back(std::abs(values[i]));
            } catch (const DomainError&) {
                // lambda is complex here; no bracket may straddle this point
            }
        }
        const double spurious_level = 1e3 * median_of(magnitudes);

        for (std::size_t i = 0; i + 1 < energies.size(); ++i) {
            double f_lo = values[i];
            double f_hi = values[i + 1];
            if (std::isnan(f_lo) || std::isnan(f_hi))
                continue;
            if (f_lo == 0.0) {
                levels.push_back(make_level(spec, kin_template, l, n, energies[i]));
                continue;
            }
            if ((f_lo < 0.0) == (f_hi < 0.0) || f_hi == 0.0)
                continue;
            if (std::abs(f_lo) > spurious_level && std::abs(f_hi) > spurious_level)
                continue;

            double lo = energies[i];
            double hi = energies[i + 1];
            while (hi - lo > scan.energy_tol) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi)
                    break;
                const double f_mid = residual(mid);
                if (f_mid == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((f_mid < 0.0) == (f_lo < 0.0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            levels.push_back(make_level(spec, kin_template, l, n, 0.5 * (lo + hi)));
        }
        // a root exactly on the last scan point
        if (values.back() == 0.0)
            levels.push_back(make_level(spec, kin_template, l, n, energies.back()));
    }

    std::sort(levels.begin(), levels.end(),
              [](const EnergyLevel& x, const EnergyLevel& y) { return x.E < y.E; });
    return levels;
}

double nr_energy(const PotentialSpec& spec, double mu, double hbar, int l, int n) {
    if (n < 0 || l < 0)
        throw DomainError("quantum numbers must be nonnegative");
    if (!(mu > 0.0) || !(hbar > 0.0))
        throw DomainError("mu and hbar must be positive");

    const double L = static_cast<double>(l) * (l + 1);
    const double beta = spec.beta();
    const double a = spec.a();
    const double b = spec.b();
    const double scale = hbar * hbar * beta * beta / (2.0 * mu); // hbar^2 beta^2 / 2 mu
    const double strength = 2.0 * mu / (hbar * hbar);            // 2 mu / hbar^2
    const double N = n + l + 1.0;

    switch (spec.kind()) {
    case PotentialKind::Varshni: {
        const double x = (N * N + L - strength * a * b / beta) / (2.0 * N);
        return a + scale * L - scale * x * x;
    }
    case PotentialKind::Hellmann: {
        const double x = (N * N + strength * b / beta - strength * a / beta + L) / (2.0 * N);
        return scale * L - a * beta - scale * x * x;
    }
    case PotentialKind::VarshniShukla: {
        const double radicand = 0.25 + L + strength * b;
        if (radicand < 0.0) {
            std::ostringstream os;
            os << "Varshni-Shukla index radicand is negative (" << radicand << ")";
            throw ComplexIndexError(os.str());
        }
        const double m = n + 0.5 + std::sqrt(radicand);
        const double x = (m * m + L) / (2.0 * m);
        return scale * L - scale * x * x;
    }
    }
    return 0.0;
}

std::vector<EnergyLevel> nr_levels(const PotentialSpec& spec, double mu, double hbar, int l,
                                   int n_max) {
    std::vector<EnergyLevel> levels;
    for (int n = 0; n <= n_max; ++n) {
        const double E = nr_energy(spec, mu, hbar, l, n);
        levels.push_back(make_level(spec, Kinematics::non_relativistic(mu, E, hbar), l, n, E));
    }
    return levels;
}

} // namespace kgscat::spectra
