#include <algorithm>
#include <cmath>
#include <sstream>

#include "kgscat/errors.hpp"
#include "kgscat/oracle.hpp"

namespace kgscat::oracle {

namespace {

// Numerov recursion is linear, so the solution can be rescaled freely while
// marching into the classically forbidden region.
constexpr double kRescaleAbove = 1e200;
constexpr double kRescaleBy = 1e-200;

} // namespace

int count_nodes(const model::PotentialSpec& spec, const model::Kinematics& kin_template, int l,
                double E, double h, double r_max) {
    const model::Kinematics kin = kin_template.with_energy(E);
    const double k2 = model::k_squared(spec, kin, l);
    const double r0 = 1e-6 / spec.beta();
    const auto f = [&](double r) { return k2 - effective_potential(spec, kin, l, r); };

    const RegularStart start = regular_start(spec, kin, l, r0);
    const double c = h * h / 12.0;
    double u_prev = start(r0);
    double u_cur = start(r0 + h);
    double f_prev = f(r0);
    double f_cur = f(r0 + h);
    int nodes = 0;
    bool negative = u_cur < 0.0;

    const auto count = static_cast<std::size_t>(std::floor((r_max - r0) / h)) + 1;
    for (std::size_t i = 2; i < count; ++i) {
        const double f_next = f(r0 + static_cast<double>(i) * h);
        double u_next =
            (2.0 * (1.0 - 5.0 * c * f_cur) * u_cur - (1.0 + c * f_prev) * u_prev) /
            (1.0 + c * f_next);
        if (std::abs(u_next) > kRescaleAbove) {
            u_next *= kRescaleBy;
            u_cur *= kRescaleBy;
        }
        if (u_next != 0.0) {
            const bool now_negative = u_next < 0.0;
            if (now_negative != negative)
                ++nodes;
            negative = now_negative;
        }
        u_prev = u_cur;
        u_cur = u_next;
        f_prev = f_cur;
        f_cur = f_next;
    }
    return nodes;
}

spectra::EnergyLevel shoot_bound_state(const model::PotentialSpec& spec,
                                       const model::Kinematics& kin_template, int l,
                                       spectra::EnergyWindow window, int n_target,
                                       const ShootingOptions& opts) {
    if (!(window.lo < window.hi))
        throw DomainError("shooting window must satisfy lo < hi");
    if (n_target < 0)
        throw DomainError("node count must be nonnegative");

    const double beta = spec.beta();
    const double h = opts.h.value_or(std::min(1e-3 / beta, 2e-3));
    double r_max = 30.0 / beta;
    if (opts.r_max) {
        r_max = *opts.r_max;
    } else {
        const double k2_top = model::k_squared(spec, kin_template.with_energy(window.hi), l);
        if (k2_top < 0.0)
            r_max = 60.0 / std::sqrt(-k2_top);
    }

    const auto nodes = [&](double E) { return count_nodes(spec, kin_template, l, E, h, r_max); };

    double lo = window.lo;
    double hi = window.hi;
    if (nodes(hi) <= n_target || nodes(lo) > n_target) {
        std::ostringstream os;
        os << "window (" << lo << ", " << hi << ") does not bracket the level with " << n_target
           << " nodes";
        throw NoRootError(os.str());
    }
    while (hi - lo > opts.energy_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        if (nodes(mid) > n_target)
            hi = mid;
        else
            lo = mid;
    }
    const int found = nodes(lo);
    if (found != n_target) {
        std::ostringstream os;
        os << "converged on a solution with " << found << " nodes, wanted " << n_target;
        throw NodeCountError(os.str());
    }

    spectra::EnergyLevel level;
    level.n = n_target;
    level.l = l;
    level.E = 0.5 * (lo + hi);
    level.residual = hi - lo;
    return level;
}

} // namespace kgscat::oracle
