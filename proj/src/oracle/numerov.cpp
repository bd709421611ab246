#include "kgscat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kgscat/errors.hpp"

namespace kgscat::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kOverflow = 1e300;

double centrifugal(int l) { return static_cast<double>(l) * (l + 1); }

} // namespace

std::size_t IntegrationGrid::steps() const {
    return static_cast<std::size_t>(std::floor((r_max - r0) / h)) + 1;
}

IntegrationGrid scattering_grid(const model::PotentialSpec& spec, const model::Kinematics& kin,
                                int l, double r_max_factor, double h_scale) {
    const double beta = spec.beta();
    const double k_ref = std::max(std::sqrt(std::abs(model::k_squared(spec, kin, l))), beta);
    IntegrationGrid grid;
    grid.r0 = 1e-6 / beta;
    grid.h = std::min(1e-3 / beta, kTwoPi / (40.0 * k_ref)) * h_scale;
    grid.r_max = r_max_factor / beta;
    return grid;
}

bool satisfies_invariants(const IntegrationGrid& grid, double beta, double k_ref) {
    const double h_bound = std::min(1e-3 / beta, kTwoPi / (40.0 * std::max(k_ref, beta)));
    return grid.r0 > 0.0 && grid.h > 0.0 && grid.r0 < grid.r_max && grid.h <= h_bound &&
           grid.r_max >= 30.0 / beta;
}

double effective_potential(const model::PotentialSpec& spec, const model::Kinematics& kin, int l,
                           double r, PotentialForm form) {
    if (!(r > 0.0)) {
        std::ostringstream os;
        os << "radius must be positive, got " << r;
        throw DomainError(os.str());
    }
    const double c1 = kin.coupling();
    const double beta = spec.beta();
    const double L = centrifugal(l);

    if (form == PotentialForm::Exact) {
        return c1 * (model::potential_exact(spec, r) - model::potential_approx_tail(spec)) +
               L / (r * r) - L * beta * beta;
    }

    // Decaying parts written out so that W -> 0 without cancellation.
    const double decay = std::exp(-beta * r); // 1 - z
    const double z = -std::expm1(-beta * r);
    const double g = beta / z; // approximated 1/r
    double w = 0.0;
    switch (spec.kind()) {
    case model::PotentialKind::Varshni: w = -spec.a() * spec.b() * c1 * decay * g; break;
    case model::PotentialKind::Hellmann: w = c1 * (spec.b() - spec.a()) * decay * g; break;
    case model::PotentialKind::VarshniShukla: w = spec.b() * c1 * decay * g * g; break;
    }
    // L beta^2 (1/z^2 - 1)
    return w + L * beta * beta * decay * (1.0 + z) / (z * z);
}

double RegularStart::operator()(double r) const {
    return std::pow(r, lambda) * (1.0 + g * r / (2.0 * lambda));
}

RegularStart regular_start(const model::PotentialSpec& spec, const model::Kinematics& kin, int l,
                           double r0, PotentialForm form) {
    if (!(r0 > 0.0))
        throw DomainError("start radius must be positive");
    const double r1 = 2.0 * r0;
    const double s0 = r0 * r0 * effective_potential(spec, kin, l, r0, form);
    const double s1 = r1 * r1 * effective_potential(spec, kin, l, r1, form);
    return {model::lambda_param(spec, kin, l), (s1 - s0) / (r1 - r0)};
}

std::vector<double> numerov(const std::function<double(double)>& f, double r0, double h,
                            std::size_t count, double u0, double u1) {
    std::vector<double> u;
    u.reserve(count);
    if (count == 0)
        return u;
    u.push_back(u0);
    if (count == 1)
        return u;
    u.push_back(u1);

    const double c = h * h / 12.0;
    double f_prev = f(r0);
    double f_cur = f(r0 + h);
    for (std::size_t i = 2; i < count; ++i) {
        const double r_next = r0 + static_cast<double>(i) * h;
        const double f_next = f(r_next);
        const double next =
            (2.0 * (1.0 - 5.0 * c * f_cur) * u[i - 1] - (1.0 + c * f_prev) * u[i - 2]) /
            (1.0 + c * f_next);
        if (!(std::abs(next) <= kOverflow)) {
            std::ostringstream os;
            os << "Numerov solution overflowed at r = " << r_next
               << " (is the channel below threshold?)";
            throw OverflowError(os.str());
        }
        u.push_back(next);
        f_prev = f_cur;
        f_cur = f_next;
    }
    return u;
}

std::vector<WaveFunctionSample> integrate_radial(const model::PotentialSpec& spec,
                                                 const model::Kinematics& kin, int l,
                                                 const IntegrationGrid& grid,
                                                 PotentialForm form) {
    if (!(grid.r0 > 0.0 && grid.h > 0.0 && grid.r0 < grid.r_max))
        throw DomainError("integration grid needs 0 < r0 < r_max and h > 0");

    const double k2 = model::k_squared(spec, kin, l);
    const RegularStart start = regular_start(spec, kin, l, grid.r0, form);
    const auto f = [&](double r) { return k2 - effective_potential(spec, kin, l, r, form); };

    const std::size_t count = grid.steps();
    const std::vector<double> u =
        numerov(f, grid.r0, grid.h, count, start(grid.r0), start(grid.r0 + grid.h));

    std::vector<WaveFunctionSample> out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out.push_back({grid.r0 + static_cast<double>(i) * grid.h, Complex(u[i], 0.0)});
    return out;
}

double wavefunction_ode_residual(const model::PotentialSpec& spec, const model::Kinematics& kin,
                                 int l, std::span<const WaveFunctionSample> samples) {
    if (samples.size() < 3)
        throw DomainError("need at least three samples for a second difference");
    const double h = samples[1].r - samples[0].r;
    const double k2 = model::k_squared(spec, kin, l);

    double worst = 0.0;
    double scale = 0.0;
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        const double r = samples[i].r;
        const Complex second =
            (samples[i + 1].u - 2.0 * samples[i].u + samples[i - 1].u) / (h * h);
        const Complex term = (k2 - effective_potential(spec, kin, l, r)) * samples[i].u;
        worst = std::max(worst, std::abs(second + term));
        scale = std::max(scale, std::abs(term));
    }
    return scale > 0.0 ? worst / scale : worst;
}

} // namespace kgscat::oracle
