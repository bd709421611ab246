#include "kgscat/model.hpp"

#include <cmath>
#include <sstream>

#include "kgscat/errors.hpp"

namespace kgscat::model {

namespace {

double centrifugal(int l) { return static_cast<double>(l) * (l + 1); }

void require_finite(double value, const char* name) {
    if (!std::isfinite(value))
        throw DomainError(std::string(name) + " must be finite");
}

void require_positive_radius(double r) {
    if (!(r > 0.0)) {
        std::ostringstream os;
        os << "radius must be positive, got " << r;
        throw DomainError(os.str());
    }
}

void require_valid_l(int l) {
    if (l < 0)
        throw DomainError("angular momentum l must be nonnegative");
}

// 1/r under the Greene-Aldrich substitution.
double inverse_r_approx(double beta, double r) { return beta / -std::expm1(-beta * r); }

} // namespace

const char* to_string(PotentialKind kind) noexcept {
    switch (kind) {
    case PotentialKind::Varshni: return "varshni";
    case PotentialKind::Hellmann: return "hellmann";
    case PotentialKind::VarshniShukla: return "varshni-shukla";
    }
    return "?";
}

PotentialKind parse_potential_kind(std::string_view name) {
    if (name == "varshni")
        return PotentialKind::Varshni;
    if (name == "hellmann")
        return PotentialKind::Hellmann;
    if (name == "varshni-shukla" || name == "varshni_shukla" || name == "vsp")
        return PotentialKind::VarshniShukla;
    throw DomainError("unknown potential '" + std::string(name) + "'");
}

const char* to_string(Mode mode) noexcept {
    return mode == Mode::Relativistic ? "rel" : "nr";
}

PotentialSpec::PotentialSpec(PotentialKind kind, double a, double b, double beta)
    : kind_(kind), a_(a), b_(b), beta_(beta) {
    require_finite(a, "a");
    require_finite(b, "b");
    require_finite(beta, "beta");
    if (!(beta > 0.0))
        throw DomainError("screening parameter beta must be positive");
    if (kind == PotentialKind::VarshniShukla && a != 0.0)
        throw DomainError("the Varshni-Shukla potential has no 'a' strength; a must be 0");
}

Kinematics::Kinematics(Mode mode, double mass, double energy, double hbar)
    : mode_(mode), mass_(mass), energy_(energy), hbar_(hbar) {
    require_finite(mass, "mass");
    require_finite(energy, "energy");
    require_finite(hbar, "hbar");
    if (!(mass > 0.0))
        throw DomainError("mass must be positive");
    if (!(hbar > 0.0))
        throw DomainError("hbar must be positive");
}

Kinematics Kinematics::relativistic(double mass, double energy) {
    return {Mode::Relativistic, mass, energy, 1.0};
}

Kinematics Kinematics::non_relativistic(double mu, double energy, double hbar) {
    return {Mode::NonRelativistic, mu, energy, hbar};
}

Kinematics Kinematics::with_energy(double energy) const {
    return {mode_, mass_, energy, hbar_};
}

double Kinematics::coupling() const noexcept {
    if (mode_ == Mode::Relativistic)
        return energy_ + mass_;
    return 2.0 * mass_ / (hbar_ * hbar_);
}

double Kinematics::energy_term() const noexcept {
    if (mode_ == Mode::Relativistic)
        return (energy_ - mass_) * (energy_ + mass_);
    return 2.0 * mass_ * energy_ / (hbar_ * hbar_);
}

bool operator==(const ChannelParams& lhs, const ChannelParams& rhs) noexcept {
    return lhs.l == rhs.l && lhs.beta == rhs.beta && lhs.k == rhs.k &&
           lhs.k_squared == rhs.k_squared && lhs.lambda == rhs.lambda && lhs.P == rhs.P &&
           lhs.Q == rhs.Q && lhs.R == rhs.R && lhs.s == rhs.s && lhs.xi1 == rhs.xi1 &&
           lhs.xi2 == rhs.xi2 && lhs.xi3 == rhs.xi3 && lhs.xi1_star == rhs.xi1_star &&
           lhs.xi2_star == rhs.xi2_star && lhs.two_ik_over_beta == rhs.two_ik_over_beta &&
           lhs.below_threshold == rhs.below_threshold;
}

double potential_exact(const PotentialSpec& spec, double r) {
    require_positive_radius(r);
    const double decay = std::exp(-spec.beta() * r);
    switch (spec.kind()) {
    case PotentialKind::Varshni: return spec.a() * (1.0 - spec.b() * decay / r);
    case PotentialKind::Hellmann: return -spec.a() / r + spec.b() * decay / r;
    case PotentialKind::VarshniShukla: return spec.b() * decay / (r * r);
    }
    return 0.0;
}

double potential_approx(const PotentialSpec& spec, double r) {
    require_positive_radius(r);
    const double decay = std::exp(-spec.beta() * r);
    const double inv_r = inverse_r_approx(spec.beta(), r);
    switch (spec.kind()) {
    case PotentialKind::Varshni: return spec.a() * (1.0 - spec.b() * decay * inv_r);
    case PotentialKind::Hellmann: return -spec.a() * inv_r + spec.b() * decay * inv_r;
    case PotentialKind::VarshniShukla: return spec.b() * decay * inv_r * inv_r;
    }
    return 0.0;
}

double potential_approx_tail(const PotentialSpec& spec) noexcept {
    switch (spec.kind()) {
    case PotentialKind::Varshni: return spec.a();
    case PotentialKind::Hellmann: return -spec.a() * spec.beta();
    case PotentialKind::VarshniShukla: return 0.0;
    }
    return 0.0;
}

double k_squared(const PotentialSpec& spec, const Kinematics& kin, int l) {
    require_valid_l(l);
    const double c1 = kin.coupling();
    const double e2 = kin.energy_term();
    const double beta = spec.beta();
    const double cent = centrifugal(l) * beta * beta;
    switch (spec.kind()) {
    case PotentialKind::Varshni: return e2 - spec.a() * c1 - cent;
    case PotentialKind::Hellmann: return e2 + spec.a() * c1 * beta - cent;
    case PotentialKind::VarshniShukla: return e2 - cent;
    }
    return 0.0;
}

WaveNumber wave_number(const PotentialSpec& spec, const Kinematics& kin, int l) {
    const double k2 = k_squared(spec, kin, l);
    if (k2 == 0.0) {
        std::ostringstream os;
        os << to_string(spec.kind()) << " channel l=" << l
           << " has k = 0; the phase shift is undefined";
        throw DegenerateChannelError(os.str());
    }
    if (k2 > 0.0)
        return {Complex(std::sqrt(k2), 0.0), k2, false};
    return {Complex(0.0, std::sqrt(-k2)), k2, true};
}

PQR pqr(const PotentialSpec& spec, const Kinematics& kin, int l) {
    require_valid_l(l);
    const double c1 = kin.coupling();
    const double beta = spec.beta();
    const double cent = centrifugal(l);
    double Q = 0.0;
    double R = -cent;
    switch (spec.kind()) {
    case PotentialKind::Varshni: Q = spec.a() * c1 * spec.b() / beta; break;
    case PotentialKind::Hellmann: Q = c1 * (spec.a() - spec.b()) / beta; break;
    case PotentialKind::VarshniShukla:
        Q = c1 * spec.b();
        R = -(c1 * spec.b() + cent);
        break;
    }
    // P + Q + R = k^2 / beta^2 is the z -> 1 indicial condition.
    const double P = k_squared(spec, kin, l) / (beta * beta) - Q - R;
    return {P, Q, R};
}

double q_plus_r(const PotentialSpec& spec, const Kinematics& kin, int l) {
    const PQR c = pqr(spec, kin, l);
    return c.Q + c.R;
}

double lambda_param(const PotentialSpec& spec, const Kinematics& kin, int l) {
    require_valid_l(l);
    if (spec.kind() != PotentialKind::VarshniShukla)
        return l + 1.0;
    const double radicand = 0.25 + centrifugal(l) + kin.coupling() * spec.b();
    if (radicand < 0.0) {
        std::ostringstream os;
        os << "Varshni-Shukla index radicand is negative (" << radicand
           << "); the potential is too attractive";
        throw ComplexIndexError(os.str());
    }
    return 0.5 + std::sqrt(radicand);
}

ChannelParams channel_params(const PotentialSpec& spec, const Kinematics& kin, int l) {
    const WaveNumber wn = wave_number(spec, kin, l);
    const PQR coeffs = pqr(spec, kin, l);
    const double beta = spec.beta();

    ChannelParams ch;
    ch.l = l;
    ch.beta = beta;
    ch.k = wn.k;
    ch.k_squared = wn.k_squared;
    ch.below_threshold = wn.below_threshold;
    ch.lambda = lambda_param(spec, kin, l);
    ch.P = coeffs.P;
    ch.Q = coeffs.Q;
    ch.R = coeffs.R;

    const double radicand = coeffs.Q + coeffs.R - wn.k_squared / (beta * beta);
    ch.s = radicand >= 0.0 ? Complex(std::sqrt(radicand), 0.0) : Complex(0.0, std::sqrt(-radicand));

    // i k / beta, built componentwise so an imaginary k yields a +0 imaginary part.
    const Complex ik_over_beta = wn.below_threshold ? Complex(-wn.k.imag() / beta, 0.0)
                                                    : Complex(0.0, wn.k.real() / beta);
    const Complex lam(ch.lambda, 0.0);
    ch.xi1 = lam - ik_over_beta - ch.s;
    ch.xi2 = lam - ik_over_beta + ch.s;
    ch.xi3 = Complex(2.0 * ch.lambda, 0.0);
    ch.xi1_star = lam + ik_over_beta - ch.s;
    ch.xi2_star = lam + ik_over_beta + ch.s;
    ch.two_ik_over_beta = 2.0 * ik_over_beta;
    return ch;
}

} // namespace kgscat::model
