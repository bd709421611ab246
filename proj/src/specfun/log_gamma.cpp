#include "kgscat/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kgscat/errors.hpp"

namespace kgscat::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfLog2Pi = 0.918938533204672741780329736406; // log(2 pi) / 2
constexpr double kLogPi = 1.14472988584940017414342735135;

// Region where the Stirling series alone is accurate to double precision.
constexpr double kStirlingRe = 7.0;
constexpr double kStirlingIm = 7.0;
constexpr double kTaylorRadius = 0.2;

// B_{2k} / (2k (2k - 1)), highest order first.
constexpr std::array<double, 8> kStirlingCoeffs = {
    -3617.0 / 122400.0, 1.0 / 156.0, -691.0 / 360360.0, 1.0 / 1188.0,
    -1.0 / 1680.0,      1.0 / 1260.0, -1.0 / 360.0,     1.0 / 12.0,
};

// log Gamma(1 + w) = sum_k c_k w^k with c_1 = -gamma, c_k = (-1)^k zeta(k) / k.
// Highest order first; the constant term is zero.
constexpr std::array<double, 25> kTaylorCoeffs = {
    -0.0400000011921401405861, 0.0416666691503412104691,
    -0.0434782660530402593614, 0.0454545562932046694424,
    -0.0476190703301422279908, 0.0500000476981016936398,
    -0.0526316793796166607336, 0.0555557676274036111022,
    -0.058823978658684582339,  0.062500955141213040742,
    -0.0666687058824204680329, 0.0714329462953613360592,
    -0.0769325164113521914728, 0.0833538405461090040249,
    -0.0909540171458290422326, 0.100099457512781808534,
    -0.111334265869564690491,  0.125509669524743042422,
    -0.14404989676884611812,   0.169557176997408189952,
    -0.207385551028673985266,  0.270580808427784547879,
    -0.400685634386531428467,  0.822467033424113218236,
    -0.57721566490153286061,
};

template <std::size_t N>
Complex horner(const std::array<double, N>& coeffs, Complex x) {
    Complex acc = coeffs[0];
    for (std::size_t i = 1; i < N; ++i)
        acc = acc * x + coeffs[i];
    return acc;
}

// log(1 + w) for small complex w without cancellation in the real part.
Complex log1p(Complex w) {
    const double re = 0.5 * std::log1p(w.real() * (2.0 + w.real()) + w.imag() * w.imag());
    const double im = std::atan2(w.imag(), 1.0 + w.real());
    return {re, im};
}

Complex stirling(Complex z) {
    const Complex rz = 1.0 / z;
    const Complex rzz = rz / z;
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + rz * horner(kStirlingCoeffs, rzz);
}

Complex taylor_near_one(Complex w) { return w * horner(kTaylorCoeffs, w); }

// sin(pi x) and cos(pi x) with exact zeros at the integers and half-integers.
double sin_pi(double x) {
    const double r = std::fmod(x, 2.0);
    if (r == 0.0 || std::abs(r) == 1.0)
        return 0.0;
    return std::sin(kPi * r);
}

double cos_pi(double x) {
    const double r = std::fmod(std::abs(x), 2.0);
    if (r == 0.5 || r == 1.5)
        return 0.0;
    return std::cos(kPi * r);
}

Complex sin_pi(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    return {sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
}

// Upward recurrence into the Stirling region for Im z >= 0. The product of
// the shifts is tracked directly and its logarithm corrected by counting how
// often its imaginary part changes sign from + to -.
Complex recurrence(Complex z) {
    int sign_flips = 0;
    bool negative = false;
    Complex shift_product = z;
    z += 1.0;
    while (z.real() <= kStirlingRe) {
        shift_product *= z;
        const bool now_negative = std::signbit(shift_product.imag());
        if (now_negative && !negative)
            ++sign_flips;
        negative = now_negative;
        z += 1.0;
    }
    return stirling(z) - std::log(shift_product) - Complex(0.0, kTwoPi * sign_flips);
}

} // namespace

const char* to_string(ArgConvention conv) noexcept {
    switch (conv) {
    case ArgConvention::PrincipalLogGamma: return "principal";
    case ArgConvention::WrappedArg: return "wrapped";
    }
    return "?";
}

bool is_gamma_pole(Complex z) noexcept {
    if (z.real() > 0.0)
        return false;
    const double nearest = std::round(z.real());
    return std::abs(z - Complex(nearest, 0.0)) < 1e-12 && std::abs(z.imag()) < 1e-12;
}

Complex log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        std::ostringstream os;
        os << "log_gamma of non-finite argument " << z;
        throw DomainError(os.str());
    }
    if (is_gamma_pole(z)) {
        std::ostringstream os;
        os << "Gamma has a pole at " << z;
        throw PoleError(os.str());
    }

    if (z.real() > kStirlingRe || std::abs(z.imag()) > kStirlingIm)
        return stirling(z);
    if (std::abs(z - 1.0) <= kTaylorRadius)
        return taylor_near_one(z - 1.0);
    if (std::abs(z - 2.0) <= kTaylorRadius)
        return log1p(z - 2.0) + taylor_near_one(z - 2.0);
    if (z.real() < 0.1) {
        // Reflection; the 2 pi multiple keeps the result on the principal branch.
        const double shift = std::copysign(kTwoPi, z.imag()) * std::floor(0.5 * z.real() + 0.25);
        return Complex(kLogPi, shift) - std::log(sin_pi(z)) - log_gamma(1.0 - z);
    }
    if (!std::signbit(z.imag()))
        return recurrence(z);
    return std::conj(recurrence(std::conj(z)));
}

double wrap_angle(double angle) noexcept {
    double r = std::remainder(angle, kTwoPi);
    if (r <= -kPi)
        r += kTwoPi;
    return r;
}

double arg_gamma(Complex z, ArgConvention conv) {
    const double im = log_gamma(z).imag();
    return conv == ArgConvention::PrincipalLogGamma ? im : wrap_angle(im);
}

} // namespace kgscat::specfun
