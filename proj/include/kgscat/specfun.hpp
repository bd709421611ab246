#pragma once

#include <complex>

namespace kgscat {

using Complex = std::complex<double>;

namespace specfun {

// Branch used when reporting the argument of Gamma.
enum class ArgConvention {
    PrincipalLogGamma, // Im log Gamma, continuous from the positive real axis, unbounded
    WrappedArg,        // the same value reduced to (-pi, pi]
};

const char* to_string(ArgConvention conv) noexcept;

// True when z is within 1e-12 of a nonpositive integer.
bool is_gamma_pole(Complex z) noexcept;

/// Principal branch of log Gamma(z).
///
/// The branch cut lies on the negative real axis; on the cut the sign of the
/// imaginary zero selects the side (+0 approaches from above), so
/// log_gamma(conj(z)) == conj(log_gamma(z)) holds for every input.
/// Throws PoleError at nonpositive integers and DomainError for non-finite z.
Complex log_gamma(Complex z);

double arg_gamma(Complex z, ArgConvention conv);

// Reduce an angle to (-pi, pi].
double wrap_angle(double angle) noexcept;

struct Hyp2F1Options {
    double x_switch = 0.5;     // above this the connection formula is used
    double rel_tol = 1e-16;    // series stops once |term| < rel_tol * |sum|
    double abs_floor = 1e-300; // ... or |term| < abs_floor
    long max_terms = 100000;
};

/// Gauss hypergeometric function 2F1(a, b; c; x) for complex parameters and
/// real x in [0, 1).
///
/// Below x_switch the Gauss series is summed directly. Above it the
/// two-term connection formula maps the evaluation onto series in (1 - x),
/// which requires c - a - b to be away from zero and the other integers
/// (DegenerateParameterError otherwise). ConvergenceError is raised if a series exceeds max_terms.
Complex gauss_2f1(Complex a, Complex b, Complex c, double x,
                  const Hyp2F1Options& opts = {});

// Plain Gauss series, exposed for continuity checks across x_switch.
Complex gauss_2f1_series(Complex a, Complex b, Complex c, double x,
                         const Hyp2F1Options& opts = {});

// Connection-formula branch, exposed for the same reason.
Complex gauss_2f1_connection(Complex a, Complex b, Complex c, double x,
                             const Hyp2F1Options& opts = {});

/// 2F1 at x = 1 - y with the complement y in (0, 1] given directly. Near
/// x = 1 this keeps the full relative precision of y, which rounding x
/// would destroy. Same branch choice and errors as gauss_2f1.
Complex gauss_2f1_complement(Complex a, Complex b, Complex c, double y,
                             const Hyp2F1Options& opts = {});

} // namespace specfun
} // namespace kgscat
