#include "kgscat/specfun.hpp"

#include <cmath>
#include <sstream>

#include "kgscat/errors.hpp"

namespace kgscat::specfun {

namespace {

// Neumaier-compensated accumulator, applied to each component.
class CompensatedSum {
public:
    explicit CompensatedSum(Complex init) : re_(init.real()), im_(init.imag()) {}

    void add(Complex x) {
        add_component(re_, comp_re_, x.real());
        add_component(im_, comp_im_, x.imag());
    }

    Complex value() const { return {re_ + comp_re_, im_ + comp_im_}; }

private:
    static void add_component(double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double re_;
    double im_;
    double comp_re_ = 0.0;
    double comp_im_ = 0.0;
};

void require_valid_c(Complex c) {
    if (is_gamma_pole(c)) {
        std::ostringstream os;
        os << "2F1 third parameter is a nonpositive integer: " << c;
        throw PoleError(os.str());
    }
}

// Gamma(num1) Gamma(num2) / (Gamma(den1) Gamma(den2)), zero when a
// denominator sits on a pole.
Complex gamma_ratio(Complex num1, Complex num2, Complex den1, Complex den2) {
    if (is_gamma_pole(den1) || is_gamma_pole(den2))
        return 0.0;
    return std::exp(log_gamma(num1) + log_gamma(num2) - log_gamma(den1) - log_gamma(den2));
}

} // namespace

Complex gauss_2f1_series(Complex a, Complex b, Complex c, double x,
                         const Hyp2F1Options& opts) {
    require_valid_c(c);
    if (!(x >= 0.0 && x < 1.0)) {
        std::ostringstream os;
        os << "2F1 argument outside [0, 1): " << x;
        throw DomainError(os.str());
    }
    if (x == 0.0)
        return 1.0;

    CompensatedSum sum(1.0);
    Complex term = 1.0;
    for (long n = 0; n < opts.max_terms; ++n) {
        const double dn = static_cast<double>(n);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
        sum.add(term);
        if (term == 0.0)
            return sum.value();

        const double mag = std::abs(term);
        if (mag < opts.abs_floor)
            return sum.value();
        if (mag < opts.rel_tol * std::abs(sum.value())) {
            // Only stop once the terms are shrinking for good.
            const double next_ratio = std::abs((a + dn + 1.0) * (b + dn + 1.0) /
                                               ((c + dn + 1.0) * (dn + 2.0))) * x;
            if (next_ratio < 1.0)
                return sum.value();
        }
    }
    std::ostringstream os;
    os << "2F1 series did not converge in " << opts.max_terms << " terms (a=" << a
       << ", b=" << b << ", c=" << c << ", x=" << x << ")";
    throw ConvergenceError(os.str());
}

namespace {

// Connection formula with y = 1 - x and log y supplied by the caller.
Complex connection(Complex a, Complex b, Complex c, double y, double log_y,
                   const Hyp2F1Options& opts) {
    require_valid_c(c);
    const Complex s = c - a - b;
    // The two-term form degenerates (logarithmic case) at every integer s.
    if (std::abs(s - std::round(s.real())) < 1e-8) {
        std::ostringstream os;
        os << "connection formula needs c - a - b away from the integers, got " << s;
        throw DegenerateParameterError(os.str());
    }

    Complex result = 0.0;
    const Complex first = gamma_ratio(c, s, c - a, c - b);
    if (first != 0.0)
        result += first * gauss_2f1_series(a, b, 1.0 - s, y, opts);

    const Complex second = gamma_ratio(c, -s, a, b);
    if (second != 0.0) {
        const Complex power = std::exp(s * log_y);
        result += power * second * gauss_2f1_series(c - a, c - b, s + 1.0, y, opts);
    }
    return result;
}

} // namespace

Complex gauss_2f1_connection(Complex a, Complex b, Complex c, double x,
                             const Hyp2F1Options& opts) {
    require_valid_c(c);
    if (!(x >= 0.0 && x < 1.0)) {
        std::ostringstream os;
        os << "2F1 argument outside [0, 1): " << x;
        throw DomainError(os.str());
    }
    return connection(a, b, c, 1.0 - x, std::log1p(-x), opts);
}

Complex gauss_2f1_complement(Complex a, Complex b, Complex c, double y,
                             const Hyp2F1Options& opts) {
    if (!(y > 0.0 && y <= 1.0)) {
        std::ostringstream os;
        os << "2F1 complement outside (0, 1]: " << y;
        throw DomainError(os.str());
    }
    const double x = 1.0 - y;
    if (x <= opts.x_switch)
        return gauss_2f1_series(a, b, c, x, opts);
    return connection(a, b, c, y, std::log(y), opts);
}

Complex gauss_2f1(Complex a, Complex b, Complex c, double x, const Hyp2F1Options& opts) {
    if (x <= opts.x_switch)
        return gauss_2f1_series(a, b, c, x, opts);
    return gauss_2f1_connection(a, b, c, x, opts);
}

} // namespace kgscat::specfun
