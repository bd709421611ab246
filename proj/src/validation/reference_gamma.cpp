#include <complex>
#include <numbers>

#include "kgscat/validation.hpp"

namespace kgscat::validation {

Complex reference_log_gamma(Complex z_in, int terms) {
    using LC = std::complex<long double>;
    constexpr long double euler_gamma = 0.577215664901532860606512090082402431L;
    const LC z(z_in.real(), z_in.imag());
    const auto f = [&](long double x) { return z / x - std::log(LC(1.0L) + z / x); };

    LC sum = -euler_gamma * z - std::log(z);
    for (int k = 1; k <= terms; ++k)
        sum += f(static_cast<long double>(k));

    // Euler-Maclaurin for sum_{k > N} f(k).
    const long double n = terms;
    const LC integral = (n + z) * std::log(LC(1.0L) + z / n) - z;
    const LC d1 = -z / (n * n) + 1.0L / n - 1.0L / (n + z);
    const LC d3 = -6.0L * z / (n * n * n * n) + 2.0L / (n * n * n) -
                  2.0L / ((n + z) * (n + z) * (n + z));
    sum += integral - f(n) / 2.0L - d1 / 12.0L + d3 / 720.0L;
    return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

} // namespace kgscat::validation
