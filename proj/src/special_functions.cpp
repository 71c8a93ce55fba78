#include "twophase/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twophase {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Below this interval length the upward reduction recurrence for an interval
// pinned at 0 (or at pi) cancels catastrophically: the result is of order
// b^{n+1} while the recurrence subtracts terms of order b^{n-1}. The series
// in s = sin(b),
//   int_0^b sin^n = sum_j ((2j-1)!!/(2j)!!) s^{n+2j+1} / (n+2j+1),
// converges geometrically in s^2 there and keeps full relative accuracy.
constexpr double kSeriesCut = 0.6;

double sine_power_series_from_zero(int n, double b) {
    const double s = std::sin(b);
    const double s2 = s * s;
    double coeff = 1.0;  // (2j-1)!! / (2j)!!
    double s_pow = std::pow(s, n + 1);
    double sum = s_pow / (n + 1);
    for (int j = 1; j < 200; ++j) {
        coeff *= (2.0 * j - 1.0) / (2.0 * j);
        s_pow *= s2;
        const double term = coeff * s_pow / (n + 2 * j + 1);
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sum;
}
}

double sine_power_integral(int n, double a, double b) {
    if (n < 0)
        throw std::domain_error("sine_power_integral: exponent must be nonnegative, got " +
                                std::to_string(n));
    if (!(a >= 0.0 && b <= kPi && a <= b))
        throw std::domain_error("sine_power_integral: need 0 <= a <= b <= pi, got a=" +
                                std::to_string(a) + " b=" + std::to_string(b));

    const double w0 = b - a;
    if (n == 0) return w0;

    if (a == 0.0 && b <= kSeriesCut) return sine_power_series_from_zero(n, b);
    if (b == kPi && kPi - a <= kSeriesCut) return sine_power_series_from_zero(n, kPi - a);

    const double ca = std::cos(a), cb = std::cos(b);
    const double sa = std::sin(a), sb = std::sin(b);
    const double w1 = ca - cb;
    if (n == 1) return w1 < 0.0 ? 0.0 : w1;

    double w = (n % 2 == 0) ? w0 : w1;
    double sa_pow = (n % 2 == 0) ? sa : sa * sa;  // sin^{k-1}(a) for the first k below
    double sb_pow = (n % 2 == 0) ? sb : sb * sb;
    for (int k = (n % 2 == 0) ? 2 : 3; k <= n; k += 2) {
        w = (ca * sa_pow - cb * sb_pow) / k + (double(k - 1) / k) * w;
        sa_pow *= sa * sa;
        sb_pow *= sb * sb;
    }
    // The exact value is nonnegative; near-cancellation can leave -1e-17.
    return w < 0.0 ? 0.0 : w;
}

CapIntegrals cap_integrals(double angle, int dim, Side side) {
    if (dim < 2)
        throw std::domain_error("cap_integrals: dimension must be >= 2, got " +
                                std::to_string(dim));
    if (!(angle > 0.0 && angle < kPi))
        throw std::domain_error("cap_integrals: angle must lie strictly inside (0, pi), got " +
                                std::to_string(angle));
    if (side == Side::Left)
        return {sine_power_integral(dim, angle, kPi), sine_power_integral(dim - 2, angle, kPi)};
    return {sine_power_integral(dim, 0.0, angle), sine_power_integral(dim - 2, 0.0, angle)};
}

double unit_ball_volume(int d) {
    if (d < 1)
        throw std::domain_error("unit_ball_volume: dimension must be >= 1, got " +
                                std::to_string(d));
    // Gamma(d/2 + 1) by Gamma(x+1) = x Gamma(x) from Gamma(1) = 1 resp.
    // Gamma(1/2) = sqrt(pi).
    double g, x;
    if (d % 2 == 0) {
        g = 1.0;
        x = 1.0;
    } else {
        g = std::sqrt(kPi);
        x = 0.5;
    }
    const double target = 0.5 * d + 1.0;
    while (x < target - 0.25) {
        g *= x;
        x += 1.0;
    }
    return std::pow(kPi, 0.5 * d) / g;
}

}  // namespace twophase
