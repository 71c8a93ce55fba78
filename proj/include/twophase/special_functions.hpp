#pragma once

// Closed-form evaluation of the sine-power integrals W_n(a,b) = \int_a^b sin^n(t) dt
// and unit-ball volumes. Everything here is exact up to rounding: the integrals
// come from the standard reduction recurrence, the volumes from the half-integer
// Gamma recurrence. No numerical quadrature on this path (the independent
// quadrature lives in the verification oracle).

namespace twophase {

enum class Side { Left, Right };

/// W_n(a,b) = \int_a^b sin^n(t) dt for integer n >= 0 and 0 <= a <= b <= pi.
///
/// Evaluated by the reduction recurrence
///   W_n = [cos(a) sin^{n-1}(a) - cos(b) sin^{n-1}(b)] / n + (n-1)/n * W_{n-2},
/// seeded with W_0 = b - a and W_1 = cos(a) - cos(b). Short intervals pinned
/// at 0 or pi switch to the equivalent power series in sin(b), where the
/// recurrence would cancel catastrophically.
/// Throws std::domain_error on n < 0 or angles outside the admissible range.
double sine_power_integral(int n, double a, double b);

/// The pair of lateral integrals attached to one cap angle.
struct CapIntegrals {
    double I;  // \int sin^N
    double J;  // \int sin^{N-2}
};

/// I and J for one side: Side::Left integrates over [angle, pi], Side::Right
/// over [0, angle]. The angle must be strictly inside (0, pi) -- a cap can
/// never be a whole sphere -- and dim >= 2. Both results are strictly positive.
CapIntegrals cap_integrals(double angle, int dim, Side side);

/// Volume of the unit ball in dimension d >= 1, i.e. pi^{d/2} / Gamma(d/2 + 1),
/// with the Gamma factor built from Gamma(x+1) = x Gamma(x) seeded at
/// Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
double unit_ball_volume(int d);

}  // namespace twophase
