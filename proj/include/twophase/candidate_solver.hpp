#pragma once

#include "twophase/cap_geometry.hpp"

// Construction of the three closed-form candidates and of the threshold
// interface cost gamma* at which the type II candidate degenerates into the
// type I one. gamma* is the unique root of the strictly decreasing trace
// mismatch function L.

namespace twophase {

/// Result of the gamma* root solve.
struct ThresholdResult {
    double gamma_star;  // in (-min(rho-, rho+), min(rho-, rho+)); sign follows V-/rho- - V+/rho+
    double alpha_star;  // arccos(gamma* / rho-)
    double beta_star;   // arccos(gamma* / rho+)
    int iterations;     // bisection steps performed
    double residual;    // |L(gamma*)|
};

/// L(g) = V-/(omega rho-) L1(alpha(g)) - V+/(omega rho+) L2(beta(g)) with
/// alpha(g) = arccos(g/rho-), beta(g) = arccos(g/rho+),
/// L1(a) = sin^N(a)/I-(a), L2(b) = sin^N(b)/I+(b).
/// Strictly decreasing on its domain |g| < min(rho-, rho+); throws
/// std::domain_error at or beyond the endpoints. Its root is gamma*, and
/// sign(L(g)) tells which trace radius of the decoupled candidate is larger.
double L_value(double gamma, const ProblemParams& p);

/// Bisection for the root of L over (-m, m), m = min(rho-, rho+), starting
/// from the bracket (-m + eps, m - eps) with eps = 1e-12 m and expanding
/// geometrically toward an endpoint if that end's sign is missing. Terminates
/// when the bracket width is <= 1e-13 m. Failure to bracket a sign change is
/// an internal invariant violation and throws std::runtime_error.
ThresholdResult gamma_star(const ProblemParams& p);

/// The decoupled type II candidate for a signed interface cost:
///   alpha = arccos(signed_gamma/rho-), beta = arccos(signed_gamma/rho+),
/// radii from radius_from_volume. Pass +gamma for the candidate whose traces
/// satisfy the plus transmission law and -gamma for the minus one. Tagged
/// TypeIIPlus / TypeIIMinus by the sign, downgraded to TypeI if the trace
/// radii coincide. Throws std::domain_error when |signed_gamma| >= min(rho±)
/// (the candidate does not exist there).
Candidate candidate_type_II(double signed_gamma, const ProblemParams& p);

/// The unique type I candidate: candidate_type_II evaluated at gamma*.
/// Its trace radii agree to trace_tolerance and it carries the TypeI tag.
Candidate candidate_type_I(const ProblemParams& p);

}  // namespace twophase
