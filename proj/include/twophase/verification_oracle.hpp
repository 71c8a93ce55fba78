#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "twophase/classifier.hpp"

// Independent numerical checks. Everything on the brute-force side
// (reference_sine_integral, the slab/generatrix quadratures, grid_minimize,
// polygon_flow_2d) is built on adaptive Simpson quadrature and discrete
// geometry only -- none of it calls the closed-form recurrence of
// special_functions, so agreement with the analytic path is evidence, not
// circularity. compare() is the one place both sides meet.

namespace twophase::oracle {

/// \int_a^b sin^n(t) dt by adaptive Simpson with recursion tolerance 1e-13
/// (absolute error <= 1e-12). Throws std::runtime_error if the recursion
/// depth limit is hit before the tolerance is met.
double reference_sine_integral(int n, double a, double b);

/// Unit-ball volume by the slice recurrence V_d = V_{d-1} * \int_0^pi sin^d,
/// with every factor evaluated by quadrature.
double reference_unit_ball_volume(int d);

/// Cap volume by midpoint-rule slab integration over x1 (Cavalieri slices),
/// using the derived center convention. Accurate to ~1e-9 relative.
double cap_volume_slab(double R, double angle, Side side, int dim);

/// Cap lateral measure by quadrature of the surface-of-revolution element
/// along the generatrix arc. Accurate to ~1e-11 relative.
double cap_perimeter_generatrix(double R, double angle, Side side, int dim);

/// Brute-force minimizer of the reduced two-angle cost.
struct GridMinimumResult {
    double alpha;
    double beta;
    double value;
};

/// Coarse grid over (0,pi)^2 (endpoints excluded by a half-cell margin),
/// followed by coordinate-wise golden-section refinement around the best
/// cell and, when the refined point sits on the trace-coincidence kink, a
/// golden-section polish along the kink manifold (coordinate steps alone
/// stall there). All integrals are quadrature-based. Requires coarse >= 64
/// and refine_iters >= 20. Deterministic: grid ties break toward the
/// smallest alpha, then the smallest beta.
GridMinimumResult grid_minimize(const ProblemParams& p, int coarse, int refine_iters);

/// Analytic-vs-brute-force comparison record.
struct OracleReport {
    ProblemParams params;
    double analytic_cost;
    double brute_cost;
    double arg_gap;   // max(|alpha_hat - alpha|, |beta_hat - beta|)
    double cost_gap;  // |analytic - brute| / analytic
    bool passed;      // cost_gap <= 1e-5 and brute >= analytic * (1 - 1e-5)
};

/// Runs classify and grid_minimize on the same instance and fills the report.
OracleReport compare(const ProblemParams& p, int coarse = 256, int refine_iters = 60);

/// The seeded random instance distribution used by the verification sweep:
/// N in {2,3,4,7}, rho± and V± log-uniform over [0.1, 10], gamma uniform
/// over [0, 1.5 * min(rho-, rho+)].
std::vector<ProblemParams> sample_problems(std::uint64_t seed, int count);

using Vec2 = std::array<double, 2>;

/// Discrete state of the 2-d polygon descent. Each chain is an ordered vertex
/// list with both endpoints on the axis {x1 = 0}: the left chain runs from
/// (0, top) through {x1 <= 0} to (0, bottom), the right chain the same through
/// {x1 >= 0}. The region is the union of the two chain enclosures.
struct PolygonState {
    std::vector<Vec2> left;
    std::vector<Vec2> right;
    double multiplier_left;   // area-constraint multiplier of the last step
    double multiplier_right;
    double step;              // last accepted step size
};

struct PolygonFlowOptions {
    std::uint64_t seed = 1;         // for the 1% radial perturbation of the seeds
    double noise = 0.01;
    std::string snapshot_path;      // empty = no CSV frames
    int snapshot_every = 0;         // dump every k accepted steps when > 0
};

struct PolygonFlowResult {
    PolygonState state;
    double circle_fit_residual_left;   // max orthogonal deviation / fitted radius
    double circle_fit_residual_right;
    double fitted_radius_left;
    double fitted_radius_right;
    std::vector<double> cost_trace;    // cost after projection, per accepted step
    double final_cost;
    double gradient_norm;              // projected-gradient norm at exit
    bool converged;                    // gradient norm fell below 1e-8
    bool stalled;                      // line search failed above the threshold
    int steps;
};

/// Projected gradient descent on the discrete weighted perimeter of two
/// vertex chains (N = 2), with the two area constraints restored exactly
/// after every trial step and a backtracking line search that guarantees a
/// nonincreasing cost trace. Initialized from two half-disk chains perturbed
/// by `noise` relative radial noise. Requires p.dim == 2 and
/// n_vertices >= 32 per chain.
PolygonFlowResult polygon_flow_2d(const ProblemParams& p, int n_vertices, int max_steps,
                                  const PolygonFlowOptions& opts = {});

}  // namespace twophase::oracle
