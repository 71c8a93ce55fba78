#pragma once

#include <cmath>
#include <vector>

#include "twophase/special_functions.hpp"

// The candidate data model: two spherical caps glued along the hyperplane
// {x1 = 0}, together with all closed-form measures (volumes, lateral
// perimeters, interface area, the total weighted cost and its alpha
// derivative) and the planar cross-section geometry.
//
// Conventions. A left cap with radius R- and incidence angle alpha is the
// ball centered at (-R- cos(alpha), 0, ..., 0) intersected with {x1 < 0};
// its generatrix is theta -> (-R- cos(alpha) + R- cos(theta), R- sin(theta))
// for theta in [alpha, pi]. The right cap mirrors this with [0, beta] and
// center (-R+ cos(beta), 0, ..., 0). The center convention is not written
// down anywhere authoritative; it is inferred from the Cavalieri slab form
// of the volume and is cross-validated against slab quadrature in the
// verification oracle.

namespace twophase {

/// One problem instance. Volumes are the *weighted* volumes V± = rho± |Omega±|.
struct ProblemParams {
    int dim = 2;              // ambient dimension N >= 2
    double rho_minus = 1.0;   // density on {x1 < 0}, > 0
    double rho_plus = 1.0;    // density on {x1 > 0}, > 0
    double V_minus = 1.0;     // weighted volume constraint on the left, > 0
    double V_plus = 1.0;      // weighted volume constraint on the right, > 0
    double gamma = 0.0;       // interface cost, >= 0

    /// Throws std::domain_error if any field is out of range.
    void validate() const;
};

enum class CandidateKind { TypeI, TypeIIPlus, TypeIIMinus };

/// Absolute tolerance used for the trace-coincidence (type I) test.
inline double trace_tolerance(double R_minus, double R_plus) {
    return 1e-9 * std::max(R_minus, R_plus);
}

/// A two-cap configuration. kind == TypeI iff the two trace radii
/// R- sin(alpha) and R+ sin(beta) coincide within trace_tolerance.
struct Candidate {
    double alpha;      // left incidence angle, in (0, pi)
    double beta;       // right incidence angle, in (0, pi)
    double R_minus;    // left radius, > 0
    double R_plus;     // right radius, > 0
    CandidateKind kind;

    double center_minus() const { return -R_minus * std::cos(alpha); }
    double center_plus() const { return -R_plus * std::cos(beta); }
    double trace_minus() const { return R_minus * std::sin(alpha); }
    double trace_plus() const { return R_plus * std::sin(beta); }
};

/// Builds a candidate, downgrading the requested type II tag to TypeI when the
/// trace radii coincide within trace_tolerance.
Candidate make_candidate(double alpha, double beta, double R_minus, double R_plus,
                         CandidateKind requested);

/// The three weighted cost terms and their sum.
struct CostBreakdown {
    double perim_minus;  // rho- * H^{N-1}(Gamma-)
    double perim_plus;   // rho+ * H^{N-1}(Gamma+)
    double interface;    // gamma * H^{N-1}(Gamma0); exactly 0 for TypeI
    double total;        // sum of the three terms
};

/// omega * R^N * I±(angle): the Lebesgue measure of one cap.
double cap_volume(double R, double angle, Side side, int dim);

/// (N-1) * omega * R^{N-1} * J±(angle): the lateral boundary measure of one cap.
double cap_perimeter(double R, double angle, Side side, int dim);

/// omega * |(R- sin alpha)^{N-1} - (R+ sin beta)^{N-1}|: the spherical-shell
/// measure of the interface. Zero iff the trace radii match exactly.
double interface_area(double R_minus, double alpha, double R_plus, double beta, int dim);

/// Assembles the full weighted cost of a candidate. For a TypeI candidate the
/// interface term is identically zero (the cap boundaries coincide; the raw
/// shell formula would only report root-finding noise).
CostBreakdown total_cost(const Candidate& c, const ProblemParams& p);

/// The unique radius R with rho± * cap_volume(R, angle, side, N) = V±,
/// i.e. R = (V / (rho * omega * I(angle)))^{1/N}. The round trip through
/// cap_volume is enforced to 1e-12 relative.
double radius_from_volume(double angle, Side side, const ProblemParams& p);

/// Partial derivative in alpha of the reduced cost F(alpha, beta) along the
/// volume-constrained family, with radii forced by radius_from_volume:
///
///   dF/dalpha = A(alpha) * (sign_branch * gamma - rho- * cos(alpha)),
///   A(alpha)  = (N-1) omega R-^{N-1} sin^{N-2}(alpha)
///               * ((N-1) J- cos(alpha) + sin^{N-1}(alpha)) / (N I-)  > 0.
///
/// sign_branch (+1 or -1) selects the active branch of the absolute value in
/// the interface term: +1 when R- sin(alpha) > R+ sin(beta). It is explicit
/// because at a type I configuration the cost is not differentiable and both
/// one-sided derivatives are needed. Throws std::invalid_argument when the
/// candidate's radii do not satisfy the volume constraints.
double dF_dalpha(const Candidate& c, const ProblemParams& p, int sign_branch);

/// Planar cross-section of a candidate: full generatrix polylines (upper half
/// mirrored through the axis of revolution) plus the interface segment.
struct CrossSection {
    struct Point {
        double x1;
        double x2;
        double theta;  // generatrix parameter the point was sampled at
    };
    std::vector<Point> left;   // from (0, h-) through the left pole to (0, -h-)
    std::vector<Point> right;  // from (0, h+) through the right pole to (0, -h+)
    double interface_inner;    // min trace radius
    double interface_outer;    // max trace radius
    bool interface_empty;      // true for TypeI candidates
};

/// Samples the cross-section with `resolution` segments per half-generatrix
/// (so 2*resolution + 1 vertices per chain). resolution must be >= 8.
CrossSection cross_section(const Candidate& c, int resolution);

}  // namespace twophase
