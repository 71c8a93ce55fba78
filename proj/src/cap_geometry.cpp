#include "twophase/cap_geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace twophase {

namespace {
constexpr double kPi = 3.14159265358979323846;

double signed_volume(double V, double rho, double omega, double I, int dim) {
    return std::pow(V / (rho * omega * I), 1.0 / dim);
}
}  // namespace

void ProblemParams::validate() const {
    if (dim < 2)
        throw std::domain_error("ProblemParams: dimension must be >= 2, got " +
                                std::to_string(dim));
    if (!(rho_minus > 0.0) || !(rho_plus > 0.0))
        throw std::domain_error("ProblemParams: densities must be positive");
    if (!(V_minus > 0.0) || !(V_plus > 0.0))
        throw std::domain_error("ProblemParams: weighted volumes must be positive");
    if (!(gamma >= 0.0))
        throw std::domain_error("ProblemParams: interface cost must be nonnegative");
}

Candidate make_candidate(double alpha, double beta, double R_minus, double R_plus,
                         CandidateKind requested) {
    Candidate c{alpha, beta, R_minus, R_plus, requested};
    if (std::abs(c.trace_minus() - c.trace_plus()) <= trace_tolerance(R_minus, R_plus))
        c.kind = CandidateKind::TypeI;
    return c;
}

double cap_volume(double R, double angle, Side side, int dim) {
    if (!(R > 0.0)) throw std::domain_error("cap_volume: radius must be positive");
    const CapIntegrals ij = cap_integrals(angle, dim, side);
    return unit_ball_volume(dim - 1) * std::pow(R, dim) * ij.I;
}

double cap_perimeter(double R, double angle, Side side, int dim) {
    if (!(R > 0.0)) throw std::domain_error("cap_perimeter: radius must be positive");
    const CapIntegrals ij = cap_integrals(angle, dim, side);
    return (dim - 1) * unit_ball_volume(dim - 1) * std::pow(R, dim - 1) * ij.J;
}

double interface_area(double R_minus, double alpha, double R_plus, double beta, int dim) {
    if (dim < 2) throw std::domain_error("interface_area: dimension must be >= 2");
    const double tm = std::pow(R_minus * std::sin(alpha), dim - 1);
    const double tp = std::pow(R_plus * std::sin(beta), dim - 1);
    return unit_ball_volume(dim - 1) * std::abs(tm - tp);
}

CostBreakdown total_cost(const Candidate& c, const ProblemParams& p) {
    p.validate();
    CostBreakdown out;
    out.perim_minus = p.rho_minus * cap_perimeter(c.R_minus, c.alpha, Side::Left, p.dim);
    out.perim_plus = p.rho_plus * cap_perimeter(c.R_plus, c.beta, Side::Right, p.dim);
    out.interface = (c.kind == CandidateKind::TypeI)
                        ? 0.0
                        : p.gamma * interface_area(c.R_minus, c.alpha, c.R_plus, c.beta, p.dim);
    out.total = out.perim_minus + out.perim_plus + out.interface;
    return out;
}

double radius_from_volume(double angle, Side side, const ProblemParams& p) {
    p.validate();
    const CapIntegrals ij = cap_integrals(angle, p.dim, side);
    const double V = (side == Side::Left) ? p.V_minus : p.V_plus;
    const double rho = (side == Side::Left) ? p.rho_minus : p.rho_plus;
    const double R = signed_volume(V, rho, unit_ball_volume(p.dim - 1), ij.I, p.dim);
    const double back = rho * cap_volume(R, angle, side, p.dim);
    if (std::abs(back - V) > 1e-12 * V)
        throw std::runtime_error("radius_from_volume: volume round trip failed");
    return R;
}

double dF_dalpha(const Candidate& c, const ProblemParams& p, int sign_branch) {
    p.validate();
    if (sign_branch != 1 && sign_branch != -1)
        throw std::invalid_argument("dF_dalpha: sign_branch must be +1 or -1");
    // The derivative is only meaningful along the volume-constrained family.
    const double back_m = p.rho_minus * cap_volume(c.R_minus, c.alpha, Side::Left, p.dim);
    const double back_p = p.rho_plus * cap_volume(c.R_plus, c.beta, Side::Right, p.dim);
    if (std::abs(back_m - p.V_minus) > 1e-9 * p.V_minus ||
        std::abs(back_p - p.V_plus) > 1e-9 * p.V_plus)
        throw std::invalid_argument("dF_dalpha: candidate violates the volume constraints");

    const int N = p.dim;
    const CapIntegrals ij = cap_integrals(c.alpha, N, Side::Left);
    const double s = std::sin(c.alpha), cs = std::cos(c.alpha);
    const double omega = unit_ball_volume(N - 1);
    const double prefactor = (N - 1) * omega * std::pow(c.R_minus, N - 1) * std::pow(s, N - 2) *
                             ((N - 1) * ij.J * cs + std::pow(s, N - 1)) / (N * ij.I);
    return prefactor * (sign_branch * p.gamma - p.rho_minus * cs);
}

CrossSection cross_section(const Candidate& c, int resolution) {
    if (resolution < 8)
        throw std::invalid_argument("cross_section: resolution must be >= 8");

    CrossSection cs;
    const auto sample = [](std::vector<CrossSection::Point>& out, double center, double R,
                           double theta_from, double theta_to, int segments) {
        out.reserve(segments + 1);
        for (int k = 0; k <= segments; ++k) {
            const double t = theta_from + (theta_to - theta_from) * k / segments;
            out.push_back({center + R * std::cos(t), R * std::sin(t), t});
        }
    };
    // Full generatrix: theta in [alpha, 2pi - alpha] sweeps from the upper
    // trace endpoint through the left pole to the mirrored lower endpoint.
    sample(cs.left, c.center_minus(), c.R_minus, c.alpha, 2.0 * kPi - c.alpha, 2 * resolution);
    // Right side runs top -> pole -> bottom as theta decreases from beta to -beta.
    sample(cs.right, c.center_plus(), c.R_plus, c.beta, -c.beta, 2 * resolution);

    const double tm = c.trace_minus(), tp = c.trace_plus();
    cs.interface_inner = std::min(tm, tp);
    cs.interface_outer = std::max(tm, tp);
    cs.interface_empty = (c.kind == CandidateKind::TypeI);
    return cs;
}

}  // namespace twophase
