#include "twophase/candidate_solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace twophase {

double L_value(double gamma, const ProblemParams& p) {
    p.validate();
    const double m = std::min(p.rho_minus, p.rho_plus);
    if (!(std::abs(gamma) < m))
        throw std::domain_error("L_value: |gamma| must be < min(rho-, rho+)");

    const int N = p.dim;
    const double alpha = std::acos(gamma / p.rho_minus);
    const double beta = std::acos(gamma / p.rho_plus);
    const double I_minus = cap_integrals(alpha, N, Side::Left).I;
    const double I_plus = cap_integrals(beta, N, Side::Right).I;
    const double L1 = std::pow(std::sin(alpha), N) / I_minus;
    const double L2 = std::pow(std::sin(beta), N) / I_plus;
    const double omega = unit_ball_volume(N - 1);
    return p.V_minus / (omega * p.rho_minus) * L1 - p.V_plus / (omega * p.rho_plus) * L2;
}

ThresholdResult gamma_star(const ProblemParams& p) {
    p.validate();
    const double m = std::min(p.rho_minus, p.rho_plus);

    // L diverges to +inf toward -m when rho- attains the min (alpha -> pi)
    // and stays positive otherwise; the picture is mirrored at +m. If the
    // initial margin misses a sign, halve it toward that endpoint.
    const auto bracket_end = [&](double sign, bool want_positive) -> double {
        double eps = 1e-12 * m;
        const double eps_min = 8.0 * m * 2.220446049250313e-16;
        for (;;) {
            const double g = sign * (m - eps);
            const double val = L_value(g, p);
            if (want_positive ? (val > 0.0) : (val < 0.0)) return g;
            if (val == 0.0) return g;  // exact root on the margin: bisection finishes fast
            if (eps <= eps_min)
                throw std::runtime_error(
                    "gamma_star: failed to bracket a sign change (invariant violation)");
            eps *= 0.5;
        }
    };

    double lo = bracket_end(-1.0, true);   // L(lo) > 0
    double hi = bracket_end(+1.0, false);  // L(hi) < 0

    const double width_tol = 1e-13 * m;
    int iterations = 0;
    while (hi - lo > width_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket exhausted in double precision
        ++iterations;
        if (L_value(mid, p) > 0.0)
            lo = mid;
        else
            hi = mid;
    }

    ThresholdResult out;
    out.gamma_star = 0.5 * (lo + hi);
    out.alpha_star = std::acos(out.gamma_star / p.rho_minus);
    out.beta_star = std::acos(out.gamma_star / p.rho_plus);
    out.iterations = iterations;
    out.residual = std::abs(L_value(out.gamma_star, p));
    return out;
}

Candidate candidate_type_II(double signed_gamma, const ProblemParams& p) {
    p.validate();
    const double m = std::min(p.rho_minus, p.rho_plus);
    if (!(std::abs(signed_gamma) < m))
        throw std::domain_error(
            "candidate_type_II: no type II candidate exists for |gamma| >= min(rho-, rho+)");

    const double alpha = std::acos(signed_gamma / p.rho_minus);
    const double beta = std::acos(signed_gamma / p.rho_plus);
    const double R_minus = radius_from_volume(alpha, Side::Left, p);
    const double R_plus = radius_from_volume(beta, Side::Right, p);
    const CandidateKind requested =
        signed_gamma >= 0.0 ? CandidateKind::TypeIIPlus : CandidateKind::TypeIIMinus;
    return make_candidate(alpha, beta, R_minus, R_plus, requested);
}

Candidate candidate_type_I(const ProblemParams& p) {
    const ThresholdResult t = gamma_star(p);
    Candidate c = candidate_type_II(t.gamma_star, p);
    if (c.kind != CandidateKind::TypeI) {
        // The root is resolved far below trace_tolerance for any admissible
        // parameters; anything else means the solver went wrong.
        const double gap = std::abs(c.trace_minus() - c.trace_plus());
        if (gap > 1e3 * trace_tolerance(c.R_minus, c.R_plus))
            throw std::runtime_error("candidate_type_I: threshold root left a trace mismatch of " +
                                     std::to_string(gap));
        c.kind = CandidateKind::TypeI;
    }
    return c;
}

}  // namespace twophase
