// Quadrature side of the verification oracle. This translation unit must not
// call twophase::sine_power_integral / cap_integrals / unit_ball_volume: the
// whole point is that every number here reaches the same formulas through an
// independent numerical route.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "twophase/verification_oracle.hpp"

namespace twophase::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Adaptive Simpson with Richardson correction.
double simpson_rec(const std::function<double(double)>& f, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    const double err = (refined - whole) / 15.0;
    if (std::abs(err) <= tol) return refined + err;
    if (depth <= 0)
        throw std::runtime_error("adaptive_simpson: recursion depth exceeded before tolerance");
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-13, int max_depth = 60) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double golden_minimize(const std::function<double(double)>& f, double lo, double hi, int iters,
                       double* best_x, double* best_f) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - (hi - lo) * invphi;
    double d = lo + (hi - lo) * invphi;
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * invphi;
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * invphi;
            fd = f(d);
        }
    }
    const double x = fc < fd ? c : d;
    const double v = std::min(fc, fd);
    if (best_x) *best_x = x;
    if (best_f) *best_f = v;
    return x;
}

}  // namespace

double reference_sine_integral(int n, double a, double b) {
    if (n < 0)
        throw std::domain_error("reference_sine_integral: exponent must be nonnegative");
    if (!(a >= 0.0 && b <= kPi && a <= b))
        throw std::domain_error("reference_sine_integral: need 0 <= a <= b <= pi");
    if (n == 0) return b - a;
    return adaptive_simpson([n](double t) { return std::pow(std::sin(t), n); }, a, b);
}

double reference_unit_ball_volume(int d) {
    if (d < 1)
        throw std::domain_error("reference_unit_ball_volume: dimension must be >= 1");
    double v = 1.0;  // 0-ball
    for (int k = 1; k <= d; ++k) v *= reference_sine_integral(k, 0.0, kPi);
    return v;
}

double cap_volume_slab(double R, double angle, Side side, int dim) {
    if (!(R > 0.0) || dim < 2 || !(angle > 0.0 && angle < kPi))
        throw std::domain_error("cap_volume_slab: bad arguments");
    const double omega = reference_unit_ball_volume(dim - 1);
    const double center = -R * std::cos(angle);           // same for both sides
    const double pole = (side == Side::Left) ? center - R : center + R;
    const double x_lo = (side == Side::Left) ? pole : 0.0;
    const double x_hi = (side == Side::Left) ? 0.0 : pole;
    const double ex = 0.5 * (dim - 1);
    const int n = 1'000'000;
    const double h = (x_hi - x_lo) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = x_lo + (i + 0.5) * h;
        const double u = x - center;
        sum += std::pow(std::max(R * R - u * u, 0.0), ex);
    }
    return omega * sum * h;
}

double cap_perimeter_generatrix(double R, double angle, Side side, int dim) {
    if (!(R > 0.0) || dim < 2 || !(angle > 0.0 && angle < kPi))
        throw std::domain_error("cap_perimeter_generatrix: bad arguments");
    const double omega = reference_unit_ball_volume(dim - 1);
    const double t_lo = (side == Side::Left) ? angle : 0.0;
    const double t_hi = (side == Side::Left) ? kPi : angle;
    // Surface-of-revolution element along the generatrix arc: the height is
    // R sin(theta) and the arc length element is R dtheta.
    const auto f = [&](double t) { return std::pow(R * std::sin(t), dim - 2) * R; };
    return (dim - 1) * omega * adaptive_simpson(f, t_lo, t_hi);
}

namespace {

// Reduced two-angle cost with all integrals by quadrature. Radii are forced
// by the volume constraints via the N-th root formula.
class ReducedCost {
public:
    explicit ReducedCost(const ProblemParams& p)
        : p_(p), omega_(reference_unit_ball_volume(p.dim - 1)) {}

    struct SideEval {
        double radius;
        double lateral;  // rho * H^{N-1}(Gamma)
        double trace;    // (R sin(angle))^{N-1}
    };

    SideEval eval_side(double angle, Side side) const {
        const int N = p_.dim;
        const double V = (side == Side::Left) ? p_.V_minus : p_.V_plus;
        const double rho = (side == Side::Left) ? p_.rho_minus : p_.rho_plus;
        const double a = (side == Side::Left) ? angle : 0.0;
        const double b = (side == Side::Left) ? kPi : angle;
        const double I = reference_sine_integral(N, a, b);
        const double J = reference_sine_integral(N - 2, a, b);
        SideEval s;
        s.radius = std::pow(V / (rho * omega_ * I), 1.0 / N);
        s.lateral = rho * (N - 1) * omega_ * std::pow(s.radius, N - 1) * J;
        s.trace = std::pow(s.radius * std::sin(angle), N - 1);
        return s;
    }

    // Trace only; skips the J quadrature (used heavily by the kink polish).
    double trace_side(double angle, Side side) const {
        const int N = p_.dim;
        const double V = (side == Side::Left) ? p_.V_minus : p_.V_plus;
        const double rho = (side == Side::Left) ? p_.rho_minus : p_.rho_plus;
        const double a = (side == Side::Left) ? angle : 0.0;
        const double b = (side == Side::Left) ? kPi : angle;
        const double I = reference_sine_integral(N, a, b);
        const double radius = std::pow(V / (rho * omega_ * I), 1.0 / N);
        return std::pow(radius * std::sin(angle), N - 1);
    }

    double value(double alpha, double beta) const {
        const SideEval l = eval_side(alpha, Side::Left);
        const SideEval r = eval_side(beta, Side::Right);
        return l.lateral + r.lateral + p_.gamma * omega_ * std::abs(l.trace - r.trace);
    }

    double omega() const { return omega_; }
    const ProblemParams& params() const { return p_; }

private:
    ProblemParams p_;
    double omega_;
};

}  // namespace

GridMinimumResult grid_minimize(const ProblemParams& p, int coarse, int refine_iters) {
    p.validate();
    if (coarse < 64)
        throw std::invalid_argument("grid_minimize: coarse grid must be >= 64 per axis");
    if (refine_iters < 20)
        throw std::invalid_argument("grid_minimize: refine_iters must be >= 20");

    const ReducedCost cost(p);
    const double cell = kPi / coarse;

    // Per-axis tables; the scan itself is then O(coarse^2) arithmetic.
    std::vector<ReducedCost::SideEval> left(coarse), right(coarse);
    for (int i = 0; i < coarse; ++i) {
        const double angle = (i + 0.5) * cell;
        left[i] = cost.eval_side(angle, Side::Left);
        right[i] = cost.eval_side(angle, Side::Right);
    }

    int best_i = 0, best_j = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < coarse; ++i) {
        for (int j = 0; j < coarse; ++j) {
            const double v = left[i].lateral + right[j].lateral +
                             p.gamma * cost.omega() * std::abs(left[i].trace - right[j].trace);
            if (v < best_val) {
                best_val = v;
                best_i = i;
                best_j = j;
            }
        }
    }

    const double margin = 0.5 * cell * 1e-3;
    const auto clamp_angle = [&](double t) {
        return std::clamp(t, margin, kPi - margin);
    };

    double alpha_hat = (best_i + 0.5) * cell;
    double beta_hat = (best_j + 0.5) * cell;
    double f_hat = best_val;

    // Track the best point ever evaluated; golden section discards interior
    // information and the kink polish below evaluates off-lattice points.
    const auto consider = [&](double a, double b, double v) {
        if (v < f_hat) {
            f_hat = v;
            alpha_hat = a;
            beta_hat = b;
        }
    };

    for (int sweep = 0; sweep < 4; ++sweep) {
        double x, v;
        golden_minimize([&](double a) { return cost.value(a, beta_hat); },
                        clamp_angle(alpha_hat - cell), clamp_angle(alpha_hat + cell),
                        refine_iters, &x, &v);
        consider(x, beta_hat, v);
        alpha_hat = x;
        golden_minimize([&](double b) { return cost.value(alpha_hat, b); },
                        clamp_angle(beta_hat - cell), clamp_angle(beta_hat + cell), refine_iters,
                        &x, &v);
        consider(alpha_hat, x, v);
        beta_hat = x;
    }

    // Coordinate steps stall on the trace-coincidence kink (each one-sided
    // derivative pushes back), possibly several cells away from the true
    // minimum along it. If we ended up on the kink, slide along the manifold
    // T-(alpha) = T+(beta), re-centering and widening the search bracket
    // until the minimizer is interior: beta is recovered from alpha by
    // bisection on the strictly decreasing right trace.
    const auto left_eval = cost.eval_side(alpha_hat, Side::Left);
    const auto right_eval = cost.eval_side(beta_hat, Side::Right);
    const double trace_scale = left_eval.trace + right_eval.trace;
    if (std::abs(left_eval.trace - right_eval.trace) <= 1e-4 * trace_scale) {
        double beta_center = beta_hat;
        const auto beta_match = [&](double alpha) -> double {
            const double target = cost.trace_side(alpha, Side::Left);
            double lo = clamp_angle(beta_center - 2.0 * cell);
            double hi = clamp_angle(beta_center + 2.0 * cell);
            const auto trace_at = [&](double b) { return cost.trace_side(b, Side::Right); };
            // Expand until the decreasing trace brackets the target.
            while (trace_at(lo) < target && lo > margin * 2.0)
                lo = clamp_angle(lo - 2.0 * cell);
            while (trace_at(hi) > target && hi < kPi - margin * 2.0)
                hi = clamp_angle(hi + 2.0 * cell);
            for (int it = 0; it < 50; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (trace_at(mid) > target)
                    lo = mid;
                else
                    hi = mid;
            }
            return 0.5 * (lo + hi);
        };

        double center = alpha_hat;
        double width = cell;
        for (int round = 0; round < 12; ++round) {
            const double lo = clamp_angle(center - width);
            const double hi = clamp_angle(center + width);
            double x, v;
            golden_minimize(
                [&](double a) {
                    const double b = beta_match(a);
                    return cost.value(a, b);
                },
                lo, hi, refine_iters, &x, &v);
            const double b = beta_match(x);
            consider(x, b, v);
            center = x;
            beta_center = b;
            if (std::min(x - lo, hi - x) >= 0.1 * (hi - lo)) break;  // interior minimum
            width = std::min(2.0 * width, kPi / 4.0);
        }
    }

    return {alpha_hat, beta_hat, f_hat};
}

}  // namespace twophase::oracle
