// Discrete probe of the cap structure at N = 2: projected gradient descent on
// the weighted length of two vertex chains glued along the axis {x1 = 0},
// with the enclosed areas pinned to V±/rho± after every trial step.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>
#include <vector>

#include "twophase/verification_oracle.hpp"

namespace twophase::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Chain = std::vector<Vec2>;

double chain_length(const Chain& c) {
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        len += std::hypot(c[i + 1][0] - c[i][0], c[i + 1][1] - c[i][1]);
    return len;
}

// Signed shoelace area of the chain closed by the (zero-contribution) axis
// segment from the last vertex back to the first.
double chain_area(const Chain& c) {
    double a = 0.0;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        a += c[i][0] * c[j][1] - c[j][0] * c[i][1];
    }
    return 0.5 * a;
}

// dA/dv with the endpoint x components masked out (endpoints slide on the axis).
Chain area_gradient(const Chain& c) {
    const std::size_t n = c.size();
    Chain g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t prev = (i + n - 1) % n;
        const std::size_t next = (i + 1) % n;
        g[i][0] = 0.5 * (c[next][1] - c[prev][1]);
        g[i][1] = 0.5 * (c[prev][0] - c[next][0]);
    }
    g[0][0] = 0.0;
    g[n - 1][0] = 0.0;
    return g;
}

Chain length_gradient(const Chain& c) {
    const std::size_t n = c.size();
    Chain g(n, {0.0, 0.0});
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double ex = c[i + 1][0] - c[i][0];
        const double ey = c[i + 1][1] - c[i][1];
        const double len = std::hypot(ex, ey);
        if (len < 1e-300) continue;
        g[i][0] -= ex / len;
        g[i][1] -= ey / len;
        g[i + 1][0] += ex / len;
        g[i + 1][1] += ey / len;
    }
    g[0][0] = 0.0;
    g[n - 1][0] = 0.0;
    return g;
}

double dot(const Chain& a, const Chain& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i][0] * b[i][0] + a[i][1] * b[i][1];
    return s;
}

// Moves the chain along direction g until its area hits the target. The
// shoelace area is a quadratic form, so the step size solves a quadratic
// exactly; a second pass mops up rounding.
bool restore_area(Chain& c, const Chain& g, double target) {
    for (int pass = 0; pass < 4; ++pass) {
        const double res = chain_area(c) - target;
        if (std::abs(res) <= 1e-13 * std::max(1.0, std::abs(target))) return true;
        const double b = dot(area_gradient(c), g);
        const double a = chain_area(g);  // quadratic coefficient of the form
        double mu;
        const double disc = b * b - 4.0 * a * res;
        if (std::abs(a) < 1e-14 * std::abs(b) || disc < 0.0) {
            if (std::abs(b) < 1e-300) return false;
            mu = -res / b;
        } else {
            // Root of smaller magnitude in the cancellation-free form.
            mu = -2.0 * res / (b + std::copysign(std::sqrt(disc), b));
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            c[i][0] += mu * g[i][0];
            c[i][1] += mu * g[i][1];
        }
    }
    return std::abs(chain_area(c) - target) <= 1e-10 * std::max(1.0, std::abs(target));
}

void clamp_side(Chain& c, int sign) {
    c[0][0] = 0.0;
    c[c.size() - 1][0] = 0.0;
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        if (sign < 0)
            c[i][0] = std::min(c[i][0], 0.0);
        else
            c[i][0] = std::max(c[i][0], 0.0);
    }
}

struct CircleFit {
    double cx, cy, r;
    double max_residual;  // max | |v - c| - r | / r
};

// Gaussian elimination with partial pivoting for k <= 4 unknowns; the
// augmented column sits at m[i][4]. Solution lands in x.
bool solve_small(int k, double m[4][5], double x[4]) {
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int row = col + 1; row < k; ++row)
            if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
        if (std::abs(m[piv][col]) < 1e-300) return false;
        for (int c = 0; c <= 4; ++c) std::swap(m[piv][c], m[col][c]);
        for (int row = 0; row < k; ++row) {
            if (row == col) continue;
            const double f = m[row][col] / m[col][col];
            for (int c = col; c <= 4; ++c) m[row][c] -= f * m[col][c];
        }
    }
    for (int i = 0; i < k; ++i) x[i] = m[i][4] / m[i][i];
    return true;
}

bool solve3(double m[3][4]) {
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
        if (std::abs(m[piv][col]) < 1e-300) return false;
        std::swap(m[piv], m[col]);
        for (int row = 0; row < 3; ++row) {
            if (row == col) continue;
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
        }
    }
    for (int i = 0; i < 3; ++i) m[i][3] /= m[i][i];
    return true;
}

CircleFit fit_circle(const Chain& c) {
    // Kasa algebraic fit: x^2 + y^2 + Bx + Cy + D = 0 in least squares.
    double sxx = 0, sxy = 0, syy = 0, sx = 0, sy = 0, sz = 0, szx = 0, szy = 0;
    const double n = double(c.size());
    for (const auto& v : c) {
        const double x = v[0], y = v[1], z = x * x + y * y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        sx += x;
        sy += y;
        sz += z;
        szx += z * x;
        szy += z * y;
    }
    double m[3][4] = {{sxx, sxy, sx, -szx}, {sxy, syy, sy, -szy}, {sx, sy, n, -sz}};
    if (!solve3(m)) throw std::runtime_error("fit_circle: degenerate vertex configuration");
    double cx = -0.5 * m[0][3], cy = -0.5 * m[1][3];
    double r = std::sqrt(std::max(cx * cx + cy * cy - m[2][3], 0.0));

    // One Gauss-Newton step on the geometric residuals.
    double jtj[3][4] = {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    for (const auto& v : c) {
        const double dx = v[0] - cx, dy = v[1] - cy;
        const double d = std::hypot(dx, dy);
        if (d < 1e-300) continue;
        const double row[3] = {-dx / d, -dy / d, -1.0};
        const double res = d - r;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) jtj[i][j] += row[i] * row[j];
            jtj[i][3] -= row[i] * res;
        }
    }
    if (solve3(jtj)) {
        cx += jtj[0][3];
        cy += jtj[1][3];
        r += jtj[2][3];
    }

    double worst = 0.0;
    for (const auto& v : c)
        worst = std::max(worst, std::abs(std::hypot(v[0] - cx, v[1] - cy) - r));
    return {cx, cy, r, worst / r};
}

}  // namespace

PolygonFlowResult polygon_flow_2d(const ProblemParams& p, int n_vertices, int max_steps,
                                  const PolygonFlowOptions& opts) {
    p.validate();
    if (p.dim != 2)
        throw std::domain_error("polygon_flow_2d: the discrete flow is defined for N = 2 only");
    if (n_vertices < 32)
        throw std::invalid_argument("polygon_flow_2d: need at least 32 vertices per chain");
    if (max_steps < 1) throw std::invalid_argument("polygon_flow_2d: max_steps must be >= 1");

    const double area_left = p.V_minus / p.rho_minus;
    const double area_right = p.V_plus / p.rho_plus;

    std::mt19937_64 rng(opts.seed);
    const auto jitter = [&]() {
        return 1.0 + opts.noise * (2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0);
    };

    // Half-disk seeds. Left runs top -> pole -> bottom, right bottom -> top;
    // both enclose positive shoelace area against the axis closure.
    Chain left(n_vertices), right(n_vertices);
    const double r_left = std::sqrt(2.0 * area_left / kPi);
    const double r_right = std::sqrt(2.0 * area_right / kPi);
    for (int i = 0; i < n_vertices; ++i) {
        const double tl = kPi / 2.0 + kPi * i / (n_vertices - 1);
        const double rl = r_left * jitter();
        left[i] = {rl * std::cos(tl), rl * std::sin(tl)};
        const double tr = -kPi / 2.0 + kPi * i / (n_vertices - 1);
        const double rr = r_right * jitter();
        right[i] = {rr * std::cos(tr), rr * std::sin(tr)};
    }
    clamp_side(left, -1);
    clamp_side(right, +1);
    restore_area(left, area_gradient(left), area_left);
    restore_area(right, area_gradient(right), area_right);

    const auto cost = [&](const Chain& l, const Chain& r) {
        const double t_gap = std::abs(l.front()[1] - r.back()[1]);
        const double b_gap = std::abs(l.back()[1] - r.front()[1]);
        return p.rho_minus * chain_length(l) + p.rho_plus * chain_length(r) +
               p.gamma * (t_gap + b_gap);
    };

    // Masked descent direction. The interface term gamma*|tl - tr| is
    // nonsmooth exactly where type I optima live: while a pair of endpoint
    // heights is (numerically) merged and no subgradient element in
    // [-gamma, gamma] can drive it apart, the kink acts as an active equality
    // constraint. All active constraints (the two areas, plus merged pairs)
    // are projected out at once through the Gram system of their gradients,
    // so the direction vanishes at a constrained optimum.
    const double merge_tol = 1e-6 * (r_left + r_right);
    double lambda_left = 0.0, lambda_right = 0.0;
    bool blocked_top = false, blocked_bottom = false;

    // Pair constraint gradients touch exactly two coordinates: +1 on the left
    // height and -1 on the right one.
    struct PairIdx {
        std::size_t left_vertex;
        std::size_t right_vertex;
    };
    const PairIdx top_pair{0, std::size_t(n_vertices - 1)};
    const PairIdx bottom_pair{std::size_t(n_vertices - 1), 0};

    const auto direction = [&](const Chain& l, const Chain& r, Chain& dl, Chain& dr) {
        dl = length_gradient(l);
        dr = length_gradient(r);
        for (auto& v : dl) {
            v[0] *= p.rho_minus;
            v[1] *= p.rho_minus;
        }
        for (auto& v : dr) {
            v[0] *= p.rho_plus;
            v[1] *= p.rho_plus;
        }

        // Decide how each endpoint pair participates.
        const auto pair_mode = [&](double hl, double hr, double gl, double gr, double& sigma) {
            sigma = 0.0;
            if (p.gamma <= 0.0) return false;
            if (std::abs(hl - hr) > merge_tol) {
                sigma = hl > hr ? 1.0 : -1.0;
                return false;
            }
            const double balance = (gr - gl) / (2.0 * p.gamma);
            if (std::abs(balance) <= 1.0) return true;  // blocked: no escape
            sigma = balance > 0.0 ? 1.0 : -1.0;
            return false;
        };
        double t_sigma, b_sigma;
        blocked_top =
            pair_mode(l.front()[1], r.back()[1], dl.front()[1], dr.back()[1], t_sigma);
        blocked_bottom =
            pair_mode(l.back()[1], r.front()[1], dl.back()[1], dr.front()[1], b_sigma);
        dl.front()[1] += p.gamma * t_sigma;
        dr.back()[1] -= p.gamma * t_sigma;
        dl.back()[1] += p.gamma * b_sigma;
        dr.front()[1] -= p.gamma * b_sigma;

        // Active-constraint gradients: areas always, merged pairs when blocked.
        const Chain gal = area_gradient(l), gar = area_gradient(r);
        int k = 2;
        int top_row = -1, bottom_row = -1;
        if (blocked_top) top_row = k++;
        if (blocked_bottom) bottom_row = k++;

        // Gram matrix G[i][j] = <c_i, c_j> and right-hand side <c_i, g>.
        double m[4][5] = {};
        const auto pair_dot_grad = [&](const PairIdx& pr) {
            return dl[pr.left_vertex][1] - dr[pr.right_vertex][1];
        };
        m[0][0] = dot(gal, gal);
        m[1][1] = dot(gar, gar);
        m[0][4] = dot(dl, gal);
        m[1][4] = dot(dr, gar);
        if (top_row >= 0) {
            m[top_row][top_row] = 2.0;
            m[0][top_row] = m[top_row][0] = gal[top_pair.left_vertex][1];
            m[1][top_row] = m[top_row][1] = -gar[top_pair.right_vertex][1];
            m[top_row][4] = pair_dot_grad(top_pair);
        }
        if (bottom_row >= 0) {
            m[bottom_row][bottom_row] = 2.0;
            m[0][bottom_row] = m[bottom_row][0] = gal[bottom_pair.left_vertex][1];
            m[1][bottom_row] = m[bottom_row][1] = -gar[bottom_pair.right_vertex][1];
            m[bottom_row][4] = pair_dot_grad(bottom_pair);
            if (top_row >= 0) m[top_row][bottom_row] = m[bottom_row][top_row] = 0.0;
        }
        double mu[4] = {};
        if (!solve_small(k, m, mu)) {
            mu[0] = dot(dl, gal) / dot(gal, gal);
            mu[1] = dot(dr, gar) / dot(gar, gar);
        }
        lambda_left = mu[0];
        lambda_right = mu[1];

        for (std::size_t i = 0; i < dl.size(); ++i) {
            dl[i][0] = -(dl[i][0] - mu[0] * gal[i][0]);
            dl[i][1] = -(dl[i][1] - mu[0] * gal[i][1]);
        }
        for (std::size_t i = 0; i < dr.size(); ++i) {
            dr[i][0] = -(dr[i][0] - mu[1] * gar[i][0]);
            dr[i][1] = -(dr[i][1] - mu[1] * gar[i][1]);
        }
        if (top_row >= 0) {
            dl[top_pair.left_vertex][1] += mu[top_row];
            dr[top_pair.right_vertex][1] -= mu[top_row];
        }
        if (bottom_row >= 0) {
            dl[bottom_pair.left_vertex][1] += mu[bottom_row];
            dr[bottom_pair.right_vertex][1] -= mu[bottom_row];
        }
    };

    std::ofstream snap;
    const bool snapshots = opts.snapshot_every > 0 && !opts.snapshot_path.empty();
    const auto dump = [&](int step, const Chain& l, const Chain& r) {
        if (!snapshots) return;
        for (std::size_t i = 0; i < l.size(); ++i)
            snap << step << ',' << i << ',' << l[i][0] << ',' << l[i][1] << '\n';
        for (std::size_t i = 0; i < r.size(); ++i)
            snap << step << ',' << l.size() + i << ',' << r[i][0] << ',' << r[i][1] << '\n';
    };
    if (snapshots) {
        snap.open(opts.snapshot_path);
        snap << "step,vertex,x1,x2\n";
        dump(0, left, right);
    }

    PolygonFlowResult out;
    out.cost_trace.reserve(std::min(max_steps + 1, 1 << 20));
    double current = cost(left, right);
    out.cost_trace.push_back(current);

    double step_size = 0.1 * kPi * std::min(r_left, r_right) / (n_vertices - 1);
    bool stalled = false;
    double grad_norm = 0.0;
    int step = 0;
    Chain dl, dr;

    for (; step < max_steps; ++step) {
        direction(left, right, dl, dr);
        grad_norm = std::sqrt(dot(dl, dl) + dot(dr, dr));
        if (grad_norm <= 1e-8) break;

        // Restores the two area constraints and, for kink-blocked endpoint
        // pairs, the height equality; the projections are alternated until
        // all of them hold at once.
        const auto make_feasible = [&](Chain& l, Chain& r) -> bool {
            for (int cycle = 0; cycle < 8; ++cycle) {
                if (blocked_top) {
                    const double h = 0.5 * (l.front()[1] + r.back()[1]);
                    l.front()[1] = h;
                    r.back()[1] = h;
                }
                if (blocked_bottom) {
                    const double h = 0.5 * (l.back()[1] + r.front()[1]);
                    l.back()[1] = h;
                    r.front()[1] = h;
                }
                if (!restore_area(l, area_gradient(l), area_left) ||
                    !restore_area(r, area_gradient(r), area_right))
                    return false;
                const double top_gap = blocked_top ? std::abs(l.front()[1] - r.back()[1]) : 0.0;
                const double bottom_gap =
                    blocked_bottom ? std::abs(l.back()[1] - r.front()[1]) : 0.0;
                if (std::max(top_gap, bottom_gap) <= 1e-12 * (r_left + r_right)) return true;
            }
            return false;
        };

        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            Chain l_try = left, r_try = right;
            for (std::size_t i = 0; i < l_try.size(); ++i) {
                l_try[i][0] += step_size * dl[i][0];
                l_try[i][1] += step_size * dl[i][1];
            }
            for (std::size_t i = 0; i < r_try.size(); ++i) {
                r_try[i][0] += step_size * dr[i][0];
                r_try[i][1] += step_size * dr[i][1];
            }
            clamp_side(l_try, -1);
            clamp_side(r_try, +1);
            if (make_feasible(l_try, r_try)) {
                const double trial = cost(l_try, r_try);
                if (trial <= current - 1e-4 * step_size * grad_norm * grad_norm) {
                    left = std::move(l_try);
                    right = std::move(r_try);
                    current = trial;
                    accepted = true;
                    break;
                }
            }
            step_size *= 0.5;
        }
        if (!accepted) {
            stalled = true;
            break;
        }
        out.cost_trace.push_back(current);
        step_size = std::min(step_size * 1.25, 0.5 * std::min(r_left, r_right));
        if (snapshots && (step + 1) % opts.snapshot_every == 0) dump(step + 1, left, right);
    }
    if (snapshots) dump(step, left, right);

    const CircleFit fl = fit_circle(left);
    const CircleFit fr = fit_circle(right);
    out.state = {left, right, lambda_left, lambda_right, step_size};
    out.circle_fit_residual_left = fl.max_residual;
    out.circle_fit_residual_right = fr.max_residual;
    out.fitted_radius_left = fl.r;
    out.fitted_radius_right = fr.r;
    out.final_cost = current;
    out.gradient_norm = grad_norm;
    out.converged = grad_norm <= 1e-8;
    out.stalled = stalled;
    out.steps = step;
    return out;
}

}  // namespace twophase::oracle
