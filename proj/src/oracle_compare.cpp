#include <algorithm>
#include <cmath>
#include <random>

#include "twophase/verification_oracle.hpp"

namespace twophase::oracle {

OracleReport compare(const ProblemParams& p, int coarse, int refine_iters) {
    const ClassificationResult analytic = classify(p);
    const GridMinimumResult brute = grid_minimize(p, coarse, refine_iters);

    OracleReport r;
    r.params = p;
    r.analytic_cost = analytic.cost.total;
    r.brute_cost = brute.value;
    r.arg_gap = std::max(std::abs(brute.alpha - analytic.minimizer.alpha),
                         std::abs(brute.beta - analytic.minimizer.beta));
    r.cost_gap = std::abs(r.analytic_cost - r.brute_cost) / r.analytic_cost;
    r.passed = r.cost_gap <= 1e-5 && r.brute_cost >= r.analytic_cost * (1.0 - 1e-5);
    return r;
}

std::vector<ProblemParams> sample_problems(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    // Raw 53-bit uniforms; the standard distributions are not portable.
    const auto uniform = [&rng](double lo, double hi) {
        const double u = double(rng() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    };
    const auto log_uniform = [&](double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    };

    const int dims[] = {2, 3, 4, 7};
    std::vector<ProblemParams> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        ProblemParams p;
        p.dim = dims[rng() % 4];
        p.rho_minus = log_uniform(0.1, 10.0);
        p.rho_plus = log_uniform(0.1, 10.0);
        p.V_minus = log_uniform(0.1, 10.0);
        p.V_plus = log_uniform(0.1, 10.0);
        p.gamma = uniform(0.0, 1.5 * std::min(p.rho_minus, p.rho_plus));
        out.push_back(p);
    }
    return out;
}

}  // namespace twophase::oracle
