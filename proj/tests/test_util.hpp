#pragma once

#include <cmath>
#include <random>

// Deterministic draw helpers shared by the test suites. mt19937_64 output is
// specified by the standard; the scalings below avoid the (implementation
// defined) distribution classes.

namespace test_util {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        const double u = double(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + int(gen_() % std::uint64_t(hi - lo + 1));
    }

private:
    std::mt19937_64 gen_;
};

inline bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace test_util
