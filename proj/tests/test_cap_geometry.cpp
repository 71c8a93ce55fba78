#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "test_util.hpp"
#include "twophase/cap_geometry.hpp"
#include "twophase/verification_oracle.hpp"

using namespace twophase;
using test_util::Rng;

namespace {
constexpr double kPi = 3.14159265358979323846;

ProblemParams random_params(Rng& rng, int dim_lo = 2, int dim_hi = 6) {
    ProblemParams p;
    p.dim = rng.uniform_int(dim_lo, dim_hi);
    p.rho_minus = rng.log_uniform(0.2, 5.0);
    p.rho_plus = rng.log_uniform(0.2, 5.0);
    p.V_minus = rng.log_uniform(0.2, 5.0);
    p.V_plus = rng.log_uniform(0.2, 5.0);
    p.gamma = rng.uniform(0.0, 0.9 * std::min(p.rho_minus, p.rho_plus));
    return p;
}
}  // namespace

TEST_CASE("cap_volume: half-ball anchors") {
    CHECK(cap_volume(1.0, kPi / 2.0, Side::Left, 2) == doctest::Approx(kPi / 2.0).epsilon(1e-15));
    CHECK(cap_volume(2.0, kPi / 2.0, Side::Right, 3) ==
          doctest::Approx(16.0 * kPi / 3.0).epsilon(1e-15));
}

TEST_CASE("cap_volume: agrees with slab quadrature (validates the center convention)") {
    CHECK(test_util::close_rel(cap_volume(1.3, 2.0, Side::Left, 4),
                               oracle::cap_volume_slab(1.3, 2.0, Side::Left, 4), 1e-8));
    CHECK(test_util::close_rel(cap_volume(0.9, 0.7, Side::Right, 3),
                               oracle::cap_volume_slab(0.9, 0.7, Side::Right, 3), 1e-8));
    CHECK(test_util::close_rel(cap_volume(2.1, 2.6, Side::Right, 2),
                               oracle::cap_volume_slab(2.1, 2.6, Side::Right, 2), 1e-8));
}

TEST_CASE("cap_perimeter: anchors and generatrix quadrature") {
    CHECK(cap_perimeter(1.0, kPi / 2.0, Side::Left, 2) == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(cap_perimeter(1.0, kPi / 2.0, Side::Right, 3) ==
          doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(test_util::close_rel(cap_perimeter(0.7, 1.1, Side::Right, 5),
                               oracle::cap_perimeter_generatrix(0.7, 1.1, Side::Right, 5), 1e-8));
    CHECK(test_util::close_rel(cap_perimeter(1.6, 2.2, Side::Left, 3),
                               oracle::cap_perimeter_generatrix(1.6, 2.2, Side::Left, 3), 1e-8));
}

TEST_CASE("interface_area: shell anchors") {
    CHECK(interface_area(1.0, kPi / 2.0, 1.0, kPi / 2.0, 2) == 0.0);
    CHECK(interface_area(2.0, kPi / 2.0, 1.0, kPi / 2.0, 2) == doctest::Approx(2.0));
    CHECK(interface_area(2.0, kPi / 2.0, 1.0, kPi / 2.0, 3) == doctest::Approx(3.0 * kPi));
}

TEST_CASE("total_cost: two half-disk anchors") {
    ProblemParams p;
    p.dim = 2;
    p.V_minus = p.V_plus = kPi / 2.0;
    p.gamma = 0.7;
    const Candidate both_unit = make_candidate(kPi / 2.0, kPi / 2.0, 1.0, 1.0,
                                               CandidateKind::TypeIIPlus);
    const CostBreakdown cb = total_cost(both_unit, p);
    CHECK(both_unit.kind == CandidateKind::TypeI);  // traces coincide
    CHECK(cb.interface == 0.0);
    CHECK(cb.total == doctest::Approx(2.0 * kPi).epsilon(1e-15));

    ProblemParams q;
    q.dim = 2;
    q.V_minus = 2.0 * kPi;
    q.V_plus = kPi / 2.0;
    q.gamma = 1.0;
    const Candidate unequal = make_candidate(kPi / 2.0, kPi / 2.0, 2.0, 1.0,
                                             CandidateKind::TypeIIPlus);
    const CostBreakdown cq = total_cost(unequal, q);
    CHECK(cq.perim_minus == doctest::Approx(2.0 * kPi).epsilon(1e-15));
    CHECK(cq.perim_plus == doctest::Approx(kPi).epsilon(1e-15));
    CHECK(cq.interface == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(cq.total == doctest::Approx(3.0 * kPi + 2.0).epsilon(1e-15));
    CHECK(cq.total == cq.perim_minus + cq.perim_plus + cq.interface);
}

TEST_CASE("radius_from_volume: anchors and round trip") {
    ProblemParams p;
    p.dim = 2;
    p.rho_minus = 1.0;
    p.V_minus = kPi / 2.0;
    CHECK(radius_from_volume(kPi / 2.0, Side::Left, p) == doctest::Approx(1.0).epsilon(1e-15));

    ProblemParams q;
    q.dim = 3;
    q.rho_plus = 2.0;
    q.V_plus = 4.0 * kPi / 3.0;
    CHECK(radius_from_volume(kPi / 2.0, Side::Right, q) == doctest::Approx(1.0).epsilon(1e-15));

    ProblemParams r;
    r.dim = 4;
    r.rho_minus = 0.5;
    r.V_minus = 3.0;
    const double R = radius_from_volume(2.3, Side::Left, r);
    CHECK(test_util::close_rel(r.rho_minus * cap_volume(R, 2.3, Side::Left, 4), 3.0, 1e-12));

    Rng rng(8001);
    for (int i = 0; i < 100; ++i) {
        const ProblemParams pp = random_params(rng);
        const double angle = rng.uniform(0.05, kPi - 0.05);
        const Side side = rng.uniform_int(0, 1) ? Side::Left : Side::Right;
        const double radius = radius_from_volume(angle, side, pp);
        const double rho = side == Side::Left ? pp.rho_minus : pp.rho_plus;
        const double V = side == Side::Left ? pp.V_minus : pp.V_plus;
        CHECK(test_util::close_rel(rho * cap_volume(radius, angle, side, pp.dim), V, 1e-12));
    }
}

TEST_CASE("radius derivative matches the closed form") {
    Rng rng(8002);
    const double h = 1e-6;
    for (int i = 0; i < 50; ++i) {
        const ProblemParams p = random_params(rng);
        const double angle = rng.uniform(0.3, kPi - 0.3);

        const double fd_left = (radius_from_volume(angle + h, Side::Left, p) -
                                radius_from_volume(angle - h, Side::Left, p)) /
                               (2.0 * h);
        const CapIntegrals il = cap_integrals(angle, p.dim, Side::Left);
        const double Rl = radius_from_volume(angle, Side::Left, p);
        const double formula_left =
            std::pow(std::sin(angle), p.dim) * Rl / (p.dim * il.I);
        CHECK(test_util::close_rel(fd_left, formula_left, 1e-6));

        const double fd_right = (radius_from_volume(angle + h, Side::Right, p) -
                                 radius_from_volume(angle - h, Side::Right, p)) /
                                (2.0 * h);
        const CapIntegrals ir = cap_integrals(angle, p.dim, Side::Right);
        const double Rr = radius_from_volume(angle, Side::Right, p);
        const double formula_right =
            -std::pow(std::sin(angle), p.dim) * Rr / (p.dim * ir.I);
        CHECK(test_util::close_rel(fd_right, formula_right, 1e-6));
    }
}

namespace {
// Reduced cost along the volume-constrained family.
double reduced_cost(double alpha, double beta, const ProblemParams& p) {
    const Candidate c = make_candidate(alpha, beta, radius_from_volume(alpha, Side::Left, p),
                                       radius_from_volume(beta, Side::Right, p),
                                       CandidateKind::TypeIIPlus);
    // Keep the raw interface formula so the finite difference sees the true
    // piecewise-smooth functional, not the tag-snapped one.
    const double lateral = p.rho_minus * cap_perimeter(c.R_minus, alpha, Side::Left, p.dim) +
                           p.rho_plus * cap_perimeter(c.R_plus, beta, Side::Right, p.dim);
    return lateral + p.gamma * interface_area(c.R_minus, alpha, c.R_plus, beta, p.dim);
}
}  // namespace

TEST_CASE("dF_dalpha: vanishes where the transmission law holds") {
    ProblemParams p;
    p.dim = 3;
    p.rho_minus = 2.0;
    p.rho_plus = 1.5;
    p.V_minus = 2.0;
    p.V_plus = 1.0;
    p.gamma = 0.8;
    // Candidate with rho- cos(alpha) = gamma.
    const double alpha = std::acos(p.gamma / p.rho_minus);
    const double beta_v = 1.2;
    const Candidate c =
        make_candidate(alpha, beta_v, radius_from_volume(alpha, Side::Left, p),
                       radius_from_volume(beta_v, Side::Right, p), CandidateKind::TypeIIPlus);
    CHECK(std::abs(dF_dalpha(c, p, +1)) <= 1e-14);

    // alpha = pi/2 and gamma = 0 kills both factors.
    ProblemParams q = p;
    q.gamma = 0.0;
    const Candidate h =
        make_candidate(kPi / 2.0, beta_v, radius_from_volume(kPi / 2.0, Side::Left, q),
                       radius_from_volume(beta_v, Side::Right, q), CandidateKind::TypeIIPlus);
    CHECK(std::abs(dF_dalpha(h, q, +1)) <= 1e-14);
}

TEST_CASE("dF_dalpha: matches the finite difference of the reduced cost") {
    Rng rng(8003);
    const double h = 1e-5;
    int tested = 0;
    while (tested < 60) {
        const ProblemParams p = random_params(rng, 2, 5);
        const double alpha = rng.uniform(0.2 * kPi, 0.8 * kPi);
        const double beta = rng.uniform(0.2 * kPi, 0.8 * kPi);
        const Candidate c =
            make_candidate(alpha, beta, radius_from_volume(alpha, Side::Left, p),
                           radius_from_volume(beta, Side::Right, p), CandidateKind::TypeIIPlus);
        const double mismatch = c.trace_minus() - c.trace_plus();
        // Stay on one branch of the absolute value across the stencil, and
        // away from near-zero derivatives where a relative check is vacuous.
        if (std::abs(mismatch) < 1e-3 * (c.trace_minus() + c.trace_plus())) continue;
        const int branch = mismatch > 0.0 ? +1 : -1;
        const double analytic = dF_dalpha(c, p, branch);
        if (std::abs(std::cos(alpha) * p.rho_minus - branch * p.gamma) <
            0.05 * (p.gamma + p.rho_minus))
            continue;

        const double fd = (reduced_cost(alpha + h, beta, p) - reduced_cost(alpha - h, beta, p)) /
                          (2.0 * h);
        CHECK(test_util::close_rel(fd, analytic, 1e-6));
        ++tested;
    }
}

TEST_CASE("cost scaling law: V -> lambda V multiplies cost by lambda^{(N-1)/N}") {
    Rng rng(8004);
    for (int i = 0; i < 30; ++i) {
        const ProblemParams p = random_params(rng);
        const double lambda = rng.log_uniform(0.2, 5.0);
        const double alpha = rng.uniform(0.3, kPi - 0.3);
        const double beta = rng.uniform(0.3, kPi - 0.3);

        ProblemParams q = p;
        q.V_minus *= lambda;
        q.V_plus *= lambda;

        const Candidate cp =
            make_candidate(alpha, beta, radius_from_volume(alpha, Side::Left, p),
                           radius_from_volume(beta, Side::Right, p), CandidateKind::TypeIIPlus);
        const Candidate cq =
            make_candidate(alpha, beta, radius_from_volume(alpha, Side::Left, q),
                           radius_from_volume(beta, Side::Right, q), CandidateKind::TypeIIPlus);
        const double ratio = total_cost(cq, q).total / total_cost(cp, p).total;
        CHECK(test_util::close_rel(ratio, std::pow(lambda, (p.dim - 1.0) / p.dim), 1e-10));
    }
}

TEST_CASE("mirror symmetry of the total cost") {
    Rng rng(8005);
    for (int i = 0; i < 30; ++i) {
        const ProblemParams p = random_params(rng);
        ProblemParams m = p;
        std::swap(m.rho_minus, m.rho_plus);
        std::swap(m.V_minus, m.V_plus);

        const double alpha = rng.uniform(0.3, kPi - 0.3);
        const double beta = rng.uniform(0.3, kPi - 0.3);
        const Candidate c =
            make_candidate(alpha, beta, radius_from_volume(alpha, Side::Left, p),
                           radius_from_volume(beta, Side::Right, p), CandidateKind::TypeIIPlus);
        const Candidate cm = make_candidate(
            kPi - beta, kPi - alpha, radius_from_volume(kPi - beta, Side::Left, m),
            radius_from_volume(kPi - alpha, Side::Right, m), CandidateKind::TypeIIMinus);
        CHECK(test_util::close_rel(total_cost(c, p).total, total_cost(cm, m).total, 1e-12));
    }
}

TEST_CASE("interface_area is zero exactly when the traces agree") {
    Rng rng(8006);
    for (int i = 0; i < 50; ++i) {
        const double R_minus = rng.log_uniform(0.2, 5.0);
        const double alpha = rng.uniform(0.1, kPi - 0.1);
        const double beta = rng.uniform(0.1, kPi - 0.1);
        const int dim = rng.uniform_int(2, 6);
        // Choose R+ so that the traces match exactly in double precision.
        const double R_plus = R_minus * std::sin(alpha) / std::sin(beta);
        if (R_plus * std::sin(beta) == R_minus * std::sin(alpha))
            CHECK(interface_area(R_minus, alpha, R_plus, beta, dim) == 0.0);
        CHECK(interface_area(R_minus, alpha, 2.0 * R_plus, beta, dim) > 0.0);
    }
}

TEST_CASE("cross_section: semicircle anchor and side confinement") {
    const Candidate c = make_candidate(kPi / 2.0, kPi / 2.0, 1.0, 1.0, CandidateKind::TypeIIPlus);
    const CrossSection cs = cross_section(c, 64);
    REQUIRE(cs.left.size() == 129);
    REQUIRE(cs.right.size() == 129);
    CHECK(std::abs(cs.left.front().x1) <= 1e-15);
    CHECK(cs.left.front().x2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(cs.left.back().x1) <= 1e-15);
    CHECK(cs.left.back().x2 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(cs.right.front().x2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cs.right.back().x2 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(cs.interface_empty);

    Rng rng(8007);
    for (int i = 0; i < 20; ++i) {
        const ProblemParams p = random_params(rng);
        const double alpha = rng.uniform(0.2, kPi - 0.2);
        const double beta = rng.uniform(0.2, kPi - 0.2);
        const Candidate cc =
            make_candidate(alpha, beta, radius_from_volume(alpha, Side::Left, p),
                           radius_from_volume(beta, Side::Right, p), CandidateKind::TypeIIPlus);
        const CrossSection sec = cross_section(cc, 32);
        for (const auto& pt : sec.left) CHECK(pt.x1 <= 1e-12);
        for (const auto& pt : sec.right) CHECK(pt.x1 >= -1e-12);
        // Trace endpoints sit on the axis at the trace heights.
        CHECK(std::abs(sec.left.front().x2 - cc.trace_minus()) <= 1e-12);
        CHECK(std::abs(sec.right.front().x2 - cc.trace_plus()) <= 1e-12);
    }
}

TEST_CASE("cross_section: type I endpoints coincide") {
    ProblemParams p;
    p.dim = 2;
    p.rho_minus = 2.0;
    p.rho_plus = 1.0;
    p.V_minus = 1.0;
    p.V_plus = 1.0;
    // Build the type I candidate through the solver header indirectly: a
    // trace-matched pair suffices here.
    const double alpha = 1.1;
    const double R_minus = radius_from_volume(alpha, Side::Left, p);
    // Solve R+ sin(beta) = R- sin(alpha) crudely by bisection over beta.
    // The right trace R+(beta) sin(beta) is strictly decreasing in beta.
    double lo = 0.05, hi = kPi - 0.05;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double trace = radius_from_volume(mid, Side::Right, p) * std::sin(mid);
        (trace > R_minus * std::sin(alpha) ? lo : hi) = mid;
    }
    const double beta = 0.5 * (lo + hi);
    const Candidate c = make_candidate(alpha, beta, R_minus,
                                       radius_from_volume(beta, Side::Right, p),
                                       CandidateKind::TypeIIPlus);
    if (c.kind == CandidateKind::TypeI) {
        const CrossSection cs = cross_section(c, 16);
        CHECK(std::abs(cs.left.front().x2 - cs.right.front().x2) <=
              trace_tolerance(c.R_minus, c.R_plus));
    }
}

TEST_CASE("validation raises on bad parameters") {
    ProblemParams p;
    p.dim = 1;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.dim = 2;
    p.rho_minus = 0.0;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    p.rho_minus = 1.0;
    p.gamma = -0.5;
    CHECK_THROWS_AS(p.validate(), std::domain_error);
    CHECK_THROWS_AS(cross_section(make_candidate(1.0, 1.0, 1.0, 1.0, CandidateKind::TypeIIPlus), 4),
                    std::invalid_argument);
}
