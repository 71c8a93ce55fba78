#include "twophase/classifier.hpp"

#include <algorithm>
#include <cmath>

namespace twophase {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::BelowThreshold: return "BelowThreshold";
        case Regime::AtThreshold: return "AtThreshold";
        case Regime::AboveThreshold: return "AboveThreshold";
    }
    return "?";
}

ClassificationResult classify(const ProblemParams& p) {
    p.validate();

    ClassificationResult out;
    out.params = p;
    out.threshold = gamma_star(p);
    out.orientation_swapped = (p.V_minus / p.rho_minus < p.V_plus / p.rho_plus);

    // In the mirrored frame the threshold is -gamma*, so the regime boundary
    // for the caller's gamma >= 0 is the canonical (nonnegative) value.
    const double canonical_star =
        out.orientation_swapped ? -out.threshold.gamma_star : out.threshold.gamma_star;

    if (std::abs(p.gamma - canonical_star) <= 1e-12 * std::max(1.0, canonical_star)) {
        out.regime = Regime::AtThreshold;
        out.minimizer = candidate_type_I(p);
    } else if (p.gamma < canonical_star) {
        out.regime = Regime::BelowThreshold;
        // The below-threshold minimizer of a mirrored instance is the mirror
        // of the canonical type II candidate, i.e. the candidate satisfying
        // the minus transmission law in the caller's coordinates.
        out.minimizer = candidate_type_II(out.orientation_swapped ? -p.gamma : p.gamma, p);
    } else {
        out.regime = Regime::AboveThreshold;
        out.minimizer = candidate_type_I(p);
    }

    out.cost = total_cost(out.minimizer, p);
    return out;
}

}  // namespace twophase
