#pragma once

#include "twophase/candidate_solver.hpp"

// The classification theorem as a total function: for every admissible
// parameter set, the global minimizer, its regime relative to gamma*, and the
// full cost breakdown.

namespace twophase {

enum class Regime { BelowThreshold, AtThreshold, AboveThreshold };

struct ClassificationResult {
    ProblemParams params;
    ThresholdResult threshold;   // signed gamma* for the params as given
    Candidate minimizer;         // reported in the caller's orientation
    CostBreakdown cost;
    Regime regime;
    bool orientation_swapped;    // true if V-/rho- < V+/rho+ (mirrored internally)
};

/// Classifies one instance.
///
/// The theorem is stated for V-/rho- > V+/rho+; the reversed order is handled
/// by mirroring, which turns the below-threshold minimizer into the candidate
/// satisfying the minus transmission law (kind TypeIIMinus) while the regime
/// boundary moves to |gamma*|. Equal ratios give gamma* = 0, so every gamma
/// >= 0 lands at or above the threshold. When gamma >= min(rho-, rho+) no
/// type II candidate exists and the type I candidate is returned directly,
/// consistent with gamma* < min(rho-, rho+) <= gamma.
ClassificationResult classify(const ProblemParams& p);

const char* regime_name(Regime r);

}  // namespace twophase
