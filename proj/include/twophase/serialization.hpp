#pragma once

#include <string>

#include "twophase/classifier.hpp"
#include "twophase/verification_oracle.hpp"

// JSON and CSV text interfaces. All numbers are written with 17 significant
// digits so that doubles round-trip losslessly and output is byte-stable.

namespace twophase {

/// One double formatted with %.17g.
std::string format_double(double v);

std::string to_json(const ProblemParams& p);
std::string to_json(const ThresholdResult& t);
/// Flat object {params, gamma_star, regime, alpha, beta, R_minus, R_plus,
/// cost:{perim_minus, perim_plus, interface, total}, orientation_swapped}.
std::string to_json(const ClassificationResult& r);
std::string to_json(const oracle::OracleReport& r);

/// Parses a params object {"N":..., "rho_minus":..., "rho_plus":...,
/// "V_minus":..., "V_plus":..., "gamma":...}. Also accepts a full
/// classification-result object, in which case its "params" member is used.
/// Throws std::runtime_error on malformed input.
ProblemParams params_from_json(const std::string& text);

/// Cross-section as CSV with columns side,theta,x1,x2. The interface segment
/// contributes two rows (side "interface", theta 0 and 1) unless empty.
std::string cross_section_csv(const CrossSection& cs);

/// Cross-section as an SVG drawing: the two generatrix polylines plus the
/// dashed interface segments, with the axis of symmetry drawn faintly.
std::string cross_section_svg(const CrossSection& cs);

}  // namespace twophase
