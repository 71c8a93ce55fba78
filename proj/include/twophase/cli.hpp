#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twophase::cli {

/// Runs one CLI invocation. args is argv without the program name.
/// Subcommands: solve | gamma-star | sweep | verify | export-geometry.
/// Returns 0 on success, 1 on failed verification, 2 on argument errors.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int dispatch(const std::vector<std::string>& args);

}  // namespace twophase::cli
