#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "boxrep/cubemvc.hpp"
#include "boxrep/exact.hpp"
#include "boxrep/nicebox.hpp"

namespace boxrep::cli {

enum ExitCode : int { kOk = 0, kDefect = 1, kInputError = 2, kSizeGuard = 3 };

struct Limits {
    ExactLimits exact;
    NiceLimits nice;
    PsiLimits psi;
};

/// Applies "key=value[,key=value...]" overrides; keys exact_box, exact_cube, nice, psi.
void apply_limit_overrides(Limits& limits, const std::string& overrides);

/// Runs one command line (args excludes the program name). Representation
/// files and command results go to `out` unless --out is given; reports and
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxrep::cli
