#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "localabc/serialization.hpp"

namespace localabc {

enum ExitCode : int {
    kExitPass = 0,
    kExitInequalityFailed = 1,
    kExitHypothesisFailure = 2,
    kExitNumericalFailure = 3,
    kExitInputError = 4,
};

/// Command-line overrides; unset fields fall back to the problem file, then
/// to library defaults.
struct RunFlags {
    std::optional<int> samples;
    std::optional<int> radial;
    std::optional<double> tol;
    std::optional<double> alpha;
    std::uint64_t seed = 0;
    std::optional<std::string> csv_path;
};

/// Runs one problem and writes a single JSON document to `out`. Diagnostics
/// for malformed input go to `err`. Returns the process exit code.
int run_problem(const Json& problem, const RunFlags& flags, std::ostream& out, std::ostream& err);

/// Reads and parses `path`, then as run_problem.
int run_file(const std::string& path, const RunFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace localabc
