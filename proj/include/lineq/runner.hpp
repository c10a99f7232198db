#pragma once

#include <iosfwd>
#include <string>

#include "lineq/config.hpp"

namespace lineq {

inline constexpr const char* kToolName = "layer-ineq";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

// Exit codes shared by every subcommand: 0 all checks pass, 1 error, 2 checks failed.
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitChecksFailed = 2;

struct OutputOptions {
    std::string out_path;  // machine-readable JSON report, empty = skip
    std::string csv_path;  // table export for sweeps, empty = skip
};

int run_geometry(const RunConfig& config, const OutputOptions& options, std::ostream& out);
int run_verify(const RunConfig& config, const OutputOptions& options, std::ostream& out);
int run_identity(const RunConfig& config, const OutputOptions& options, std::ostream& out);
int run_sharpness(const RunConfig& config, const OutputOptions& options, std::ostream& out);
int run_convergence(const RunConfig& config, const OutputOptions& options, std::ostream& out);

// Dispatch by subcommand name; exceptions become exit code 1 with the message
// on `err`.
int run_command(const std::string& command, const RunConfig& config, const OutputOptions& options,
                std::ostream& out, std::ostream& err);

}  // namespace lineq
