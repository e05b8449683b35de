#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tslab/config.hpp"
#include "tslab/solver.hpp"

namespace tslab {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

/// Flags shared by every subcommand.
struct CommandOptions {
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::filesystem::path> out;
  bool json = false;
};

/// Overrides for check-nonlinearity; unset fields fall back to the config.
struct NonlinearityArgs {
  std::optional<std::string> variant;
  std::optional<std::vector<double>> coeffs;
  std::optional<unsigned> root;
  std::optional<std::vector<double>> denominator;
  std::optional<int> n;
};

/// Loads --config (or defaults) and applies --seed.
ExperimentConfig resolve_config(const CommandOptions& opts);

/// Initial state for the profile, gaussian and file kinds.
State make_initial_state(const ExperimentConfig& cfg, const ModelSpec& model);

/// Runs the configured experiment; breather and akhmediev kinds are sampled
/// analytically on the snapshot grid instead of integrated.
SimRecord make_record(const ExperimentConfig& cfg);

/// Randomized titchmarsh_check trials plus the two counterexample fields.
int cmd_titchmarsh_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err);
/// Writes record.tsf (field container) and record.json (sidecar) to --out.
int cmd_simulate(const CommandOptions& opts, std::ostream& out, std::ostream& err);
/// Spectrum report of a record file; writes report.json and spectrum.csv to --out.
int cmd_analyze(const std::filesystem::path& record, const CommandOptions& opts, std::ostream& out,
                std::ostream& err);
/// Exit 0 when admissible, 1 otherwise.
int cmd_check_nonlinearity(const NonlinearityArgs& args, const CommandOptions& opts, std::ostream& out,
                           std::ostream& err);
/// Breather record over 8 periods and its odd-harmonic ladder; exit 0 when
/// at least three odd harmonics exceed 1e-4 of the peak with decreasing size.
int cmd_demo_breather(const CommandOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace tslab
