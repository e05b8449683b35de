#pragma once

#include <cstdint>
#include <filesystem>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tslab/errors.hpp"
#include "tslab/nonlinearity.hpp"
#include "tslab/solver.hpp"
#include "tslab/spectrum.hpp"

namespace tslab {

/// Malformed configuration text, unknown key, or unusable value.
class ConfigError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Flat "key = value" settings; '#' starts a comment. Unknown keys are
/// rejected. Every field has a default, so an empty file is a valid
/// configuration (the cubic NLS soliton run).
struct ExperimentConfig {
  // model
  std::string kind = "nls";
  double m = 1.0;
  std::string alpha_variant = "polynomial";
  std::vector<double> alpha_coeffs{0.0, -2.0};
  unsigned alpha_root = 2;
  std::vector<double> alpha_denominator{1.0};
  double L = 40.0 * std::numbers::pi;
  std::size_t nx = 256;
  double dt = 1e-3;
  double t_end = 20.0;
  std::size_t snapshot_every = 100;
  std::uint64_t seed = 1;
  int n = 1;

  // initial state
  std::string initial_kind = "profile";
  // Unset means -1 for profiles and 0.8 for breathers.
  std::optional<double> initial_omega;
  double initial_amplitude = 1.0;
  double initial_width = 1.0;
  double initial_center = 0.0;
  double initial_noise = 0.0;
  std::string initial_path;

  // analysis
  double delta = kDefaultDelta;
  std::size_t band_halfwidth = kDefaultBandHalfwidth;
  std::string window = "hann";
  double rel_threshold = kDefaultSupportThreshold;

  // titchmarsh
  std::size_t trials = 50;
  std::size_t x_cells = 32;
  std::size_t w_cells = 64;
  std::size_t radius = 1;
  double tol_cells = 1.0;
};

/// Parses text; `origin` names the source in error messages.
ExperimentConfig parse_config(const std::string& text, const std::string& origin = "<config>");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Every accepted key, in documentation order.
const std::vector<std::string>& config_keys();

/// Nonlinearity described by the alpha.* keys.
Nonlinearity make_nonlinearity(const ExperimentConfig& cfg);

/// Model on the periodic box [-L/2, L/2) with nx points.
ModelSpec make_model(const ExperimentConfig& cfg);

AnalysisOptions make_analysis_options(const ExperimentConfig& cfg);

}  // namespace tslab
