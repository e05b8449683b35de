#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tslab/field.hpp"
#include "tslab/support.hpp"

namespace tslab {

struct SimRecord;

enum class Window { none, hann };
Window parse_window(const std::string& name);
std::string to_string(Window w);

inline constexpr std::size_t kMinSnapshots = 8;

/// time_fourier of the snapshot matrix after multiplying every row by the
/// window (periodic Hann 1 - cos(2 pi j / N), unit mean). Needs >= 8 samples.
SpaceFreqField time_spectrum(const SpaceTimeField& snapshots, Window window);
SpaceFreqField time_spectrum(const SimRecord& rec, Window window);

enum class SpectrumVerdict { single_frequency, broad };
std::string to_string(SpectrumVerdict v);

inline constexpr double kDefaultDelta = 0.01;
inline constexpr std::size_t kDefaultBandHalfwidth = 2;
inline constexpr double kColumnEnergyFloor = 1e-10;

struct SpectrumReport {
  /// Fraction of spectral energy in the best band of 2 * band_halfwidth + 1 bins.
  double concentration = 0.0;
  std::size_t band_center_bin = 0;
  double band_center_omega = 0.0;
  /// Per x, the bin of largest |f|; ties (to 1e-9 relative) go to the lowest bin.
  std::vector<std::size_t> peak_bin_per_x;
  /// max - min peak bin over columns with energy above kColumnEnergyFloor * max.
  std::size_t peak_dispersion = 0;
  /// Set by analyze_record, which has the time-domain record.
  std::optional<double> modulus_drift;
  std::size_t band_halfwidth_bins = kDefaultBandHalfwidth;
  double delta = kDefaultDelta;
  SpectrumVerdict verdict = SpectrumVerdict::broad;
};

/// SingleFrequency iff concentration >= 1 - delta and peak_dispersion <= band_halfwidth.
/// Throws InvalidInput on a zero spectrum or delta outside [0, 1).
SpectrumReport single_frequency_test(const SpaceFreqField& spec, double delta = kDefaultDelta,
                                     std::size_t band_halfwidth = kDefaultBandHalfwidth);

/// max_t || |u(., t)| - |u(., 0)| ||_2 / || u(., 0) ||_2.
double modulus_drift(const SpaceTimeField& u);

struct AnalysisOptions {
  Window window = Window::hann;
  double delta = kDefaultDelta;
  std::size_t band_halfwidth = kDefaultBandHalfwidth;
};

/// time_spectrum + single_frequency_test + modulus_drift.
SpectrumReport analyze_record(const SpaceTimeField& snapshots, const AnalysisOptions& opts = {});

struct CompactnessReport {
  BoundProfile lower;
  BoundProfile upper;
  /// max over Sigma of (b - a) / dw; 0 when Sigma is empty.
  double width_bins = 0.0;
};

/// Column support bounds of the thresholded spectrum (no envelopes).
CompactnessReport support_compactness(const SpaceFreqField& spec, double rel_threshold = kDefaultSupportThreshold);

/// Magnitude max_x |f(x, h w0)| at the bins h = 1..count of the multiples of w0.
/// Throws InvalidInput if a multiple is off the frequency lattice or outside it.
std::vector<double> harmonic_magnitudes(const SpaceFreqField& spec, double omega0, std::size_t count);

}  // namespace tslab
