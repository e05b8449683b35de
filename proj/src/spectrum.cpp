#include "tslab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tslab/errors.hpp"
#include "tslab/fourier.hpp"
#include "tslab/solver.hpp"

namespace tslab {

Window parse_window(const std::string& name) {
  if (name == "none") return Window::none;
  if (name == "hann") return Window::hann;
  throw InvalidInput("unknown window '" + name + "' (expected none or hann)");
}

std::string to_string(Window w) { return w == Window::none ? "none" : "hann"; }

std::string to_string(SpectrumVerdict v) { return v == SpectrumVerdict::single_frequency ? "SingleFrequency" : "Broad"; }

SpaceFreqField time_spectrum(const SpaceTimeField& snapshots, Window window) {
  const std::size_t nt = snapshots.cols();
  if (nt < kMinSnapshots) throw InvalidInput("time_spectrum: need at least 8 snapshots");
  if (window == Window::none) return time_fourier(snapshots);
  std::vector<double> w(nt);
  for (std::size_t j = 0; j < nt; ++j) {
    w[j] = 1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nt));
  }
  std::vector<cplx> values(snapshots.values().begin(), snapshots.values().end());
  for (std::size_t i = 0; i < snapshots.rows(); ++i) {
    for (std::size_t j = 0; j < nt; ++j) values[i * nt + j] *= w[j];
  }
  return time_fourier(SpaceTimeField(snapshots.xgrid(), snapshots.tgrid(), std::move(values)));
}

SpaceFreqField time_spectrum(const SimRecord& rec, Window window) { return time_spectrum(rec.snapshots, window); }

namespace {
constexpr double kTieTolerance = 1e-9;
}  // namespace

SpectrumReport single_frequency_test(const SpaceFreqField& spec, double delta, std::size_t band_halfwidth) {
  if (!(delta >= 0.0 && delta < 1.0)) throw InvalidInput("single_frequency_test: delta must lie in [0, 1)");
  const std::size_t nx = spec.rows();
  const std::size_t nw = spec.cols();

  std::vector<double> bin_energy(nw, 0.0);
  std::vector<double> col_energy(nx, 0.0);
  SpectrumReport rep;
  rep.delta = delta;
  rep.band_halfwidth_bins = band_halfwidth;
  rep.peak_bin_per_x.resize(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    double best = 0.0;
    for (std::size_t k = 0; k < nw; ++k) {
      const double e = std::norm(spec(i, k));
      bin_energy[k] += e;
      col_energy[i] += e;
      best = std::max(best, e);
    }
    // Lowest bin within roundoff of the column maximum.
    std::size_t k = 0;
    while (std::norm(spec(i, k)) < best * (1.0 - kTieTolerance)) ++k;
    rep.peak_bin_per_x[i] = k;
  }
  double total = 0.0;
  for (double e : bin_energy) total += e;
  if (!(total > 0.0)) throw InvalidInput("single_frequency_test: zero-energy spectrum");

  // Sliding band of 2 * band_halfwidth + 1 bins, clipped at the ends.
  double best_band = -1.0;
  for (std::size_t c = 0; c < nw; ++c) {
    const std::size_t lo = c >= band_halfwidth ? c - band_halfwidth : 0;
    const std::size_t hi = std::min(nw - 1, c + band_halfwidth);
    double e = 0.0;
    for (std::size_t k = lo; k <= hi; ++k) e += bin_energy[k];
    // Equal bands: keep the one centred on the stronger bin.
    const bool tie = std::abs(e - best_band) <= kTieTolerance * best_band;
    if ((!tie && e > best_band) || (tie && bin_energy[c] > bin_energy[rep.band_center_bin])) {
      best_band = e;
      rep.band_center_bin = c;
    }
  }
  rep.band_center_omega = spec.wgrid().coordinate(rep.band_center_bin);
  rep.concentration = std::clamp(best_band / total, 0.0, 1.0);

  const double floor = kColumnEnergyFloor * *std::max_element(col_energy.begin(), col_energy.end());
  std::size_t pmin = nw, pmax = 0;
  for (std::size_t i = 0; i < nx; ++i) {
    if (col_energy[i] <= floor) continue;
    pmin = std::min(pmin, rep.peak_bin_per_x[i]);
    pmax = std::max(pmax, rep.peak_bin_per_x[i]);
  }
  rep.peak_dispersion = pmax >= pmin ? pmax - pmin : 0;
  rep.verdict = (rep.concentration >= 1.0 - delta && rep.peak_dispersion <= band_halfwidth)
                    ? SpectrumVerdict::single_frequency
                    : SpectrumVerdict::broad;
  return rep;
}

double modulus_drift(const SpaceTimeField& u) {
  const std::size_t nx = u.rows();
  const std::size_t nt = u.cols();
  double ref = 0.0;
  for (std::size_t i = 0; i < nx; ++i) ref += std::norm(u(i, 0));
  if (!(ref > 0.0)) throw InvalidInput("modulus_drift: initial snapshot is zero");
  double worst = 0.0;
  for (std::size_t j = 1; j < nt; ++j) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nx; ++i) {
      const double d = std::abs(u(i, j)) - std::abs(u(i, 0));
      acc += d * d;
    }
    worst = std::max(worst, acc);
  }
  return std::sqrt(worst / ref);
}

SpectrumReport analyze_record(const SpaceTimeField& snapshots, const AnalysisOptions& opts) {
  SpectrumReport rep = single_frequency_test(time_spectrum(snapshots, opts.window), opts.delta, opts.band_halfwidth);
  rep.modulus_drift = modulus_drift(snapshots);
  return rep;
}

CompactnessReport support_compactness(const SpaceFreqField& spec, double rel_threshold) {
  const SupportMask mask = support_mask(spec, rel_threshold);
  CompactnessReport rep{lower_bound_profile(mask), upper_bound_profile(mask), 0.0};
  for (std::size_t i = 0; i < rep.lower.size(); ++i) {
    if (!rep.lower[i].is_finite()) continue;
    rep.width_bins =
        std::max(rep.width_bins, std::round((rep.upper[i].value() - rep.lower[i].value()) / spec.wgrid().step()));
  }
  return rep;
}

std::vector<double> harmonic_magnitudes(const SpaceFreqField& spec, double omega0, std::size_t count) {
  std::vector<double> out;
  for (std::size_t h = 1; h <= count; ++h) {
    const double w = omega0 * static_cast<double>(h);
    const auto k = spec.wgrid().lattice_index(w);
    if (!k) throw InvalidInput("harmonic_magnitudes: harmonic is not on the frequency lattice");
    double mag = 0.0;
    for (std::size_t i = 0; i < spec.rows(); ++i) mag = std::max(mag, std::abs(spec(i, *k)));
    out.push_back(mag);
  }
  return out;
}

}  // namespace tslab
