#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tslab/field.hpp"

namespace tslab {

/// Random piecewise-box fields: the x axis is cut into runs of at least
/// min_run cells; on each run the column support is one frequency interval
/// [lo, hi] (or empty), identical across the run. The two edge cells of every
/// column have modulus in [boundary_min, 1]; interior cells have modulus in
/// [0, 1] and are occasionally exactly zero.
struct PiecewiseOptions {
  std::size_t x_cells = 32;
  std::size_t w_cells = 64;
  double dw = 0.5;
  std::size_t min_run = 3;
  double empty_probability = 0.15;
  std::size_t max_box_cells = 21;
  double boundary_min = 0.1;
  /// Breakpoints of the second field of a pair either coincide with those of
  /// the first or stay at least this many cells away from all of them.
  std::size_t min_separation = 2;
};

/// x grid [0, x_cells) with unit step and a frequency grid symmetric about 0.
AxisGrid piecewise_xgrid(const PiecewiseOptions& opts);
AxisGrid piecewise_wgrid(const PiecewiseOptions& opts);

/// Run start indices (always begins with 0).
std::vector<std::size_t> random_breakpoints(std::mt19937_64& rng, const PiecewiseOptions& opts);
std::vector<std::size_t> compatible_breakpoints(std::mt19937_64& rng, const std::vector<std::size_t>& reference,
                                                const PiecewiseOptions& opts);

SpaceFreqField random_piecewise_field(std::mt19937_64& rng, const std::vector<std::size_t>& breakpoints,
                                      const PiecewiseOptions& opts);
SpaceFreqField random_piecewise_field(std::mt19937_64& rng, const PiecewiseOptions& opts = {});
std::pair<SpaceFreqField, SpaceFreqField> random_piecewise_pair(std::mt19937_64& rng,
                                                                const PiecewiseOptions& opts = {});

/// i.i.d. complex Gaussian samples on the given grids.
SpaceFreqField random_dense_field(std::mt19937_64& rng, const AxisGrid& xgrid, const AxisGrid& wgrid);

/// Columns whose support is the single frequency cell wcell[ix]; a negative
/// entry leaves the column empty.
SpaceFreqField delta_field(const AxisGrid& xgrid, const AxisGrid& wgrid, const std::vector<long>& wcell,
                           cplx value = 1.0);

/// Grids used by the two counterexample fields below: x = -8..8 (x = 0 at an
/// even index) and w on [-4, 4] with step 0.5.
AxisGrid counterexample_xgrid();
AxisGrid counterexample_wgrid();

/// theta(-x) delta_{-1}(w) + theta(x) delta_{1}(w); the x = 0 column carries both.
SpaceFreqField jump_counterexample_field();

/// delta(w) on every column plus a box on [-1, 1] in the x = 0 column.
SpaceFreqField column_counterexample_field();

}  // namespace tslab
