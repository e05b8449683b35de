#include "tslab/field_generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tslab/errors.hpp"

namespace tslab {

AxisGrid piecewise_xgrid(const PiecewiseOptions& opts) { return AxisGrid(0.0, 1.0, opts.x_cells); }

AxisGrid piecewise_wgrid(const PiecewiseOptions& opts) {
  const double half = 0.5 * static_cast<double>(opts.w_cells - 1) * opts.dw;
  return AxisGrid(-half, opts.dw, opts.w_cells);
}

namespace {

std::size_t uniform_index(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

cplx random_phase(std::mt19937_64& rng, double modulus) {
  const double theta = std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng);
  return std::polar(modulus, theta);
}

void check_options(const PiecewiseOptions& opts) {
  if (opts.min_run < 1 || opts.x_cells < 2 * opts.min_run) throw InvalidInput("PiecewiseOptions: x_cells too small");
  if (opts.w_cells < 2 || opts.max_box_cells < 1) throw InvalidInput("PiecewiseOptions: bad frequency box");
  if (!(opts.boundary_min > 0.0 && opts.boundary_min <= 1.0)) throw InvalidInput("PiecewiseOptions: boundary_min");
}

// Extends run starts from `pos` so every run keeps at least min_run cells.
std::vector<std::size_t> grow_breaks(std::mt19937_64& rng, const PiecewiseOptions& opts,
                                     const std::vector<std::size_t>& allowed) {
  std::vector<std::size_t> out{0};
  std::size_t pos = 0;
  for (;;) {
    std::vector<std::size_t> cand;
    for (std::size_t c : allowed) {
      if (c >= pos + opts.min_run && c + opts.min_run <= opts.x_cells) cand.push_back(c);
    }
    if (cand.empty()) break;
    // Stop early now and then so run lengths vary.
    if (std::bernoulli_distribution(0.15)(rng)) break;
    const std::size_t span = std::min<std::size_t>(cand.size(), 8);
    pos = cand[uniform_index(rng, 0, span - 1)];
    out.push_back(pos);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> random_breakpoints(std::mt19937_64& rng, const PiecewiseOptions& opts) {
  check_options(opts);
  std::vector<std::size_t> all(opts.x_cells);
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return grow_breaks(rng, opts, all);
}

std::vector<std::size_t> compatible_breakpoints(std::mt19937_64& rng, const std::vector<std::size_t>& reference,
                                                const PiecewiseOptions& opts) {
  check_options(opts);
  std::vector<std::size_t> allowed;
  for (std::size_t c = 0; c < opts.x_cells; ++c) {
    bool shared = false;
    std::size_t dist = opts.x_cells;
    for (std::size_t r : reference) {
      if (r == 0) continue;
      shared = shared || r == c;
      dist = std::min(dist, c > r ? c - r : r - c);
    }
    if (shared || dist >= opts.min_separation) allowed.push_back(c);
  }
  return grow_breaks(rng, opts, allowed);
}

SpaceFreqField random_piecewise_field(std::mt19937_64& rng, const std::vector<std::size_t>& breakpoints,
                                      const PiecewiseOptions& opts) {
  check_options(opts);
  const AxisGrid xg = piecewise_xgrid(opts);
  const AxisGrid wg = piecewise_wgrid(opts);
  const std::size_t nw = opts.w_cells;
  std::vector<cplx> values(opts.x_cells * nw);
  std::uniform_real_distribution<double> edge(opts.boundary_min, 1.0);
  std::uniform_real_distribution<double> inner(0.0, 1.0);

  for (std::size_t b = 0; b < breakpoints.size(); ++b) {
    const std::size_t start = breakpoints[b];
    const std::size_t stop = b + 1 < breakpoints.size() ? breakpoints[b + 1] : opts.x_cells;
    if (std::bernoulli_distribution(opts.empty_probability)(rng)) continue;
    const std::size_t width = uniform_index(rng, 1, std::min(opts.max_box_cells, nw));
    const std::size_t lo = uniform_index(rng, 0, nw - width);
    const std::size_t hi = lo + width - 1;
    for (std::size_t ix = start; ix < stop; ++ix) {
      for (std::size_t k = lo; k <= hi; ++k) {
        double mod = 0.0;
        if (k == lo || k == hi) {
          mod = edge(rng);
        } else if (!std::bernoulli_distribution(0.1)(rng)) {
          mod = inner(rng);
        }
        values[ix * nw + k] = random_phase(rng, mod);
      }
    }
  }
  return SpaceFreqField(xg, wg, std::move(values));
}

SpaceFreqField random_piecewise_field(std::mt19937_64& rng, const PiecewiseOptions& opts) {
  const auto breaks = random_breakpoints(rng, opts);
  return random_piecewise_field(rng, breaks, opts);
}

std::pair<SpaceFreqField, SpaceFreqField> random_piecewise_pair(std::mt19937_64& rng, const PiecewiseOptions& opts) {
  const auto fb = random_breakpoints(rng, opts);
  const auto gb = compatible_breakpoints(rng, fb, opts);
  SpaceFreqField f = random_piecewise_field(rng, fb, opts);
  SpaceFreqField g = random_piecewise_field(rng, gb, opts);
  return {std::move(f), std::move(g)};
}

SpaceFreqField random_dense_field(std::mt19937_64& rng, const AxisGrid& xgrid, const AxisGrid& wgrid) {
  std::normal_distribution<double> n01;
  std::vector<cplx> values(xgrid.count() * wgrid.count());
  for (cplx& v : values) v = cplx(n01(rng), n01(rng));
  return SpaceFreqField(xgrid, wgrid, std::move(values));
}

SpaceFreqField delta_field(const AxisGrid& xgrid, const AxisGrid& wgrid, const std::vector<long>& wcell, cplx value) {
  if (wcell.size() != xgrid.count()) throw InvalidInput("delta_field: one cell index per column required");
  std::vector<cplx> values(xgrid.count() * wgrid.count());
  for (std::size_t ix = 0; ix < wcell.size(); ++ix) {
    if (wcell[ix] < 0) continue;
    const auto k = static_cast<std::size_t>(wcell[ix]);
    if (k >= wgrid.count()) throw InvalidInput("delta_field: cell index out of range");
    values[ix * wgrid.count() + k] = value;
  }
  return SpaceFreqField(xgrid, wgrid, std::move(values));
}

AxisGrid counterexample_xgrid() { return AxisGrid(-8.0, 1.0, 17); }
AxisGrid counterexample_wgrid() { return AxisGrid(-4.0, 0.5, 17); }

namespace {

std::size_t counterexample_cell(double w) { return *counterexample_wgrid().lattice_index(w); }

}  // namespace

SpaceFreqField jump_counterexample_field() {
  const AxisGrid xg = counterexample_xgrid();
  const AxisGrid wg = counterexample_wgrid();
  std::vector<cplx> values(xg.count() * wg.count());
  for (std::size_t ix = 0; ix < xg.count(); ++ix) {
    const double x = xg.coordinate(ix);
    if (x <= 0.0) values[ix * wg.count() + counterexample_cell(-1.0)] = 1.0;
    if (x >= 0.0) values[ix * wg.count() + counterexample_cell(1.0)] = 1.0;
  }
  return SpaceFreqField(xg, wg, std::move(values));
}

SpaceFreqField column_counterexample_field() {
  const AxisGrid xg = counterexample_xgrid();
  const AxisGrid wg = counterexample_wgrid();
  const std::size_t x0 = *xg.lattice_index(0.0);
  std::vector<cplx> values(xg.count() * wg.count());
  for (std::size_t ix = 0; ix < xg.count(); ++ix) values[ix * wg.count() + counterexample_cell(0.0)] = 1.0;
  for (std::size_t k = counterexample_cell(-1.0); k <= counterexample_cell(1.0); ++k) values[x0 * wg.count() + k] = 1.0;
  return SpaceFreqField(xg, wg, std::move(values));
}

}  // namespace tslab
