#include "tslab/fourier.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "fft.hpp"
#include "tslab/errors.hpp"

namespace tslab {

namespace {

std::size_t half_count(std::size_t n) { return n / 2; }

// Position in unshifted DFT order of centered bin c.
std::size_t unshifted(std::size_t c, std::size_t n) { return (c + n - half_count(n)) % n; }

}  // namespace

AxisGrid dft_frequency_grid(const AxisGrid& tgrid) {
  const std::size_t n = tgrid.count();
  const double dw = 2.0 * std::numbers::pi / (static_cast<double>(n) * tgrid.step());
  return AxisGrid(-static_cast<double>(half_count(n)) * dw, dw, n);
}

SpaceFreqField time_fourier(const SpaceTimeField& u) {
  const AxisGrid wgrid = dft_frequency_grid(u.tgrid());
  const std::size_t n = u.cols();
  const double dt = u.tgrid().step();
  const double t0 = u.tgrid().origin();

  std::vector<cplx> phase(n);
  for (std::size_t c = 0; c < n; ++c) phase[c] = dt * std::polar(1.0, wgrid.coordinate(c) * t0);

  detail::FftPlan plan(n, +1);
  std::vector<cplx> spectrum(n);
  std::vector<cplx> out(u.values().size());
  for (std::size_t i = 0; i < u.rows(); ++i) {
    plan.execute(u.row(i), spectrum);
    for (std::size_t c = 0; c < n; ++c) out[i * n + c] = phase[c] * spectrum[unshifted(c, n)];
  }
  return SpaceFreqField(u.xgrid(), wgrid, std::move(out));
}

SpaceTimeField inverse_time_fourier(const SpaceFreqField& f, const AxisGrid& tgrid) {
  const AxisGrid expected = dft_frequency_grid(tgrid);
  if (!f.wgrid().same_as(expected, 1e-9)) {
    throw InvalidInput("inverse_time_fourier: frequency grid is not the DFT dual of the target time grid");
  }
  const std::size_t n = f.cols();
  const double dw = f.wgrid().step();
  const double t0 = tgrid.origin();
  const double scale = dw / (2.0 * std::numbers::pi);

  std::vector<cplx> phase(n);
  for (std::size_t c = 0; c < n; ++c) phase[c] = std::polar(1.0, -expected.coordinate(c) * t0);

  detail::FftPlan plan(n, -1);
  std::vector<cplx> buf(n);
  std::vector<cplx> row(n);
  std::vector<cplx> out(f.values().size());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t c = 0; c < n; ++c) buf[unshifted(c, n)] = f(i, c) * phase[c];
    plan.execute(buf, row);
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = scale * row[j];
  }
  return SpaceTimeField(f.xgrid(), tgrid, std::move(out));
}

}  // namespace tslab
