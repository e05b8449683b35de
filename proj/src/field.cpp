#include "tslab/field.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "tslab/errors.hpp"

namespace tslab {

AxisGrid::AxisGrid(double origin, double step, std::size_t count)
    : origin_(origin), step_(step), count_(count) {
  if (!std::isfinite(origin) || !std::isfinite(step) || !(step > 0.0)) {
    throw InvalidInput("AxisGrid: step must be finite and positive");
  }
  if (count < 2) {
    throw InvalidInput("AxisGrid: count must be at least 2");
  }
}

AxisGrid AxisGrid::from_coordinates(std::span<const double> coords, double rel_tol) {
  if (coords.size() < 2) {
    throw InvalidInput("AxisGrid: need at least two coordinates");
  }
  const double step = (coords.back() - coords.front()) / static_cast<double>(coords.size() - 1);
  if (!(step > 0.0)) {
    throw InvalidInput("AxisGrid: coordinates must be strictly increasing");
  }
  for (std::size_t i = 1; i < coords.size(); ++i) {
    const double d = coords[i] - coords[i - 1];
    if (std::abs(d - step) > rel_tol * step) {
      std::ostringstream msg;
      msg << "AxisGrid: non-uniform spacing at index " << i << " (" << d << " vs " << step << ")";
      throw InvalidInput(msg.str());
    }
  }
  return AxisGrid(coords.front(), step, coords.size());
}

std::optional<std::size_t> AxisGrid::lattice_index(double coord, double rel_tol) const {
  const double r = (coord - origin_) / step_;
  const double n = std::round(r);
  if (std::abs(r - n) > rel_tol || n < 0.0 || n > static_cast<double>(count_ - 1)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(n);
}

bool AxisGrid::same_step(const AxisGrid& other, double rel_tol) const {
  return std::abs(step_ - other.step_) <= rel_tol * std::max(step_, other.step_);
}

bool AxisGrid::same_as(const AxisGrid& other, double rel_tol) const {
  return count_ == other.count_ && same_step(other, rel_tol) &&
         std::abs(origin_ - other.origin_) <= rel_tol * std::max(1.0, std::abs(origin_)) + rel_tol * step_;
}

bool AxisGrid::is_symmetric(double rel_tol) const {
  // origin + back == 0
  return std::abs(origin_ + back()) <= rel_tol * step_;
}

template <Domain D>
Field<D>::Field(AxisGrid xgrid, AxisGrid axis, std::vector<cplx> values)
    : xgrid_(xgrid), axis_(axis), values_(std::move(values)) {
  if (values_.size() != xgrid_.count() * axis_.count()) {
    throw InvalidInput("Field: value count does not match grid dimensions");
  }
  for (const cplx& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidInput("Field: values must be finite");
    }
  }
}

template <Domain D>
Field<D>::Field(AxisGrid xgrid, AxisGrid axis)
    : xgrid_(xgrid), axis_(axis), values_(xgrid.count() * axis.count(), cplx{}) {}

template <Domain D>
double Field<D>::l2_norm() const {
  double s = 0.0;
  for (const cplx& v : values_) s += std::norm(v);
  return std::sqrt(s * xgrid_.step() * axis_.step());
}

template <Domain D>
double Field<D>::max_abs() const {
  double m = 0.0;
  for (const cplx& v : values_) m = std::max(m, std::abs(v));
  return m;
}

template class Field<Domain::time>;
template class Field<Domain::frequency>;

SupportMask::SupportMask(AxisGrid xgrid, AxisGrid wgrid, std::vector<std::uint8_t> cells,
                         double threshold_used)
    : xgrid_(xgrid), wgrid_(wgrid), cells_(std::move(cells)), threshold_used_(threshold_used) {
  if (cells_.size() != xgrid_.count() * wgrid_.count()) {
    throw InvalidInput("SupportMask: cell count does not match grid dimensions");
  }
  if (!(threshold_used_ >= 0.0)) {
    throw InvalidInput("SupportMask: threshold must be non-negative");
  }
}

std::size_t SupportMask::popcount() const {
  return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](std::uint8_t c) { return c != 0; }));
}

SupportMask support_mask(const SpaceFreqField& f, double rel_threshold) {
  if (!(rel_threshold >= 0.0 && rel_threshold < 1.0)) {
    throw InvalidInput("support_mask: rel_threshold must lie in [0, 1)");
  }
  const double cut = rel_threshold * f.max_abs();
  std::vector<std::uint8_t> cells(f.values().size());
  std::transform(f.values().begin(), f.values().end(), cells.begin(),
                 [cut](const cplx& v) { return static_cast<std::uint8_t>(std::abs(v) > cut); });
  return SupportMask(f.xgrid(), f.wgrid(), std::move(cells), rel_threshold);
}

SpaceFreqField sharp(const SpaceFreqField& f) {
  if (!f.wgrid().is_symmetric()) {
    throw InvalidInput("sharp: frequency grid is not symmetric about zero");
  }
  const std::size_t nw = f.cols();
  std::vector<cplx> out(f.values().size());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < nw; ++k) {
      out[i * nw + k] = std::conj(f(i, nw - 1 - k));
    }
  }
  return SpaceFreqField(f.xgrid(), f.wgrid(), std::move(out));
}

SpaceTimeField conjugate(const SpaceTimeField& u) {
  std::vector<cplx> out(u.values().begin(), u.values().end());
  for (cplx& v : out) v = std::conj(v);
  return SpaceTimeField(u.xgrid(), u.tgrid(), std::move(out));
}

}  // namespace tslab
