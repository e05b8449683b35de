#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tslab {

using cplx = std::complex<double>;

/// Uniform 1-D lattice, coordinate(i) = origin + i * step.
class AxisGrid {
 public:
  AxisGrid(double origin, double step, std::size_t count);

  /// Builds a grid from sampled coordinates; throws InvalidInput unless they
  /// are uniformly spaced to within rel_tol of the mean step.
  static AxisGrid from_coordinates(std::span<const double> coords, double rel_tol = 1e-9);

  double origin() const { return origin_; }
  double step() const { return step_; }
  std::size_t count() const { return count_; }
  double coordinate(std::size_t i) const { return origin_ + static_cast<double>(i) * step_; }
  double back() const { return coordinate(count_ - 1); }
  double length() const { return step_ * static_cast<double>(count_); }

  /// Nearest lattice index of `coord`, if it lies on the lattice to within
  /// rel_tol * step.
  std::optional<std::size_t> lattice_index(double coord, double rel_tol = 1e-6) const;

  bool same_as(const AxisGrid& other, double rel_tol = 1e-12) const;
  bool same_step(const AxisGrid& other, double rel_tol = 1e-12) const;

  /// True when reflection w -> -w maps the lattice onto itself.
  bool is_symmetric(double rel_tol = 1e-9) const;

 private:
  double origin_;
  double step_;
  std::size_t count_;
};

enum class Domain { time, frequency };

/// Complex samples on an x-grid times a second axis (time or frequency),
/// stored row-major: values[ix * axis.count() + j]. Immutable once built.
template <Domain D>
class Field {
 public:
  Field(AxisGrid xgrid, AxisGrid axis, std::vector<cplx> values);
  Field(AxisGrid xgrid, AxisGrid axis);  // zero field

  const AxisGrid& xgrid() const { return xgrid_; }
  const AxisGrid& axis() const { return axis_; }
  const AxisGrid& tgrid() const requires(D == Domain::time) { return axis_; }
  const AxisGrid& wgrid() const requires(D == Domain::frequency) { return axis_; }

  std::size_t rows() const { return xgrid_.count(); }
  std::size_t cols() const { return axis_.count(); }
  cplx operator()(std::size_t ix, std::size_t j) const { return values_[ix * cols() + j]; }
  std::span<const cplx> row(std::size_t ix) const {
    return std::span<const cplx>(values_).subspan(ix * cols(), cols());
  }
  std::span<const cplx> values() const { return values_; }

  /// Discrete L2 norm, sqrt(sum |v|^2 dx d(axis)).
  double l2_norm() const;
  double max_abs() const;

 private:
  AxisGrid xgrid_;
  AxisGrid axis_;
  std::vector<cplx> values_;
};

using SpaceTimeField = Field<Domain::time>;
using SpaceFreqField = Field<Domain::frequency>;

extern template class Field<Domain::time>;
extern template class Field<Domain::frequency>;

/// Discrete proxy for supp f: cells with |f| > threshold_used * max|f|.
class SupportMask {
 public:
  SupportMask(AxisGrid xgrid, AxisGrid wgrid, std::vector<std::uint8_t> cells, double threshold_used);

  const AxisGrid& xgrid() const { return xgrid_; }
  const AxisGrid& wgrid() const { return wgrid_; }
  double threshold_used() const { return threshold_used_; }
  std::size_t rows() const { return xgrid_.count(); }
  std::size_t cols() const { return wgrid_.count(); }
  bool operator()(std::size_t ix, std::size_t k) const { return cells_[ix * cols() + k] != 0; }
  std::size_t popcount() const;

 private:
  AxisGrid xgrid_;
  AxisGrid wgrid_;
  std::vector<std::uint8_t> cells_;
  double threshold_used_;
};

inline constexpr double kDefaultSupportThreshold = 1e-8;

/// Requires 0 <= rel_threshold < 1. A zero field yields an empty mask.
SupportMask support_mask(const SpaceFreqField& f, double rel_threshold = kDefaultSupportThreshold);

/// f#(x, w) = conj(f(x, -w)). The frequency lattice must be symmetric about 0.
SpaceFreqField sharp(const SpaceFreqField& f);

/// Pointwise complex conjugate of a space-time field.
SpaceTimeField conjugate(const SpaceTimeField& u);

}  // namespace tslab
