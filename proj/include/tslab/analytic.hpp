#pragma once

#include <complex>

#include "tslab/field.hpp"

namespace tslab {

/// Sine-Gordon breather
///   u(x, t) = 4 arctan( sqrt(1 - w^2) cos(w t) / (w cosh(sqrt(1 - w^2) x)) ),
/// real valued and 2 pi / w periodic in t. Requires 0 < |w| < 1.
double breather_value(double omega, double x, double t);
SpaceTimeField breather_field(double omega, const AxisGrid& xgrid, const AxisGrid& tgrid);

/// Exact solution of i u_t = -u_xx - 2 |u|^2 u:
///   u(x, t) = (cos x + i sqrt(2) sinh t) / (sqrt(2) cosh t - cos x) * exp(i t).
std::complex<double> akhmediev_value(double x, double t);
SpaceTimeField akhmediev_field(const AxisGrid& xgrid, const AxisGrid& tgrid);

}  // namespace tslab
