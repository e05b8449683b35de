#include "tslab/analytic.hpp"

#include <cmath>
#include <numbers>

#include "tslab/errors.hpp"

namespace tslab {

double breather_value(double omega, double x, double t) {
  if (!(std::abs(omega) < 1.0) || omega == 0.0) throw InvalidInput("breather: need 0 < |omega| < 1");
  const double q = std::sqrt(1.0 - omega * omega);
  return 4.0 * std::atan(q * std::cos(omega * t) / (omega * std::cosh(q * x)));
}

SpaceTimeField breather_field(double omega, const AxisGrid& xgrid, const AxisGrid& tgrid) {
  if (!(std::abs(omega) < 1.0) || omega == 0.0) throw InvalidInput("breather: need 0 < |omega| < 1");
  std::vector<cplx> values(xgrid.count() * tgrid.count());
  for (std::size_t i = 0; i < xgrid.count(); ++i) {
    for (std::size_t j = 0; j < tgrid.count(); ++j) {
      values[i * tgrid.count() + j] = breather_value(omega, xgrid.coordinate(i), tgrid.coordinate(j));
    }
  }
  return SpaceTimeField(xgrid, tgrid, std::move(values));
}

std::complex<double> akhmediev_value(double x, double t) {
  const double r2 = std::numbers::sqrt2;
  // Amplitude 1/sqrt(2) matches the focusing coefficient 2 of i u_t = -u_xx - 2|u|^2 u.
  const std::complex<double> num(std::cos(x), r2 * std::sinh(t));
  return num / (r2 * std::cosh(t) - std::cos(x)) * std::polar(1.0 / r2, t);
}

SpaceTimeField akhmediev_field(const AxisGrid& xgrid, const AxisGrid& tgrid) {
  std::vector<cplx> values(xgrid.count() * tgrid.count());
  for (std::size_t i = 0; i < xgrid.count(); ++i) {
    for (std::size_t j = 0; j < tgrid.count(); ++j) {
      values[i * tgrid.count() + j] = akhmediev_value(xgrid.coordinate(i), tgrid.coordinate(j));
    }
  }
  return SpaceTimeField(xgrid, tgrid, std::move(values));
}

}  // namespace tslab
