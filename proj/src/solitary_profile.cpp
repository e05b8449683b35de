#include "tslab/solitary_profile.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tslab/errors.hpp"

namespace tslab {

double decay_constant(const ModelSpec& model, double omega) {
  return model.kind == ModelKind::nls ? -omega : model.m * model.m - omega * omega;
}

namespace {

enum class Shot { overshoot, undershoot, undecided };

constexpr double kTailFraction = 1e-4;
constexpr double kMaxFineStep = 2e-3;

struct Ode {
  const Nonlinearity& alpha;
  double c;
  // y = (phi, phi')
  std::array<double, 2> rhs(const std::array<double, 2>& y) const {
    return {y[1], c * y[0] + alpha(y[0] * y[0]) * y[0]};
  }
  std::array<double, 2> rk4(const std::array<double, 2>& y, double h) const {
    auto add = [](const std::array<double, 2>& a, const std::array<double, 2>& b, double s) {
      return std::array<double, 2>{a[0] + s * b[0], a[1] + s * b[1]};
    };
    const auto k1 = rhs(y);
    const auto k2 = rhs(add(y, k1, 0.5 * h));
    const auto k3 = rhs(add(y, k2, 0.5 * h));
    const auto k4 = rhs(add(y, k3, h));
    return {y[0] + h / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
  }
};

struct Trajectory {
  Shot kind = Shot::undecided;
  // Samples up to the point where phi first drops below kTailFraction * p.
  std::vector<std::array<double, 2>> y;
};

Trajectory shoot(const Ode& ode, double p, double h, std::size_t max_steps, bool keep) {
  Trajectory t;
  std::array<double, 2> y{p, 0.0};
  bool tail_reached = false;
  if (keep) t.y.push_back(y);
  for (std::size_t i = 0; i < max_steps; ++i) {
    y = ode.rk4(y, h);
    if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
      t.kind = Shot::overshoot;
      return t;
    }
    if (y[0] < 0.0) {
      t.kind = Shot::overshoot;
      return t;
    }
    if (y[1] > 0.0) {
      t.kind = Shot::undershoot;
      return t;
    }
    if (keep && !tail_reached) {
      t.y.push_back(y);
      tail_reached = y[0] < kTailFraction * p;
    }
  }
  return t;
}

}  // namespace

SolitaryWaveProfile solitary_profile(const ModelSpec& model, double omega, double guess_amplitude) {
  validate(model);
  const double c = decay_constant(model, omega);
  if (!(c > 0.0)) throw NoSolution("solitary_profile: no decaying profile, need a positive decay constant");
  if (!(guess_amplitude > 0.0)) throw InvalidInput("solitary_profile: guess_amplitude must be positive");

  const AxisGrid& xg = model.xgrid;
  double xmax = 0.0;
  for (std::size_t j = 0; j < xg.count(); ++j) xmax = std::max(xmax, std::abs(xg.coordinate(j)));
  const auto sub = static_cast<std::size_t>(std::ceil(xg.step() / kMaxFineStep));
  const double h = xg.step() / static_cast<double>(sub);
  const auto fine_n = static_cast<std::size_t>(std::ceil(xmax / h)) + 3;

  const Ode ode{model.alpha, c};
  auto classify = [&](double p) { return shoot(ode, p, h, fine_n, false).kind; };

  double lo = guess_amplitude;
  double hi = guess_amplitude;
  // An undecided shot at the guess is usually a constant equilibrium; search upward.
  Shot s = classify(guess_amplitude);
  for (int i = 0; s != Shot::overshoot; ++i) {
    if (i > 60) throw NoSolution("solitary_profile: no overshoot found (defocusing nonlinearity?)");
    lo = hi;
    hi *= 2.0;
    s = classify(hi);
  }
  if (lo == hi) {
    for (int i = 0;; ++i) {
      if (i > 200) throw NoSolution("solitary_profile: no undershoot found");
      lo *= 0.5;
      const Shot t = classify(lo);
      if (t == Shot::undershoot) break;
      if (t == Shot::overshoot) hi = lo;
    }
  }
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const Shot t = classify(mid);
    if (t == Shot::overshoot) {
      hi = mid;
    } else if (t == Shot::undershoot) {
      lo = mid;
    } else {
      lo = hi = mid;
      break;
    }
  }

  const double p = 0.5 * (lo + hi);
  Trajectory traj = shoot(ode, p, h, fine_n, true);
  if (traj.y.size() < 8 || traj.y.back()[0] >= kTailFraction * p) {
    throw NoSolution("solitary_profile: profile does not decay inside the box");
  }

  // Fine-mesh profile on [0, (fine_n + 2) h]: RK4 samples, then the
  // exponential tail matched to the last sample.
  const double kappa = std::sqrt(c);
  const std::size_t m = traj.y.size() - 1;
  const double phi_m = traj.y[m][0];
  std::vector<double> phi(fine_n + 3), dphi(fine_n + 3);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i <= m) {
      phi[i] = traj.y[i][0];
      dphi[i] = traj.y[i][1];
    } else {
      phi[i] = phi_m * std::exp(-kappa * h * static_cast<double>(i - m));
      dphi[i] = -kappa * phi[i];
    }
  }

  SolitaryWaveProfile out;
  out.omega = omega;
  out.phi.resize(xg.count());
  for (std::size_t j = 0; j < xg.count(); ++j) {
    // Cubic Hermite on the fine mesh.
    const double x = std::abs(xg.coordinate(j));
    const auto i = std::min(static_cast<std::size_t>(x / h), phi.size() - 2);
    const double s01 = x / h - static_cast<double>(i);
    const double h00 = (1 + 2 * s01) * (1 - s01) * (1 - s01);
    const double h10 = s01 * (1 - s01) * (1 - s01);
    const double h01 = s01 * s01 * (3 - 2 * s01);
    const double h11 = s01 * s01 * (s01 - 1);
    out.phi[j] = h00 * phi[i] + h10 * h * dphi[i] + h01 * phi[i + 1] + h11 * h * dphi[i + 1];
  }

  // Residual -phi'' + c phi + alpha(phi^2) phi with a fourth-order stencil,
  // using evenness across x = 0; the line integral doubles the half-line one.
  auto at = [&](std::ptrdiff_t i) { return phi[static_cast<std::size_t>(std::abs(i))]; };
  double res2 = 0.0;
  double grad2 = 0.0, mass2 = 0.0, pot = 0.0;
  const auto last = static_cast<std::ptrdiff_t>(phi.size()) - 3;
  for (std::ptrdiff_t i = 0; i <= last; ++i) {
    const double d2 = (-at(i - 2) + 16 * at(i - 1) - 30 * at(i) + 16 * at(i + 1) - at(i + 2)) / (12 * h * h);
    const double f = at(i);
    const double r = d2 - c * f - model.alpha(f * f) * f;
    const double w = (i == 0) ? 0.5 : 1.0;
    res2 += w * r * r;
    const double dp = dphi[static_cast<std::size_t>(i)];
    grad2 += w * dp * dp;
    mass2 += w * f * f;
    pot += w * model.alpha.potential(f * f);
  }
  out.residual_norm = std::sqrt(2.0 * res2 * h);
  const double lhs = 2.0 * grad2 * h;
  out.pohozaev_residual = std::abs(lhs - c * 2.0 * mass2 * h - 2.0 * 2.0 * pot * h) / lhs;
  return out;
}

State solitary_state(const ModelSpec& model, const SolitaryWaveProfile& p) {
  if (p.phi.size() != model.xgrid.count()) throw InvalidInput("solitary_state: profile does not match x grid");
  State s;
  s.u.assign(p.phi.begin(), p.phi.end());
  if (model.kind == ModelKind::nlkg) {
    s.v.resize(p.phi.size());
    for (std::size_t j = 0; j < p.phi.size(); ++j) s.v[j] = cplx(0.0, -p.omega) * p.phi[j];
  }
  return s;
}

}  // namespace tslab
