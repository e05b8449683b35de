#pragma once

#include <vector>

#include "tslab/solver.hpp"

namespace tslab {

/// Even, positive, decaying phi with u = phi(x) exp(-i omega t) solving
///   NLS:  omega phi = -phi'' + alpha(phi^2) phi
///   NLKG: -phi'' + (m^2 - omega^2) phi + alpha(phi^2) phi = 0,
/// i.e. phi'' = c phi + alpha(phi^2) phi with c = -omega (NLS) or
/// c = m^2 - omega^2 (NLKG). Decay needs c > 0.
struct SolitaryWaveProfile {
  double omega = 0.0;
  /// Samples on model.xgrid (|x| is used; the box is centred on 0).
  std::vector<double> phi;
  /// L2 norm over the real line of the ODE residual of the constructed profile.
  double residual_norm = 0.0;
  /// |int phi'^2 - c int phi^2 - 2 int G(phi^2)| / int phi'^2.
  double pohozaev_residual = 0.0;
};

/// c for the model and frequency; may be <= 0.
double decay_constant(const ModelSpec& model, double omega);

/// Shooting from (phi, phi') = (p, 0) with bisection on p, fine-step RK4, and
/// an exponential tail exp(-sqrt(c) x) once phi has decayed by 1e-4.
/// Throws NoSolution when c <= 0 or no overshoot/undershoot bracket exists
/// (e.g. a defocusing nonlinearity).
SolitaryWaveProfile solitary_profile(const ModelSpec& model, double omega, double guess_amplitude = 1.0);

/// u(0) = phi and, for NLKG, u_t(0) = -i omega phi.
State solitary_state(const ModelSpec& model, const SolitaryWaveProfile& p);

}  // namespace tslab
