#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "tslab/field.hpp"
#include "tslab/nonlinearity.hpp"

namespace tslab {

enum class ModelKind { nls, nlkg };

/// NLS:   i u_t = -u_xx + alpha(|u|^2) u
/// NLKG: -u_tt = -u_xx + m^2 u + alpha(|u|^2) u,  m > 0
/// on the periodic box spanned by xgrid (length count * step).
struct ModelSpec {
  ModelKind kind = ModelKind::nls;
  double m = 0.0;
  Nonlinearity alpha;
  AxisGrid xgrid;
  double dt = 1e-3;
  double t_end = 1.0;
};

/// Throws InvalidInput on m <= 0 for NLKG, dt <= 0 or t_end < 0.
void validate(const ModelSpec& model);

/// u, and v = u_t for NLKG (empty for NLS).
struct State {
  std::vector<cplx> u;
  std::vector<cplx> v;
};

/// Angular wave numbers of the periodic box in FFT order; the Nyquist mode
/// of an even grid is assigned -N/2.
std::vector<double> wave_numbers(const AxisGrid& xgrid);

/// Reusable stepper for one model; owns its FFT plans. Not thread-safe.
class Integrator {
 public:
  /// Throws CflViolation for NLKG when |dt| >= 2 / sqrt(k_max^2 + m^2) unless
  /// enforce_cfl is false. The check is repeated in step() for other dt.
  explicit Integrator(const ModelSpec& model, bool enforce_cfl = true);
  ~Integrator();
  Integrator(Integrator&&) noexcept;
  Integrator& operator=(Integrator&&) noexcept;

  /// Strang splitting: exact nonlinear phase for dt/2, exact linear flow
  /// exp(-i k^2 dt) in Fourier space, nonlinear phase for dt/2.
  void nls_step(State& s, double dt);
  /// Stormer-Verlet (kick-drift-kick) with u_tt = u_xx - m^2 u - alpha(|u|^2) u.
  void nlkg_step(State& s, double dt);
  /// Dispatches on the model kind.
  void step(State& s, double dt);

  const ModelSpec& model() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Convenience wrappers that build a throwaway Integrator.
State nls_step(const ModelSpec& model, State s, double dt);
State nlkg_step(const ModelSpec& model, State s, double dt);

/// sum |u|^2 dx.
double mass(const std::vector<cplx>& u, const AxisGrid& xgrid);

/// sum [ |v|^2/2 + |u_x|^2/2 + m^2 |u|^2/2 + G(|u|^2) ] dx with a spectral
/// derivative and G(tau) = 1/2 int_0^tau alpha. NLKG models only.
double energy(const State& s, const ModelSpec& model);

/// Full run output. snapshots has x rows and one column per snapshot time.
struct SimRecord {
  ModelSpec model;
  std::size_t snapshot_every = 1;
  std::vector<double> times;
  SpaceTimeField snapshots;
  /// Mass (NLS) or energy (NLKG) per snapshot.
  std::vector<double> invariant_trace;
};

/// Integrates floor(t_end / dt) steps, recording every snapshot_every-th
/// state including the initial one. At least two snapshots are required.
SimRecord run_simulation(const ModelSpec& model, const State& initial, std::size_t snapshot_every);

/// Snapshot count for a run: floor(floor(t_end/dt) / snapshot_every) + 1.
std::size_t snapshot_count(const ModelSpec& model, std::size_t snapshot_every);

}  // namespace tslab
