#include "tslab/solver.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "tslab/errors.hpp"

namespace tslab {

void validate(const ModelSpec& model) {
  if (model.kind == ModelKind::nlkg && !(model.m > 0.0)) throw InvalidInput("NLKG model needs m > 0");
  if (!(model.dt > 0.0) || !std::isfinite(model.dt)) throw InvalidInput("model needs dt > 0");
  if (!(model.t_end >= 0.0) || !std::isfinite(model.t_end)) throw InvalidInput("model needs t_end >= 0");
}

std::vector<double> wave_numbers(const AxisGrid& xgrid) {
  const std::size_t n = xgrid.count();
  const double dk = 2.0 * std::numbers::pi / xgrid.length();
  std::vector<double> k(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto sj = static_cast<double>(j);
    k[j] = dk * (2 * j < n ? sj : sj - static_cast<double>(n));
  }
  return k;
}

namespace {

void check_state(const std::vector<cplx>& u, std::size_t n, const char* what) {
  if (u.size() != n) throw InvalidInput(std::string(what) + ": state size does not match x grid");
}

void check_finite(const std::vector<cplx>& u) {
  for (const cplx& z : u) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalBreakdown("non-finite value in solution state");
    }
  }
}

}  // namespace

struct Integrator::Impl {
  ModelSpec model;
  bool enforce_cfl;
  std::vector<double> k;
  detail::FftPlan fwd;
  detail::FftPlan bwd;
  std::vector<cplx> buf, hat;
  double kmax = 0.0;

  Impl(const ModelSpec& m, bool cfl)
      : model(m), enforce_cfl(cfl), k(wave_numbers(m.xgrid)), fwd(m.xgrid.count(), -1), bwd(m.xgrid.count(), +1),
        buf(m.xgrid.count()), hat(m.xgrid.count()) {
    for (double kj : k) kmax = std::max(kmax, std::abs(kj));
  }

  void check_cfl(double dt) const {
    if (!enforce_cfl || model.kind != ModelKind::nlkg) return;
    const double limit = 2.0 / std::sqrt(kmax * kmax + model.m * model.m);
    if (std::abs(dt) >= limit) {
      throw CflViolation("NLKG time step " + std::to_string(dt) + " violates the CFL bound " + std::to_string(limit));
    }
  }

  void nonlinear_phase(std::vector<cplx>& u, double tau) const {
    for (cplx& z : u) z *= std::polar(1.0, -model.alpha(std::norm(z)) * tau);
  }

  void linear_flow(std::vector<cplx>& u, double dt) {
    const double inv_n = 1.0 / static_cast<double>(u.size());
    fwd.execute(u, hat);
    for (std::size_t j = 0; j < hat.size(); ++j) hat[j] *= std::polar(inv_n, -k[j] * k[j] * dt);
    bwd.execute(hat, u);
  }

  // u_xx - m^2 u - alpha(|u|^2) u
  void acceleration(const std::vector<cplx>& u, std::vector<cplx>& a) {
    const double inv_n = 1.0 / static_cast<double>(u.size());
    const double m2 = model.m * model.m;
    fwd.execute(u, hat);
    for (std::size_t j = 0; j < hat.size(); ++j) hat[j] *= -(k[j] * k[j] + m2) * inv_n;
    bwd.execute(hat, a);
    for (std::size_t j = 0; j < u.size(); ++j) a[j] -= model.alpha(std::norm(u[j])) * u[j];
  }
};

Integrator::Integrator(const ModelSpec& model, bool enforce_cfl) {
  validate(model);
  impl_ = std::make_unique<Impl>(model, enforce_cfl);
  impl_->check_cfl(model.dt);
}

Integrator::~Integrator() = default;
Integrator::Integrator(Integrator&&) noexcept = default;
Integrator& Integrator::operator=(Integrator&&) noexcept = default;

const ModelSpec& Integrator::model() const { return impl_->model; }

void Integrator::nls_step(State& s, double dt) {
  check_state(s.u, impl_->k.size(), "nls_step");
  impl_->nonlinear_phase(s.u, 0.5 * dt);
  impl_->linear_flow(s.u, dt);
  impl_->nonlinear_phase(s.u, 0.5 * dt);
  check_finite(s.u);
}

void Integrator::nlkg_step(State& s, double dt) {
  const std::size_t n = impl_->k.size();
  check_state(s.u, n, "nlkg_step");
  if (s.v.empty()) s.v.assign(n, cplx{});
  check_state(s.v, n, "nlkg_step");
  impl_->check_cfl(dt);
  std::vector<cplx>& a = impl_->buf;
  impl_->acceleration(s.u, a);
  for (std::size_t j = 0; j < n; ++j) {
    s.v[j] += 0.5 * dt * a[j];
    s.u[j] += dt * s.v[j];
  }
  impl_->acceleration(s.u, a);
  for (std::size_t j = 0; j < n; ++j) s.v[j] += 0.5 * dt * a[j];
  check_finite(s.u);
  check_finite(s.v);
}

void Integrator::step(State& s, double dt) {
  if (impl_->model.kind == ModelKind::nls) {
    nls_step(s, dt);
  } else {
    nlkg_step(s, dt);
  }
}

State nls_step(const ModelSpec& model, State s, double dt) {
  Integrator(model).nls_step(s, dt);
  return s;
}

State nlkg_step(const ModelSpec& model, State s, double dt) {
  Integrator(model).nlkg_step(s, dt);
  return s;
}

double mass(const std::vector<cplx>& u, const AxisGrid& xgrid) {
  double acc = 0.0;
  for (const cplx& z : u) acc += std::norm(z);
  return acc * xgrid.step();
}

double energy(const State& s, const ModelSpec& model) {
  if (model.kind != ModelKind::nlkg) throw InvalidInput("energy: defined for NLKG models");
  const std::size_t n = model.xgrid.count();
  check_state(s.u, n, "energy");
  if (!s.v.empty()) check_state(s.v, n, "energy");

  const std::vector<double> k = wave_numbers(model.xgrid);
  detail::FftPlan fwd(n, -1);
  std::vector<cplx> hat(n);
  fwd.execute(s.u, hat);
  // Parseval: sum_j |u_x(x_j)|^2 = (1/N) sum_k k^2 |u^_k|^2.
  double grad = 0.0;
  for (std::size_t j = 0; j < n; ++j) grad += k[j] * k[j] * std::norm(hat[j]);
  grad /= static_cast<double>(n);

  double acc = 0.5 * grad;
  const double m2 = model.m * model.m;
  for (std::size_t j = 0; j < n; ++j) {
    const double tau = std::norm(s.u[j]);
    acc += 0.5 * m2 * tau + model.alpha.potential(tau);
    if (!s.v.empty()) acc += 0.5 * std::norm(s.v[j]);
  }
  return acc * model.xgrid.step();
}

std::size_t snapshot_count(const ModelSpec& model, std::size_t snapshot_every) {
  if (snapshot_every < 1) throw InvalidInput("snapshot_every must be >= 1");
  const auto steps = static_cast<std::size_t>(std::floor(model.t_end / model.dt + 1e-9));
  return steps / snapshot_every + 1;
}

SimRecord run_simulation(const ModelSpec& model, const State& initial, std::size_t snapshot_every) {
  validate(model);
  const std::size_t count = snapshot_count(model, snapshot_every);
  if (count < 2) throw InvalidInput("run_simulation: t_end covers fewer than two snapshots");
  const std::size_t nx = model.xgrid.count();

  Integrator integ(model);
  State s = initial;
  check_state(s.u, nx, "run_simulation");
  if (model.kind == ModelKind::nlkg && s.v.empty()) s.v.assign(nx, cplx{});

  const double frame_dt = model.dt * static_cast<double>(snapshot_every);
  std::vector<cplx> frames(nx * count);
  std::vector<double> times(count), trace(count);
  auto record = [&](std::size_t c) {
    times[c] = frame_dt * static_cast<double>(c);
    for (std::size_t j = 0; j < nx; ++j) frames[j * count + c] = s.u[j];
    trace[c] = model.kind == ModelKind::nls ? mass(s.u, model.xgrid) : energy(s, model);
  };

  record(0);
  for (std::size_t c = 1; c < count; ++c) {
    for (std::size_t i = 0; i < snapshot_every; ++i) integ.step(s, model.dt);
    record(c);
  }
  SpaceTimeField snaps(model.xgrid, AxisGrid(0.0, frame_dt, count), std::move(frames));
  return SimRecord{model, snapshot_every, std::move(times), std::move(snaps), std::move(trace)};
}

}  // namespace tslab
