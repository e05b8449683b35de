#include "tslab/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>

#include "tslab/analytic.hpp"
#include "tslab/field_generators.hpp"
#include "tslab/field_io.hpp"
#include "tslab/report_json.hpp"
#include "tslab/solitary_profile.hpp"
#include "tslab/spectrum.hpp"
#include "tslab/titchmarsh.hpp"

namespace tslab {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

template <typename Fn>
int guarded(std::ostream& err, Fn fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NoSolution& e) {
    err << "no solution: " << e.what() << '\n';
    return kExitFailure;
  } catch (const NumericalBreakdown& e) {
    err << "numerical breakdown: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

void write_json_file(const fs::path& path, const json& j) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << j.dump(2) << '\n';
}

fs::path out_dir(const CommandOptions& opts) {
  const fs::path dir = opts.out.value_or(fs::path("tslab-out"));
  fs::create_directories(dir);
  return dir;
}

json profile_values(const BoundProfile& p) { return to_json(p); }

}  // namespace

ExperimentConfig resolve_config(const CommandOptions& opts) {
  ExperimentConfig cfg = opts.config ? load_config(*opts.config) : ExperimentConfig{};
  if (opts.seed) cfg.seed = *opts.seed;
  return cfg;
}

State make_initial_state(const ExperimentConfig& cfg, const ModelSpec& model) {
  const AxisGrid& xg = model.xgrid;
  State s;
  if (cfg.initial_kind == "profile") {
    const SolitaryWaveProfile p = solitary_profile(model, cfg.initial_omega.value_or(-1.0), cfg.initial_amplitude);
    s = solitary_state(model, p);
  } else if (cfg.initial_kind == "gaussian") {
    if (!(cfg.initial_width > 0.0)) throw ConfigError("initial.width must be positive");
    s.u.resize(xg.count());
    for (std::size_t j = 0; j < xg.count(); ++j) {
      const double z = (xg.coordinate(j) - cfg.initial_center) / cfg.initial_width;
      s.u[j] = cfg.initial_amplitude * std::exp(-z * z);
    }
  } else if (cfg.initial_kind == "file") {
    if (cfg.initial_path.empty()) throw ConfigError("initial.kind = file needs initial.path");
    const SpaceTimeField f = load_field<Domain::time>(cfg.initial_path);
    if (f.rows() != xg.count()) throw ConfigError("initial.path: field has " + std::to_string(f.rows()) + " x points, nx is " + std::to_string(xg.count()));
    s.u.resize(xg.count());
    for (std::size_t j = 0; j < xg.count(); ++j) s.u[j] = f(j, 0);
  } else {
    throw ConfigError("initial.kind '" + cfg.initial_kind + "' has no integrable initial state");
  }
  if (cfg.initial_noise < 0.0) throw ConfigError("initial.noise must be non-negative");
  if (cfg.initial_noise > 0.0) {
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> n01;
    for (cplx& z : s.u) z += cfg.initial_noise * cplx(n01(rng), n01(rng));
  }
  if (model.kind == ModelKind::nlkg && s.v.empty()) s.v.assign(xg.count(), cplx{});
  return s;
}

SimRecord make_record(const ExperimentConfig& cfg) {
  const ModelSpec model = make_model(cfg);
  if (cfg.initial_kind != "breather" && cfg.initial_kind != "akhmediev") {
    return run_simulation(model, make_initial_state(cfg, model), cfg.snapshot_every);
  }
  const std::size_t count = snapshot_count(model, cfg.snapshot_every);
  if (count < 2) throw ConfigError("t_end covers fewer than two snapshots");
  const double frame_dt = model.dt * static_cast<double>(cfg.snapshot_every);
  SpaceTimeField snaps = [&] {
    if (cfg.initial_kind == "breather") {
      return breather_field(cfg.initial_omega.value_or(0.8), model.xgrid, AxisGrid(0.0, frame_dt, count));
    }
    // Centre the Akhmediev pulse in the record.
    const double t0 = -0.5 * frame_dt * static_cast<double>(count - 1);
    return akhmediev_field(model.xgrid, AxisGrid(t0, frame_dt, count));
  }();
  std::vector<double> times(count), trace(count);
  for (std::size_t c = 0; c < count; ++c) {
    times[c] = snaps.tgrid().coordinate(c);
    double acc = 0.0;
    for (std::size_t i = 0; i < snaps.rows(); ++i) acc += std::norm(snaps(i, c));
    trace[c] = acc * model.xgrid.step();
  }
  return SimRecord{model, cfg.snapshot_every, std::move(times), std::move(snaps), std::move(trace)};
}

int cmd_titchmarsh_verify(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExperimentConfig cfg = resolve_config(opts);
    PiecewiseOptions po;
    po.x_cells = cfg.x_cells;
    po.w_cells = cfg.w_cells;
    const TitchmarshOptions to{cfg.rel_threshold, cfg.radius, cfg.tol_cells};
    if (to.radius < 1) throw ConfigError("radius must be >= 1");
    if (!(to.rel_threshold >= 0.0 && to.rel_threshold < 1.0)) throw ConfigError("rel_threshold must lie in [0, 1)");

    std::mt19937_64 rng(cfg.seed);
    double worst_a = 0.0, worst_b = 0.0;
    json failed = json::array();
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      const auto [f, g] = random_piecewise_pair(rng, po);
      const CheckReport r = titchmarsh_check(f, g, to);
      worst_a = std::max(worst_a, r.a.max_discrepancy_cells);
      worst_b = std::max(worst_b, r.b.max_discrepancy_cells);
      if (!r.pass) failed.push_back({{"trial", t}, {"report", to_json(r)}});
    }

    // Counterexample fields, evaluated with the unit window so that x = 0 is a closed point.
    const double rel = cfg.rel_threshold;
    const SpaceFreqField jump = jump_counterexample_field();
    const SupportBounds jb = support_bounds(jump, rel, 1);
    const std::size_t x0 = *counterexample_xgrid().lattice_index(0.0);
    const ExtReal jump_aU = upper_envelope(jb.lower, 1)[x0];
    const ExtReal jump_bL = lower_envelope(jb.upper, 1)[x0];
    bool jump_ok = jump_aU > jump_bL;
    for (std::size_t i = 0; i < jb.lower.size(); ++i) {
      const double x = counterexample_xgrid().coordinate(i);
      const double side = x < 0 ? -1.0 : 1.0;
      jump_ok = jump_ok && jb.lower[i] == ExtReal::finite(x <= 0 ? -1.0 : 1.0) && jb.upper[i] == ExtReal::finite(x == 0 ? 1.0 : side);
    }

    const SpaceFreqField column = column_counterexample_field();
    const SupportBounds cb = support_bounds(column, rel, 1);
    const BoundProfile bL = lower_envelope(cb.upper, 1);
    const BoundProfile aU = upper_envelope(cb.lower, 1);
    bool column_ok = true;
    for (std::size_t i = 0; i < cb.upper.size(); ++i) {
      column_ok = column_ok && cb.upper[i] == ExtReal::finite(i == x0 ? 1.0 : 0.0) &&
                  cb.lower[i] == ExtReal::finite(i == x0 ? -1.0 : 0.0) && bL[i] == ExtReal::finite(0.0) &&
                  aU[i] == ExtReal::finite(0.0);
    }
    const CheckReport column_check = titchmarsh_check(column, column, TitchmarshOptions{rel, 1, cfg.tol_cells});

    const bool pass = failed.empty() && jump_ok && column_ok;
    const json report = {
        {"seed", cfg.seed},
        {"trials", cfg.trials},
        {"failed_trials", failed},
        {"max_discrepancy_cells", {{"a", worst_a}, {"b", worst_b}}},
        {"counterexamples",
         {{"jump",
           {{"pass", jump_ok},
            {"a", profile_values(jb.lower)},
            {"b", profile_values(jb.upper)},
            {"aU_at_0", to_json(jump_aU)},
            {"bL_at_0", to_json(jump_bL)}}},
          {"column",
           {{"pass", column_ok},
            {"a", profile_values(cb.lower)},
            {"b", profile_values(cb.upper)},
            {"bL", profile_values(bL)},
            {"aU", profile_values(aU)},
            {"titchmarsh_check", to_json(column_check)}}}}},
        {"pass", pass}};
    if (opts.out) write_json_file(out_dir(opts) / "titchmarsh.json", report);
    if (opts.json) {
      out << report.dump(2) << '\n';
    } else {
      out << "trials " << cfg.trials << " seed " << cfg.seed << " failed " << failed.size() << '\n';
      out << "max discrepancy (cells): a " << worst_a << " b " << worst_b << '\n';
      out << "jump field: " << (jump_ok ? "reproduced" : "MISMATCH") << " (a^U(0) = " << jump_aU.to_string()
          << ", b^L(0) = " << jump_bL.to_string() << ")\n";
      out << "column field: " << (column_ok ? "reproduced" : "MISMATCH") << '\n';
      out << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kExitPass : kExitFailure;
  });
}

int cmd_simulate(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExperimentConfig cfg = resolve_config(opts);
    const SimRecord rec = make_record(cfg);
    const fs::path dir = out_dir(opts);
    save_field(dir / "record.tsf", rec.snapshots);
    json meta = record_metadata(rec);
    meta["seed"] = cfg.seed;
    meta["initial"] = {{"kind", cfg.initial_kind},
                       {"amplitude", cfg.initial_amplitude},
                       {"width", cfg.initial_width},
                       {"center", cfg.initial_center},
                       {"noise", cfg.initial_noise}};
    if (cfg.initial_omega) meta["initial"]["omega"] = *cfg.initial_omega;
    meta["field_file"] = "record.tsf";
    write_json_file(dir / "record.json", meta);
    if (opts.json) {
      out << meta.dump(2) << '\n';
    } else {
      out << "wrote " << (dir / "record.tsf").string() << " (" << rec.times.size() << " snapshots)\n";
      const double first = rec.invariant_trace.front();
      double drift = 0.0;
      for (double v : rec.invariant_trace) drift = std::max(drift, std::abs(v - first) / std::abs(first));
      out << (rec.model.kind == ModelKind::nls ? "mass" : "energy") << " relative drift " << drift << '\n';
    }
    return kExitPass;
  });
}

int cmd_analyze(const fs::path& record, const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!fs::is_regular_file(record)) throw ConfigError("record file '" + record.string() + "' does not exist");
    const ExperimentConfig cfg = resolve_config(opts);
    const AnalysisOptions ao = make_analysis_options(cfg);
    const SpaceTimeField snaps = load_field<Domain::time>(record);
    const SpaceFreqField spec = time_spectrum(snaps, ao.window);
    SpectrumReport rep = single_frequency_test(spec, ao.delta, ao.band_halfwidth);
    rep.modulus_drift = modulus_drift(snaps);
    const CompactnessReport comp = support_compactness(spec, cfg.rel_threshold);
    const json report = {{"record", record.string()},
                         {"window", to_string(ao.window)},
                         {"report", to_json(rep)},
                         {"compactness",
                          {{"rel_threshold", cfg.rel_threshold},
                           {"width_bins", comp.width_bins},
                           {"a", to_json(comp.lower)},
                           {"b", to_json(comp.upper)}}}};
    if (opts.out) {
      const fs::path dir = out_dir(opts);
      write_json_file(dir / "report.json", report);
      std::ofstream csv(dir / "spectrum.csv");
      write_field_csv(csv, spec);
    }
    if (opts.json) {
      out << report.dump(2) << '\n';
    } else {
      out << "verdict " << to_string(rep.verdict) << '\n';
      out << "concentration " << rep.concentration << " (band " << 2 * rep.band_halfwidth_bins + 1 << " bins at omega "
          << rep.band_center_omega << ")\n";
      out << "peak dispersion " << rep.peak_dispersion << " bins, modulus drift " << *rep.modulus_drift << '\n';
      out << "support width " << comp.width_bins << " bins at threshold " << cfg.rel_threshold << '\n';
    }
    return kExitPass;
  });
}

int cmd_check_nonlinearity(const NonlinearityArgs& args, const CommandOptions& opts, std::ostream& out,
                           std::ostream& err) {
  return guarded(err, [&] {
    ExperimentConfig cfg = resolve_config(opts);
    if (args.variant) {
      if (*args.variant != "polynomial" && *args.variant != "root" && *args.variant != "rational") {
        throw ConfigError("variant must be polynomial, root or rational");
      }
      cfg.alpha_variant = *args.variant;
    }
    if (args.coeffs) cfg.alpha_coeffs = *args.coeffs;
    if (args.root) cfg.alpha_root = *args.root;
    if (args.denominator) cfg.alpha_denominator = *args.denominator;
    if (args.n) cfg.n = *args.n;
    if (cfg.n < 1) throw ConfigError("n must be >= 1");
    const Nonlinearity nl = make_nonlinearity(cfg);
    const Verdict v = admissible(nl, cfg.n);
    const json report = verdict_json(nl, cfg.n, v);
    if (opts.out) write_json_file(out_dir(opts) / "verdict.json", report);
    if (opts.json) {
      out << report.dump(2) << '\n';
    } else {
      out << nl.variant_name() << " n=" << cfg.n << " kappa=" << kappa_string(v.kappa) << ": "
          << (v.admissible ? "admissible" : "not admissible") << '\n';
      for (const std::string& f : v.failed) out << "  failed: " << f << '\n';
    }
    return v.admissible ? kExitPass : kExitFailure;
  });
}

int cmd_demo_breather(const CommandOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ExperimentConfig cfg = resolve_config(opts);
    const double omega = cfg.initial_omega.value_or(0.8);
    // Eight whole periods, so every harmonic lands on a lattice bin.
    constexpr std::size_t kPeriods = 8;
    constexpr std::size_t kSamples = 256;
    const double period = 2.0 * std::numbers::pi / std::abs(omega);
    const AxisGrid tg(0.0, period * kPeriods / kSamples, kSamples);
    if (cfg.nx < 8 || !(cfg.L > 0.0)) throw ConfigError("need nx >= 8 and L > 0");
    const AxisGrid xg(-0.5 * cfg.L, cfg.L / static_cast<double>(cfg.nx), cfg.nx);
    const SpaceTimeField rec = breather_field(omega, xg, tg);
    const SpaceFreqField spec = time_spectrum(rec, Window::none);

    double peak = 0.0;
    for (const cplx& z : spec.values()) peak = std::max(peak, std::abs(z));
    const std::vector<double> mags = harmonic_magnitudes(spec, std::abs(omega), 15);
    json odd = json::array();
    std::size_t ladder = 0;
    bool decreasing = true;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t h = 1; h <= mags.size(); h += 2) {
      const double mag = mags[h - 1];
      odd.push_back({{"harmonic", h}, {"omega", static_cast<double>(h) * std::abs(omega)}, {"magnitude", mag}});
      if (mag > 1e-4 * peak) {
        ++ladder;
        decreasing = decreasing && mag < prev;
        prev = mag;
      }
    }
    double even_max = 0.0;
    for (std::size_t h = 2; h <= mags.size(); h += 2) even_max = std::max(even_max, mags[h - 1]);
    const SpectrumReport rep = single_frequency_test(spec, cfg.delta, cfg.band_halfwidth);
    const bool pass = ladder >= 3 && decreasing;
    const json report = {{"omega", omega},
                         {"periods", kPeriods},
                         {"samples", kSamples},
                         {"peak_magnitude", peak},
                         {"odd_harmonics", odd},
                         {"harmonics_above_1e-4", ladder},
                         {"strictly_decreasing", decreasing},
                         {"max_even_harmonic", even_max},
                         {"spectrum", to_json(rep)},
                         {"pass", pass}};
    if (opts.out) {
      const fs::path dir = out_dir(opts);
      save_field(dir / "breather.tsf", rec);
      write_json_file(dir / "breather.json", report);
      std::ofstream csv(dir / "breather_spectrum.csv");
      write_field_csv(csv, spec);
    }
    if (opts.json) {
      out << report.dump(2) << '\n';
    } else {
      out << "breather omega " << omega << ": " << ladder << " odd harmonics above 1e-4 of peak, "
          << (decreasing ? "strictly decreasing" : "NOT decreasing") << '\n';
      for (const auto& h : odd) out << "  " << h["harmonic"] << " w=" << h["omega"] << " |u~|=" << h["magnitude"] << '\n';
      out << "verdict " << to_string(rep.verdict) << " (concentration " << rep.concentration << ")\n";
      out << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kExitPass : kExitFailure;
  });
}

}  // namespace tslab
