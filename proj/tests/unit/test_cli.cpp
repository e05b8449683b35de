#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <json.hpp>
#include <sstream>
#include <string>

#include "tslab/commands.hpp"
#include "tslab/errors.hpp"
#include "tslab/field_io.hpp"

#ifndef TSLAB_CLI_PATH
#error "TSLAB_CLI_PATH must name the tslab binary"
#endif

using namespace tslab;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("tslab-cli-" + tag + "-" + std::to_string(std::rand()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
};

fs::path write_text(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string(TSLAB_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

CommandOptions with_config(const fs::path& cfg, const fs::path& out) {
  CommandOptions o;
  o.config = cfg;
  o.out = out;
  return o;
}

}  // namespace

TEST_CASE("config parsing") {
  const ExperimentConfig d = parse_config("");
  CHECK(d.kind == "nls");
  CHECK(d.seed == 1);
  const ExperimentConfig c = parse_config("# comment\nkind = nlkg\nm=2\nL = 20pi\nalpha.coeffs = 0, 0, -1\n\nseed = 9\n");
  CHECK(c.kind == "nlkg");
  CHECK(c.m == 2.0);
  CHECK(c.L == doctest::Approx(20.0 * 3.141592653589793));
  CHECK(c.alpha_coeffs == std::vector<double>{0.0, 0.0, -1.0});
  CHECK(c.seed == 9);
  CHECK_THROWS_AS(parse_config("colour = red\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("kind nls\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("nx = 12.5\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("seed = 1\nseed = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("window = kaiser\n"), InvalidInput);
  CHECK_THROWS_AS(load_config("/nonexistent/tslab.cfg"), ConfigError);
  for (const char* key : {"kind", "m", "alpha.variant", "alpha.coeffs", "L", "nx", "dt", "t_end", "snapshot_every",
                          "seed", "initial.kind", "delta", "band_halfwidth", "window", "rel_threshold", "trials"}) {
    CHECK(std::find(config_keys().begin(), config_keys().end(), key) != config_keys().end());
  }
}

TEST_CASE("titchmarsh-verify exit codes") {
  TempDir tmp("tv");
  std::ostringstream out, err;
  CHECK(cmd_titchmarsh_verify(with_config(write_text(tmp.path / "zero.cfg", "trials = 0\n"), tmp.path), out, err) ==
        kExitPass);
  CHECK(cmd_titchmarsh_verify(with_config(write_text(tmp.path / "fifty.cfg", "trials = 50\nseed = 1\n"), tmp.path),
                              out, err) == kExitPass);
  const json report = json::parse(slurp(tmp.path / "titchmarsh.json"));
  CHECK(report["pass"] == true);
  CHECK(cmd_titchmarsh_verify(with_config(write_text(tmp.path / "bad.cfg", "trials = many\n"), tmp.path), out, err) ==
        kExitUsage);
  CHECK(cmd_titchmarsh_verify(with_config(tmp.path / "missing.cfg", tmp.path), out, err) == kExitUsage);
}

TEST_CASE("simulate and analyze a soliton") {
  TempDir tmp("sol");
  const fs::path cfg = write_text(tmp.path / "sol.cfg", "initial.kind = profile\nt_end = 10\nsnapshot_every = 100\n");
  std::ostringstream out, err;
  REQUIRE(cmd_simulate(with_config(cfg, tmp.path), out, err) == kExitPass);
  const SpaceTimeField rec = load_field<Domain::time>(tmp.path / "record.tsf");
  CHECK(rec.cols() == 101);
  CHECK(rec.rows() == 256);
  const json meta = json::parse(slurp(tmp.path / "record.json"));
  CHECK(meta["invariant_trace"].size() == 101);

  std::ostringstream aout;
  CommandOptions ao = with_config(cfg, tmp.path / "analysis");
  ao.json = true;
  REQUIRE(cmd_analyze(tmp.path / "record.tsf", ao, aout, err) == kExitPass);
  const json rep = json::parse(aout.str());
  CHECK(rep["report"]["verdict"] == "SingleFrequency");
  CHECK(fs::exists(tmp.path / "analysis" / "report.json"));
  CHECK(fs::exists(tmp.path / "analysis" / "spectrum.csv"));
  CHECK(cmd_analyze(tmp.path / "nope.tsf", ao, aout, err) == kExitUsage);
}

TEST_CASE("gaussian run with noise is reproducible for a fixed seed") {
  TempDir tmp("gauss");
  const fs::path cfg = write_text(tmp.path / "g.cfg",
                                  "initial.kind = gaussian\ninitial.amplitude = 0.5\ninitial.noise = 0.01\n"
                                  "t_end = 2\nsnapshot_every = 50\nseed = 42\n");
  std::ostringstream out, err;
  REQUIRE(cmd_simulate(with_config(cfg, tmp.path / "a"), out, err) == kExitPass);
  REQUIRE(cmd_simulate(with_config(cfg, tmp.path / "b"), out, err) == kExitPass);
  CommandOptions other = with_config(cfg, tmp.path / "c");
  other.seed = 43;
  REQUIRE(cmd_simulate(other, out, err) == kExitPass);
  const std::string a = slurp(tmp.path / "a" / "record.tsf");
  CHECK(!a.empty());
  CHECK(a == slurp(tmp.path / "b" / "record.tsf"));
  CHECK(a != slurp(tmp.path / "c" / "record.tsf"));
  CHECK(slurp(tmp.path / "a" / "record.json") == slurp(tmp.path / "b" / "record.json"));
}

TEST_CASE("breather preset is sampled analytically and analyzes broad") {
  TempDir tmp("br");
  const fs::path cfg = write_text(tmp.path / "b.cfg", "initial.kind = breather\nL = 30\nnx = 64\nt_end = 62.83185307179586\n"
                                                       "dt = 0.01\nsnapshot_every = 20\nwindow = none\n");
  std::ostringstream out, err;
  REQUIRE(cmd_simulate(with_config(cfg, tmp.path), out, err) == kExitPass);
  const SpaceTimeField rec = load_field<Domain::time>(tmp.path / "record.tsf");
  CHECK(rec.cols() == 315);
  for (cplx z : rec.values()) CHECK(z.imag() == 0.0);
  std::ostringstream aout;
  CommandOptions ao = with_config(cfg, tmp.path / "analysis");
  ao.json = true;
  REQUIRE(cmd_analyze(tmp.path / "record.tsf", ao, aout, err) == kExitPass);
  CHECK(json::parse(aout.str())["report"]["verdict"] == "Broad");
}

TEST_CASE("check-nonlinearity verdicts and exit codes") {
  std::ostringstream out, err;
  CommandOptions opts;
  opts.json = true;
  NonlinearityArgs cubic{"polynomial", std::vector<double>{0.0, -2.0}, std::nullopt, std::nullopt, 3};
  CHECK(cmd_check_nonlinearity(cubic, opts, out, err) == kExitPass);
  const json v = json::parse(out.str());
  CHECK(v["admissible"] == true);
  CHECK(v["kappa"] == "1/1");
  CHECK(v["variant"] == "polynomial");

  NonlinearityArgs cubic5 = cubic;
  cubic5.n = 5;
  CHECK(cmd_check_nonlinearity(cubic5, {}, out, err) == kExitFailure);
  NonlinearityArgs root{"root", std::vector<double>{0.0, 1.0}, 2u, std::nullopt, 3};
  CHECK(cmd_check_nonlinearity(root, {}, out, err) == kExitPass);
  NonlinearityArgs rational{"rational", std::vector<double>{0.0, 0.0, 1.0}, std::nullopt, std::vector<double>{1.0, 1.0}, 3};
  CHECK(cmd_check_nonlinearity(rational, {}, out, err) == kExitPass);
  NonlinearityArgs bad{"polynomial", std::vector<double>{1.0, 1.0}, std::nullopt, std::nullopt, 3};
  CHECK(cmd_check_nonlinearity(bad, {}, out, err) == kExitUsage);
  NonlinearityArgs unknown{"spline", std::vector<double>{0.0, 1.0}, std::nullopt, std::nullopt, 3};
  CHECK(cmd_check_nonlinearity(unknown, {}, out, err) == kExitUsage);
}

TEST_CASE("binary: usage errors, demo and round trip") {
  TempDir tmp("bin");
  const fs::path log = tmp.path / "log.txt";
  CHECK(run_cli("", log) == kExitUsage);
  CHECK(run_cli("frobnicate", log) == kExitUsage);
  CHECK(run_cli("analyze", log) == kExitUsage);
  CHECK(run_cli("titchmarsh-verify --seed notanumber", log) == kExitUsage);
  CHECK(run_cli("titchmarsh-verify --config " + (tmp.path / "missing.cfg").string(), log) == kExitUsage);
  CHECK(run_cli("analyze " + (tmp.path / "none.tsf").string(), log) == kExitUsage);
  CHECK(run_cli("--help", log) == 0);

  CHECK(run_cli("demo-breather --out " + tmp.path.string(), log) == kExitPass);
  CHECK(slurp(log).find("PASS") != std::string::npos);
  CHECK(fs::exists(tmp.path / "breather.json"));

  CHECK(run_cli("check-nonlinearity --variant polynomial --coeffs 0,0,-1 --n 3 --json", log) == kExitPass);
  CHECK(json::parse(slurp(log))["kappa"] == "2/1");
  CHECK(run_cli("check-nonlinearity --variant polynomial --coeffs 0,0,0,-1 --n 3", log) == kExitFailure);

  write_text(tmp.path / "t.cfg", "trials = 5\nseed = 3\n");
  CHECK(run_cli("titchmarsh-verify --json --config " + (tmp.path / "t.cfg").string(), log) == kExitPass);
  CHECK(json::parse(slurp(log))["pass"] == true);
}
