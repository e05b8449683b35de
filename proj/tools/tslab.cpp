// tslab: command-line driver for the support-calculus and solver experiments.
#include <CLI11.hpp>

#include <iostream>

#include "tslab/commands.hpp"

namespace {

void add_common(CLI::App* sub, tslab::CommandOptions& opts) {
  sub->add_option("--config", opts.config, "key = value configuration file");
  sub->add_option("--seed", opts.seed, "override the configured seed");
  sub->add_option("--out", opts.out, "output directory");
  sub->add_flag("--json", opts.json, "print the JSON report on stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tslab: partial-convolution support calculus and NLS/NLKG time-spectrum laboratory"};
  app.require_subcommand(1);

  tslab::CommandOptions opts;
  tslab::NonlinearityArgs nl;
  std::string record;

  auto* tv = app.add_subcommand("titchmarsh-verify", "randomized partial Titchmarsh checks and counterexample fields");
  add_common(tv, opts);
  auto* sim = app.add_subcommand("simulate", "run the configured NLS/NLKG experiment and write the record");
  add_common(sim, opts);
  auto* an = app.add_subcommand("analyze", "time-spectrum report of a record file");
  add_common(an, opts);
  an->add_option("record", record, "record file written by simulate")->required();
  auto* cn = app.add_subcommand("check-nonlinearity", "growth and algebraic admissibility verdict");
  add_common(cn, opts);
  cn->add_option("--variant", nl.variant, "polynomial, root or rational");
  cn->add_option("--coeffs", nl.coeffs, "coefficients of alpha (or A), constant term first")->delimiter(',');
  cn->add_option("--root", nl.root, "N for the root variant");
  cn->add_option("--denominator", nl.denominator, "coefficients of B for the rational variant")->delimiter(',');
  cn->add_option("--n", nl.n, "spatial dimension");
  auto* db = app.add_subcommand("demo-breather", "sine-Gordon breather record and its odd-harmonic ladder");
  add_common(db, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : tslab::kExitUsage;
  }

  if (*tv) return tslab::cmd_titchmarsh_verify(opts, std::cout, std::cerr);
  if (*sim) return tslab::cmd_simulate(opts, std::cout, std::cerr);
  if (*an) return tslab::cmd_analyze(record, opts, std::cout, std::cerr);
  if (*cn) return tslab::cmd_check_nonlinearity(nl, opts, std::cout, std::cerr);
  return tslab::cmd_demo_breather(opts, std::cout, std::cerr);
}
