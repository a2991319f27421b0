// jcas: parameter sweeps and analytic reports for CSMA joint communication and
// sensing networks.

#include "jcas/analytic/radar.hpp"
#include "jcas/analytic/report.hpp"
#include "jcas/errors.hpp"
#include "jcas/experiments/config.hpp"
#include "jcas/experiments/csv.hpp"
#include "jcas/experiments/presets.hpp"
#include "jcas/experiments/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace jcas;
using namespace jcas::experiments;

namespace
{

std::string read_file(const std::string& path)
{
  std::ifstream f(path);
  if (!f)
    throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Engines parse_engines(const std::string& s)
{
  if (s == "analytic")
    return Engines::analytic;
  if (s == "sim" || s == "simulation")
    return Engines::sim;
  if (s == "both")
    return Engines::both;
  throw CLI::ValidationError("--engines", "expected analytic, sim or both");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"JCAS network evaluator"};
  app.require_subcommand(1);

  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV");
  std::string config_path, preset, engines, out_path, dump_dir;
  std::uint64_t seed = 0;
  int reps = 0, workers = 0;
  sweep->add_option("--config", config_path, "key = value configuration file")->check(CLI::ExistingFile);
  sweep->add_option("--preset", preset, "figure preset")->check(CLI::IsMember({"fig3", "fig4", "fig5", "fig6"}));
  sweep->add_option("--engines", engines, "analytic, sim or both")->check(CLI::IsMember({"analytic", "sim", "simulation", "both"}));
  sweep->add_option("--seed", seed, "master seed");
  sweep->add_option("--reps", reps, "replications per point")->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "output CSV (default: stdout)");
  sweep->add_option("--workers", workers, "parallel points")->check(CLI::PositiveNumber);
  sweep->add_option("--dump-snapshots", dump_dir, "directory for per-cell snapshot CSVs");

  auto* report = app.add_subcommand("report", "print the analytic metrics of one parameter point");
  std::string report_config;
  double lambda = -1.0, tau = -1.0, eta = -1.0, epsilon = -1.0;
  report->add_option("--config", report_config, "configuration file for the base parameters")
      ->check(CLI::ExistingFile);
  report->add_option("--lambda", lambda, "node intensity, 1/m^2");
  report->add_option("--tau", tau, "radar fraction");
  report->add_option("--eta", eta, "radar duty cycle");
  report->add_option("--epsilon", epsilon, "radar slot fraction");

  CLI11_PARSE(app, argc, argv);

  try
  {
    if (*sweep)
    {
      SweepConfig cfg = preset.empty() ? SweepConfig{} : figure_preset(preset);
      if (!config_path.empty())
        apply_config(cfg, read_file(config_path));
      if (!engines.empty())
        cfg.engines = parse_engines(engines);
      if (sweep->count("--seed"))
        cfg.seed = seed;
      if (reps > 0)
        cfg.n_reps = reps;
      if (workers > 0)
        cfg.workers = workers;
      cfg.validate();

      SweepExtras extras;
      if (!dump_dir.empty())
      {
        std::filesystem::create_directories(dump_dir);
        extras.dump_dir = dump_dir;
      }
      const auto rows = run_sweep(cfg, extras);
      if (out_path.empty())
        write_csv(std::cout, rows);
      else
        emit_csv(rows, out_path);
      return 0;
    }

    SweepConfig cfg = report_config.empty() ? SweepConfig{} : parse_config(read_file(report_config));
    SystemParams p = cfg.base;
    if (lambda >= 0.0)
      p.lambda = lambda;
    if (tau >= 0.0)
      p.tau = tau;
    if (eta >= 0.0)
      p.eta = eta;
    if (epsilon >= 0.0)
      p.M_r = radar_slots(p.M, epsilon);
    p.validate();

    const auto r = analytic::analytic_report(p);
    std::printf("q_w        %.9g\n", r.q_w);
    std::printf("C          %.9g\n", r.C);
    std::printf("d_rm       %.9g m\n", r.d_rm);
    std::printf("P_s        %.9g\n", r.P_s);
    std::printf("throughput %.9g /m^2\n", r.throughput);
    return 0;
  }
  catch (const std::exception& e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
