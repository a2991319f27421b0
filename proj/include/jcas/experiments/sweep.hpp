#pragma once

#include "jcas/experiments/config.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace jcas::experiments
{

struct SweepRow
{
  double lambda = 0.0;
  double tau = 0.0;
  double epsilon = 0.0;
  double eta = 0.0;
  std::string window; // "150x150", or "avg" for the mean over windows

  std::optional<double> q_w_analytic, P_s_analytic, tput_analytic, d_rm_analytic;
  std::optional<double> q_w_sim, q_w_sim_stderr;
  std::optional<double> P_s_sim, P_s_sim_stderr;
  std::optional<double> tput_sim, tput_sim_stderr;
  std::optional<double> d_rm_sim, d_rm_sim_stderr;

  int n_reps = 0;
  std::uint64_t seed = 0;
  std::string error;
  double wall_ms = 0.0;
};

/// Parameters of sweep point index in tau, epsilon, eta, lambda order.
struct SweepPoint
{
  std::size_t index = 0;
  SystemParams params{};
};

std::vector<SweepPoint> sweep_points(const SweepConfig& cfg);

/// Seed of one (point, window) cell.
std::uint64_t point_seed(std::uint64_t master, std::size_t point, std::size_t window);

struct SweepExtras
{
  /// When set, the first replication of every cell is written there as CSV.
  std::optional<std::filesystem::path> dump_dir;
};

/// One row per (point, window) plus an "avg" row per point, ordered by point.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const SweepExtras& extras = {});

} // namespace jcas::experiments
