#include "jcas/experiments/sweep.hpp"

#include "jcas/analytic/access.hpp"
#include "jcas/analytic/radar.hpp"
#include "jcas/analytic/success.hpp"
#include "jcas/sim/dump.hpp"
#include "jcas/sim/h1_table.hpp"
#include "jcas/sim/metrics.hpp"
#include "jcas/sim/radar_interference.hpp"
#include "jcas/sim/random.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <thread>

namespace jcas::experiments
{

std::vector<SweepPoint> sweep_points(const SweepConfig& cfg)
{
  std::vector<SweepPoint> pts;
  for (double tau : cfg.tau_list)
    for (double eps : cfg.epsilon_list)
      for (double eta : cfg.eta_list)
        for (double lambda : cfg.density_grid)
        {
          SweepPoint pt;
          pt.index = pts.size();
          pt.params = cfg.base;
          pt.params.tau = tau;
          pt.params.M_r = radar_slots(cfg.base.M, eps);
          pt.params.eta = eta;
          pt.params.lambda = lambda;
          pts.push_back(pt);
        }
  return pts;
}

std::uint64_t point_seed(std::uint64_t master, std::size_t point, std::size_t window)
{
  return sim::mix(master, static_cast<std::uint64_t>(point), static_cast<std::uint64_t>(window));
}

namespace
{

std::string window_label(const Window& w)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%gx%g", w.width, w.height);
  return buf;
}

void append_error(std::string& err, const std::string& what, const std::exception& e)
{
  if (!err.empty())
    err += "; ";
  err += what + ": " + e.what();
}

struct AnalyticPart
{
  std::optional<double> q_w, P_s, tput, d_rm;
  std::string error;
};

AnalyticPart run_analytic(const SweepConfig& cfg, const SweepPoint& pt)
{
  AnalyticPart a;
  const auto& p = pt.params;
  try
  {
    a.q_w = analytic::medium_access_probability(p);
  }
  catch (const std::exception& e)
  {
    append_error(a.error, "analytic q_w", e);
    return a;
  }
  try
  {
    a.d_rm = analytic::radar_max_range(p, *a.q_w);
  }
  catch (const std::exception& e)
  {
    append_error(a.error, "analytic d_rm", e);
  }
  try
  {
    auto strategy = analytic::H1Strategy::independent();
    if (cfg.h1_strategy == H1Choice::mc_table)
    {
      sim::SimOptions opts;
      opts.mode = sim::EstimationMode::typical_link;
      strategy = analytic::H1Strategy::from_table(
          sim::estimate_h1_table(p, cfg.n_reps, point_seed(cfg.seed, pt.index, cfg.windows.size()), opts));
    }
    a.P_s = analytic::success_probability(p, *a.q_w, strategy);
    a.tput = analytic::throughput_density(p, *a.q_w, *a.P_s);
  }
  catch (const std::exception& e)
  {
    append_error(a.error, "analytic P_s", e);
  }
  return a;
}

SweepRow run_window(const SweepConfig& cfg, const SweepPoint& pt, std::size_t w, const SweepExtras& extras)
{
  SweepRow row;
  SystemParams p = pt.params;
  p.window = cfg.windows[w];
  row.window = window_label(p.window);
  row.seed = point_seed(cfg.seed, pt.index, w);
  row.n_reps = cfg.n_reps;

  sim::SimOptions opts;
  opts.guard_margin = cfg.guard_margin;
  opts.radar_interference = cfg.interference;
  opts.range_ceiling = cfg.range_ceiling;
  opts.victims_per_rep = cfg.victims_per_rep;

  try
  {
    const auto m = sim::estimate_metrics(p, cfg.n_reps, row.seed, opts);
    row.q_w_sim = m.q_w.mean;
    row.q_w_sim_stderr = m.q_w.std_error;
    row.P_s_sim = m.P_s.mean;
    row.P_s_sim_stderr = m.P_s.std_error;
    row.tput_sim = m.throughput.mean;
    row.tput_sim_stderr = m.throughput.std_error;
  }
  catch (const std::exception& e)
  {
    append_error(row.error, "sim metrics", e);
  }
  try
  {
    const auto r = sim::empirical_radar_range(p, cfg.n_reps, row.seed, opts);
    row.d_rm_sim = r.mean;
    row.d_rm_sim_stderr = r.std_error;
  }
  catch (const std::exception& e)
  {
    append_error(row.error, "sim d_rm", e);
  }
  if (extras.dump_dir)
  {
    try
    {
      const auto s = sim::sample_snapshot(p, sim::replication_seed(row.seed, 0));
      char name[64];
      std::snprintf(name, sizeof name, "point%zu_w%zu.csv", pt.index, w);
      sim::write_snapshot_csv(*extras.dump_dir / name, s, sim::evaluate_network(s, p, opts));
    }
    catch (const std::exception& e)
    {
      append_error(row.error, "dump", e);
    }
  }
  return row;
}

void average_into(SweepRow& avg, const std::vector<SweepRow>& rows)
{
  auto combine = [&](auto mean_of, auto se_of, std::optional<double>& mean, std::optional<double>& se) {
    double sum = 0.0, var = 0.0;
    for (const auto& r : rows)
    {
      const auto& m = mean_of(r);
      if (!m)
        return;
      sum += *m;
      const auto& s = se_of(r);
      var += s ? *s * *s : 0.0;
    }
    const double k = static_cast<double>(rows.size());
    mean = sum / k;
    se = std::sqrt(var) / k;
  };
  combine([](const SweepRow& r) -> const auto& { return r.q_w_sim; },
          [](const SweepRow& r) -> const auto& { return r.q_w_sim_stderr; }, avg.q_w_sim, avg.q_w_sim_stderr);
  combine([](const SweepRow& r) -> const auto& { return r.P_s_sim; },
          [](const SweepRow& r) -> const auto& { return r.P_s_sim_stderr; }, avg.P_s_sim, avg.P_s_sim_stderr);
  combine([](const SweepRow& r) -> const auto& { return r.tput_sim; },
          [](const SweepRow& r) -> const auto& { return r.tput_sim_stderr; }, avg.tput_sim, avg.tput_sim_stderr);
  combine([](const SweepRow& r) -> const auto& { return r.d_rm_sim; },
          [](const SweepRow& r) -> const auto& { return r.d_rm_sim_stderr; }, avg.d_rm_sim, avg.d_rm_sim_stderr);
}

std::vector<SweepRow> run_point(const SweepConfig& cfg, const SweepPoint& pt, const SweepExtras& extras)
{
  const auto start = std::chrono::steady_clock::now();
  AnalyticPart a;
  if (cfg.engines != Engines::sim)
    a = run_analytic(cfg, pt);

  std::vector<SweepRow> rows;
  for (std::size_t w = 0; w < cfg.windows.size(); ++w)
  {
    SweepRow row;
    if (cfg.engines != Engines::analytic)
      row = run_window(cfg, pt, w, extras);
    else
    {
      row.window = window_label(cfg.windows[w]);
      row.seed = point_seed(cfg.seed, pt.index, w);
      row.n_reps = cfg.n_reps;
    }
    rows.push_back(std::move(row));
  }

  SweepRow avg;
  avg.window = "avg";
  avg.seed = cfg.seed;
  avg.n_reps = cfg.n_reps;
  if (cfg.engines != Engines::analytic)
    average_into(avg, rows);
  rows.push_back(std::move(avg));

  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  for (auto& r : rows)
  {
    r.lambda = pt.params.lambda;
    r.tau = pt.params.tau;
    r.epsilon = pt.params.epsilon();
    r.eta = pt.params.eta;
    r.q_w_analytic = a.q_w;
    r.P_s_analytic = a.P_s;
    r.tput_analytic = a.tput;
    r.d_rm_analytic = a.d_rm;
    if (!a.error.empty())
      r.error = r.error.empty() ? a.error : a.error + "; " + r.error;
    r.wall_ms = ms;
  }
  return rows;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const SweepExtras& extras)
{
  cfg.validate();
  const auto points = sweep_points(cfg);
  std::vector<std::vector<SweepRow>> results(points.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++)
      results[i] = run_point(cfg, points[i], extras);
  };
  const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.workers), points.size());
  if (n_threads <= 1)
    worker();
  else
  {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }

  std::vector<SweepRow> rows;
  for (auto& r : results)
    rows.insert(rows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  return rows;
}

} // namespace jcas::experiments
