#include "jcas/experiments/config.hpp"
#include "jcas/experiments/csv.hpp"
#include "jcas/experiments/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jcas;
using namespace jcas::experiments;

namespace
{

SweepConfig small()
{
  SweepConfig c;
  c.density_grid = {2e-3};
  c.tau_list = {0.25};
  c.windows = {{100.0, 100.0}, {120.0, 120.0}};
  c.n_reps = 8;
  c.victims_per_rep = 5;
  c.seed = 5;
  return c;
}

std::string to_csv(const std::vector<SweepRow>& rows)
{
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

std::string slurp(const std::filesystem::path& p)
{
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::string> split_line(const std::string& line)
{
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i)
  {
    const char c = line[i];
    if (quoted)
    {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"')
        out.back() += line[++i];
      else if (c == '"')
        quoted = false;
      else
        out.back() += c;
    }
    else if (c == '"')
      quoted = true;
    else if (c == ',')
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

} // namespace

TEST_CASE("point ordering")
{
  SweepConfig c;
  c.density_grid = {1e-3, 1e-2};
  c.tau_list = {0.25, 0.5};
  c.epsilon_list = {0.25, 0.5};
  c.eta_list = {1.0};
  const auto pts = sweep_points(c);
  REQUIRE(pts.size() == 8);
  CHECK(pts[0].params.lambda == 1e-3);
  CHECK(pts[1].params.lambda == 1e-2);
  CHECK(pts[2].params.M_r == 50);
  CHECK(pts[4].params.tau == 0.5);
  for (std::size_t i = 0; i < pts.size(); ++i)
    CHECK(pts[i].index == i);
  CHECK(point_seed(1, 0, 0) != point_seed(1, 0, 1));
  CHECK(point_seed(1, 0, 0) != point_seed(1, 1, 0));
  CHECK(point_seed(1, 3, 1) == point_seed(1, 3, 1));
}

TEST_CASE("rows per point")
{
  const auto rows = run_sweep(small());
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].window == "100x100");
  CHECK(rows[1].window == "120x120");
  CHECK(rows[2].window == "avg");
  for (const auto& r : rows)
  {
    CHECK(r.error.empty());
    REQUIRE(r.q_w_analytic);
    REQUIRE(r.q_w_sim);
    CHECK(*r.q_w_sim >= 0.0);
    CHECK(*r.q_w_sim <= 1.0);
    CHECK(r.q_w_analytic == rows[0].q_w_analytic);
    CHECK(r.epsilon == 0.25);
  }
  CHECK(*rows[2].q_w_sim == doctest::Approx((*rows[0].q_w_sim + *rows[1].q_w_sim) / 2));
  CHECK(*rows[2].q_w_sim_stderr ==
        doctest::Approx(std::hypot(*rows[0].q_w_sim_stderr, *rows[1].q_w_sim_stderr) / 2));

  auto a = small();
  a.engines = Engines::analytic;
  const auto an = run_sweep(a);
  CHECK(!an[0].q_w_sim);
  CHECK(an[0].q_w_analytic == rows[0].q_w_analytic);
  a.engines = Engines::sim;
  const auto sm = run_sweep(a);
  CHECK(!sm[0].q_w_analytic);
  CHECK(sm[0].q_w_sim == rows[0].q_w_sim);
}

TEST_CASE("failures are recorded per point")
{
  auto c = small();
  c.base.P_fa = 0.995; // above every collision factor
  c.engines = Engines::analytic;
  const auto rows = run_sweep(c);
  REQUIRE(!rows.empty());
  CHECK(rows[0].error.find("d_rm") != std::string::npos);
  CHECK(!rows[0].d_rm_analytic);
  CHECK(rows[0].q_w_analytic);
}

TEST_CASE("worker count does not change output")
{
  auto c = small();
  c.density_grid = {1e-3, 3e-3, 1e-2};
  const auto one = to_csv(run_sweep(c));
  c.workers = 3;
  CHECK(to_csv(run_sweep(c)) == one);
  CHECK(to_csv(run_sweep(c)) == one);
}

TEST_CASE("csv layout")
{
  auto rows = run_sweep(small());
  rows.resize(1);
  rows[0].error = "a \"quoted\", error";
  const auto text = to_csv(rows);
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size())
  {
    const auto end = text.find("\r\n", pos);
    REQUIRE(end != std::string::npos);
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 2;
  }
  REQUIRE(lines.size() == 2);
  CHECK(split_line(lines[0]) == csv_columns());
  const auto f = split_line(lines[1]);
  REQUIRE(f.size() == csv_columns().size());
  // 12 significant digits round to within half a unit in the last place.
  auto close = [](const std::string& s, double x) { return std::abs(std::stod(s) - x) <= 5e-12 * std::abs(x); };
  CHECK(close(f[0], rows[0].lambda));
  CHECK(close(f[5], *rows[0].q_w_analytic));
  CHECK(close(f[6], *rows[0].q_w_sim));
  CHECK(close(f[12], *rows[0].tput_sim));
  CHECK(close(f[15], *rows[0].d_rm_sim));
  CHECK(f[19] == rows[0].error);

  rows[0].q_w_sim.reset();
  CHECK(split_line(to_csv(rows).substr(text.find("\r\n") + 2))[6].empty());
  CHECK_THROWS(emit_csv({}, std::filesystem::temp_directory_path() / "jcas_empty.csv"));
}

TEST_CASE("standard errors shrink with replications")
{
  auto c = small();
  c.windows = {{150.0, 150.0}};
  c.density_grid = {5e-3};
  c.n_reps = 250;
  const auto a = run_sweep(c);
  c.n_reps = 1000;
  const auto b = run_sweep(c);
  const double ratio = *a[0].q_w_sim_stderr / *b[0].q_w_sim_stderr;
  CHECK(ratio > 1.5);
  CHECK(ratio < 2.7);
}

TEST_CASE("snapshot dumps")
{
  const auto dir = std::filesystem::temp_directory_path() / "jcas_dump_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  SweepExtras extras;
  extras.dump_dir = dir;
  run_sweep(small(), extras);
  CHECK(std::filesystem::exists(dir / "point0_w0.csv"));
  CHECK(std::filesystem::exists(dir / "point0_w1.csv"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("golden output")
{
  const std::filesystem::path data = JCAS_TEST_DATA;
  const auto cfg = load_config((data / "golden_sweep.conf").string());
  CHECK(to_csv(run_sweep(cfg)) == slurp(data / "golden_sweep.csv"));
}
