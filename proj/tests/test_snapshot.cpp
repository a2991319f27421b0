#include "jcas/sim/snapshot.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>
#include <doctest.h>

#include <cmath>
#include <map>

using namespace jcas;
using namespace jcas::sim;

TEST_CASE("degenerate snapshots")
{
  SystemParams p;
  p.lambda = 0.0;
  CHECK(sample_snapshot(p, 1).nodes.empty());

  p = {};
  p.tau = 1.0;
  const auto s = sample_snapshot(p, 2);
  CHECK(s.n_comm == 0);
  CHECK(s.n_radar == s.nodes.size());
  CHECK(!s.nodes.empty());
}

TEST_CASE("node attributes")
{
  SystemParams p;
  p.lambda = 0.05;
  const auto s = sample_snapshot(p, 7);
  std::size_t radar = 0;
  for (const auto& n : s.nodes)
  {
    CHECK(p.window.width >= n.position.x);
    CHECK(n.position.x >= 0.0);
    CHECK(n.mark >= 0.0);
    CHECK(n.mark <= 1.0);
    CHECK(n.cycle_offset >= 0);
    CHECK(n.cycle_offset < p.M);
    CHECK(std::abs(distance(n.position, n.rx_position) - p.r_c) < 1e-9);
    radar += n.mode == Mode::radar;
  }
  CHECK(radar == s.n_radar);
  CHECK(s.n_radar + s.n_comm == s.nodes.size());
}

TEST_CASE("sampling is deterministic and shares draws across tau")
{
  SystemParams p;
  const auto a = sample_snapshot(p, 99);
  const auto b = sample_snapshot(p, 99);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
  {
    CHECK(a.nodes[i].position.x == b.nodes[i].position.x);
    CHECK(a.nodes[i].mark == b.nodes[i].mark);
  }
  p.tau = 0.6;
  const auto c = sample_snapshot(p, 99);
  REQUIRE(c.nodes.size() == a.nodes.size());
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
  {
    CHECK(c.nodes[i].position.y == a.nodes[i].position.y);
    CHECK(c.nodes[i].mark == a.nodes[i].mark);
    if (a.nodes[i].mode == Mode::radar)
      CHECK(c.nodes[i].mode == Mode::radar);
  }
}

TEST_CASE("disk regions")
{
  SystemParams p;
  const auto s = sample_snapshot(p, Region::disk(80.0), 4);
  for (const auto& n : s.nodes)
    CHECK(norm(n.position) <= 80.0);
  CHECK(Region::disk(80.0).inset(30.0).radius == 50.0);
  CHECK(Region::rect({150.0, 150.0}).inset(20.0).contains({21.0, 129.0}));
  CHECK(!Region::rect({150.0, 150.0}).inset(20.0).contains({19.0, 100.0}));
}

TEST_CASE("node counts are Poisson")
{
  SystemParams p;
  const int reps = 1000;
  const double mean = p.lambda * p.window.area();
  std::vector<int> counts;
  for (int r = 0; r < reps; ++r)
    counts.push_back(static_cast<int>(sample_snapshot(p, 1000 + r).nodes.size()));

  // Bins with at least 5 expected counts each; tails merged.
  const boost::math::poisson_distribution<double> pois(mean);
  std::vector<std::pair<int, int>> bins;
  int lo = 0;
  while (lo < 1000)
  {
    int hi = lo;
    double prob = boost::math::cdf(pois, hi) - (lo > 0 ? boost::math::cdf(pois, lo - 1) : 0.0);
    while (prob * reps < 5.0 && hi < 1000)
    {
      ++hi;
      prob = boost::math::cdf(pois, hi) - (lo > 0 ? boost::math::cdf(pois, lo - 1) : 0.0);
    }
    bins.emplace_back(lo, hi);
    lo = hi + 1;
    if (boost::math::cdf(boost::math::complement(pois, hi)) * reps < 5.0)
    {
      bins.back().second = 1 << 30;
      break;
    }
  }
  double chi2 = 0.0;
  for (const auto& [a, b] : bins)
  {
    const double expected =
        reps * ((b >= (1 << 30) ? 1.0 : boost::math::cdf(pois, b)) - (a > 0 ? boost::math::cdf(pois, a - 1) : 0.0));
    int observed = 0;
    for (int c : counts)
      observed += (c >= a && c <= b);
    chi2 += (observed - expected) * (observed - expected) / expected;
  }
  const boost::math::chi_squared_distribution<double> dist(static_cast<double>(bins.size() - 1));
  CHECK(boost::math::cdf(boost::math::complement(dist, chi2)) > 0.01);
}

TEST_CASE("mode thinning matches tau")
{
  SystemParams p;
  std::size_t radar = 0, total = 0;
  for (int r = 0; r < 1000; ++r)
  {
    const auto s = sample_snapshot(p, 5000 + r);
    radar += s.n_radar;
    total += s.nodes.size();
  }
  const double f = static_cast<double>(radar) / total;
  const double z = (f - p.tau) / std::sqrt(p.tau * (1 - p.tau) / total);
  CHECK(std::abs(z) < 2.576);
}
