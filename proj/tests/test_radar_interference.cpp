#include "jcas/analytic/radar.hpp"
#include "jcas/sim/radar_interference.hpp"

#include <doctest.h>

#include <cmath>

using namespace jcas;
using namespace jcas::sim;

namespace
{

Node radar(std::uint32_t id, Vec2 at, int offset)
{
  Node n;
  n.id = id;
  n.position = at;
  n.mode = Mode::radar;
  n.duty_active = true;
  n.cycle_offset = offset;
  return n;
}

Snapshot radars(std::vector<Node> nodes)
{
  Snapshot s;
  s.seed = 2;
  s.nodes = std::move(nodes);
  s.n_radar = s.nodes.size();
  return s;
}

} // namespace

TEST_CASE("echo-wait slots")
{
  SystemParams p;
  Node v = radar(0, {}, 90);
  const auto slots = echo_wait_slots(v, p);
  REQUIRE(slots.size() == static_cast<std::size_t>(p.M_r - 1));
  CHECK(slots.front() == 91);
  CHECK(slots.back() == (90 + p.M_r - 1) % p.M);
}

TEST_CASE("slot activity")
{
  SystemParams p;
  const auto s = radars({radar(0, {}, 10)});
  const SlotActivity silent(s, p, 0.0), busy(s, p, 1.0);
  int on0 = 0, on1 = 0;
  for (int t = 0; t < p.M; ++t)
  {
    on0 += silent.emits(0, t);
    on1 += busy.emits(0, t);
  }
  CHECK(on0 == 1);
  CHECK(silent.emits(0, 10));
  CHECK(on1 == p.M - p.M_r + 1);
  for (int rel = 1; rel < p.M_r; ++rel)
    CHECK(!busy.emits(0, 10 + rel));
}

TEST_CASE("interference power law")
{
  SystemParams p;
  const double G = p.antenna_gain();
  const double one = analytic::radar_coupling(p) * p.P_tx() * G * G;
  CHECK(radar_interference_power(p, 1.0) == doctest::Approx(one).epsilon(1e-14));
  CHECK(radar_interference_power(p, 7.0) / radar_interference_power(p, 14.0) == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("aggregation over emitting interferers")
{
  SystemParams p; // phi = 2 pi: every beam aligned
  // Victim pulses at 0 and waits in 1..24; interferers pulse in slot 5.
  const auto one = radars({radar(0, {0, 0}, 0), radar(1, {3, 0}, 5)});
  const auto two = radars({radar(0, {0, 0}, 0), radar(1, {3, 0}, 5), radar(2, {-3, 0}, 5)});
  const SlotActivity a1(one, p, 0.0), a2(two, p, 0.0);
  const double single = aggregate_radar_interference(one, p, 0, 5, a1);
  CHECK(single == doctest::Approx(radar_interference_power(p, 3.0)).epsilon(1e-14));
  CHECK(aggregate_radar_interference(two, p, 0, 5, a2) == doctest::Approx(2.0 * single).epsilon(1e-14));
  CHECK(aggregate_radar_interference(two, p, 0, 5, a2, InterferenceModel::nearest_only) ==
        doctest::Approx(single).epsilon(1e-14));
  CHECK(aggregate_radar_interference(two, p, 0, 6, a2) == 0.0);

  auto idle = two;
  idle.nodes[2].duty_active = false;
  const SlotActivity ai(idle, p, 0.0);
  CHECK(aggregate_radar_interference(idle, p, 0, 5, ai) == doctest::Approx(single).epsilon(1e-14));
}

TEST_CASE("false-alarm probability limits and monotonicity")
{
  SystemParams p;
  const auto peaks = sample_peak_interference(p, 40, 3);
  REQUIRE(peaks.victims() > 0);
  CHECK(peaks.exceedance(1e300) == 0.0);
  CHECK(peaks.exceedance(0.0) > 0.99);
  double prev = 1.0;
  for (double theta = 1e-14; theta < 1e-2; theta *= 3.0)
  {
    const double f = peaks.exceedance(theta);
    CHECK(f <= prev);
    prev = f;
  }
  const Estimate fa = estimate_false_alarm(p, 1e-9, 40, 3);
  CHECK(fa.mean == doctest::Approx(peaks.exceedance(1e-9)));
}

TEST_CASE("nearest-only never exceeds the full sum")
{
  SystemParams p;
  SimOptions full, nearest;
  nearest.radar_interference = InterferenceModel::nearest_only;
  const auto a = sample_peak_interference(p, 20, 9, full);
  const auto b = sample_peak_interference(p, 20, 9, nearest);
  REQUIRE(a.peaks.size() == b.peaks.size());
  for (std::size_t r = 0; r < a.peaks.size(); ++r)
    for (std::size_t k = 0; k < a.peaks[r].size(); ++k)
      CHECK(b.peaks[r][k] <= a.peaks[r][k]);
}

TEST_CASE("threshold selection")
{
  PeakInterference pk;
  pk.peaks = {{1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0, 10.0}};
  const double theta = threshold_for_false_alarm(pk, 0.3, 1e-3);
  CHECK(pk.exceedance(theta) <= 0.3);
  CHECK(theta == doctest::Approx(7.0).epsilon(1e-6));
  CHECK(threshold_for_false_alarm(PeakInterference{{{0.0, 0.0}}}, 0.1, 1e-3) == 1e-3);
}

TEST_CASE("empirical range")
{
  SystemParams p;
  SimOptions opts;
  p.lambda = 1e-7;
  const auto empty = empirical_radar_range(p, 20, 1, opts);
  CHECK(empty.mean == doctest::Approx(opts.range_ceiling));

  p.lambda = 1e-3;
  const auto sparse = empirical_radar_range(p, 40, 1, opts);
  p.lambda = 1e-2;
  const auto dense = empirical_radar_range(p, 40, 1, opts);
  CHECK(sparse.mean > dense.mean);
  CHECK(dense.mean > 0.0);

  p.eta = 0.3;
  const auto light = empirical_radar_range(p, 40, 1, opts);
  CHECK(light.mean >= dense.mean);
}

TEST_CASE("detection of a close target")
{
  SystemParams p;
  const double theta = analytic::echo_power(p, 50.0);
  CHECK(detection_probability(p, theta, 5.0, 10, 4).mean == 1.0);
}
