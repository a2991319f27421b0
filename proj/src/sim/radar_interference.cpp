#include "jcas/sim/radar_interference.hpp"

#include "jcas/analytic/access.hpp"
#include "jcas/analytic/radar.hpp"
#include "jcas/errors.hpp"
#include "jcas/sim/medium_access.hpp"
#include "jcas/sim/metrics.hpp"
#include "jcas/sim/random.hpp"

#include <algorithm>
#include <cmath>

namespace jcas::sim
{

SlotActivity::SlotActivity(const Snapshot& s, const SystemParams& p, double comm_q)
    : M_(p.M), words_(static_cast<std::size_t>((p.M + 63) / 64))
{
  bits_.assign(words_ * s.nodes.size(), 0);
  const std::uint64_t key = mix(s.seed, Stream::slot_activity);
  for (std::uint32_t j = 0; j < s.nodes.size(); ++j)
  {
    const auto& n = s.nodes[j];
    if (n.mode != Mode::radar)
      continue;
    auto set = [&](int slot) {
      bits_[j * words_ + static_cast<std::size_t>(slot / 64)] |= std::uint64_t{1} << (slot % 64);
    };
    set(n.cycle_offset);
    for (int rel = p.M_r; rel < p.M; ++rel)
    {
      const int slot = (n.cycle_offset + rel) % p.M;
      if (comm_q >= 1.0 || (comm_q > 0.0 && hash_uniform(mix(key, j, static_cast<std::uint64_t>(slot))) < comm_q))
        set(slot);
    }
  }
}

bool SlotActivity::emits(std::uint32_t node, int slot) const
{
  slot = ((slot % M_) + M_) % M_;
  return (bits_[node * words_ + static_cast<std::size_t>(slot / 64)] >> (slot % 64)) & 1U;
}

std::vector<int> echo_wait_slots(const Node& victim, const SystemParams& p)
{
  std::vector<int> slots;
  for (int rel = 1; rel < p.M_r; ++rel)
    slots.push_back((victim.cycle_offset + rel) % p.M);
  return slots;
}

double radar_interference_power(const SystemParams& p, double d)
{
  if (!(d > 0.0))
    throw DomainError("interferer distance must be positive");
  const double G = p.antenna_gain();
  return analytic::radar_coupling(p) * p.P_tx() * G * G / (d * d * d * d);
}

namespace
{

bool interferes(const Snapshot& s, const SystemParams& p, std::uint32_t j, std::uint32_t victim)
{
  const auto& n = s.nodes[j];
  return j != victim && n.mode == Mode::radar && n.duty_active && beam_aligned(p, s.seed, j, victim);
}

double comm_slot_probability(const SystemParams& p, const SimOptions& opts)
{
  if (opts.comm_slot_q_w >= 0.0)
    return std::min(opts.comm_slot_q_w, 1.0);
  return analytic::medium_access_probability(p);
}

// Peak over the echo-wait window of one victim.
double victim_peak(const Snapshot& s, const SystemParams& p, std::uint32_t victim, const SlotActivity& act,
                   InterferenceModel model, std::vector<double>& buf)
{
  const auto slots = echo_wait_slots(s.nodes[victim], p);
  buf.assign(slots.size(), 0.0);
  const Vec2 at = s.nodes[victim].position;
  for (std::uint32_t j = 0; j < s.nodes.size(); ++j)
  {
    if (!interferes(s, p, j, victim))
      continue;
    const double w = radar_interference_power(p, distance(s.nodes[j].position, at));
    for (std::size_t k = 0; k < slots.size(); ++k)
    {
      if (!act.emits(j, slots[k]))
        continue;
      buf[k] = model == InterferenceModel::full_sum ? buf[k] + w : std::max(buf[k], w);
    }
  }
  return buf.empty() ? 0.0 : *std::max_element(buf.begin(), buf.end());
}

} // namespace

double aggregate_radar_interference(const Snapshot& s, const SystemParams& p, std::uint32_t victim, int slot,
                                    const SlotActivity& activity, InterferenceModel model)
{
  const Vec2 at = s.nodes.at(victim).position;
  double total = 0.0;
  for (std::uint32_t j = 0; j < s.nodes.size(); ++j)
  {
    if (!interferes(s, p, j, victim) || !activity.emits(j, slot))
      continue;
    const double w = radar_interference_power(p, distance(s.nodes[j].position, at));
    total = model == InterferenceModel::full_sum ? total + w : std::max(total, w);
  }
  return total;
}

std::size_t PeakInterference::victims() const
{
  std::size_t n = 0;
  for (const auto& r : peaks)
    n += r.size();
  return n;
}

double PeakInterference::exceedance(double theta) const
{
  const std::size_t n = victims();
  if (n == 0)
    return 0.0;
  std::size_t hits = 0;
  for (const auto& r : peaks)
    for (double x : r)
      hits += x > theta ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(n);
}

PeakInterference sample_peak_interference(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts)
{
  p.validate();
  if (n_reps < 1)
    throw DomainError("n_reps must be at least 1");
  const Region region = Region::rect(p.window);
  const Region interior = region.inset(opts.guard_margin);
  const double q = comm_slot_probability(p, opts);

  PeakInterference out;
  out.peaks.resize(static_cast<std::size_t>(n_reps));
  std::vector<double> buf;
  for (int r = 0; r < n_reps; ++r)
  {
    const auto s = sample_snapshot(p, region, replication_seed(seed, static_cast<std::uint64_t>(r)));
    const SlotActivity act(s, p, q);
    auto& peaks = out.peaks[static_cast<std::size_t>(r)];
    for (std::uint32_t i = 0; i < s.nodes.size() && static_cast<int>(peaks.size()) < opts.victims_per_rep; ++i)
    {
      if (s.nodes[i].mode != Mode::radar || !interior.contains(s.nodes[i].position))
        continue;
      peaks.push_back(victim_peak(s, p, i, act, opts.radar_interference, buf));
    }
  }
  return out;
}

namespace
{

Estimate exceedance_estimate(const PeakInterference& peaks, double theta)
{
  std::vector<double> hits, n;
  for (const auto& r : peaks.peaks)
  {
    double h = 0.0;
    for (double x : r)
      h += x > theta ? 1.0 : 0.0;
    hits.push_back(h);
    n.push_back(static_cast<double>(r.size()));
  }
  return ratio_estimate(hits, n);
}

} // namespace

Estimate estimate_false_alarm(const SystemParams& p, double theta, int n_reps, std::uint64_t seed,
                              const SimOptions& opts)
{
  if (!(theta > 0.0))
    throw DomainError("threshold must be positive");
  return exceedance_estimate(sample_peak_interference(p, n_reps, seed, opts), theta);
}

double threshold_for_false_alarm(const PeakInterference& peaks, double P_fa, double floor)
{
  if (!(floor > 0.0))
    throw DomainError("threshold floor must be positive");
  if (peaks.exceedance(floor) <= P_fa)
    return floor;
  double hi = floor;
  for (const auto& r : peaks.peaks)
    for (double x : r)
      hi = std::max(hi, x);
  if (peaks.exceedance(hi) > P_fa)
    throw InfeasibleTargetError("no threshold meets the false-alarm target");
  double lo = floor;
  for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-12; ++it)
  {
    const double mid = std::sqrt(lo * hi);
    if (peaks.exceedance(mid) <= P_fa)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

Estimate empirical_radar_range(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts)
{
  const auto peaks = sample_peak_interference(p, n_reps, seed, opts);
  const double floor = analytic::echo_power(p, opts.range_ceiling);
  auto range_of = [&](const PeakInterference& pk) {
    const double theta = threshold_for_false_alarm(pk, p.P_fa, floor);
    return std::min(analytic::echo_range(p, theta), opts.range_ceiling);
  };

  Estimate e;
  e.n = static_cast<std::size_t>(n_reps);
  e.mean = range_of(peaks);

  const int batches = std::min(n_reps, 20);
  if (batches >= 2)
  {
    std::vector<double> values;
    for (int b = 0; b < batches; ++b)
    {
      PeakInterference part;
      for (int r = b * n_reps / batches; r < (b + 1) * n_reps / batches; ++r)
        part.peaks.push_back(peaks.peaks[static_cast<std::size_t>(r)]);
      values.push_back(range_of(part));
    }
    e.std_error = batch_estimate(values).std_error;
  }
  return e;
}

Estimate detection_probability(const SystemParams& p, double theta, double target_range, int n_reps,
                               std::uint64_t seed, const SimOptions& opts)
{
  const auto peaks = sample_peak_interference(p, n_reps, seed, opts);
  const double echo = analytic::echo_power(p, target_range);
  std::vector<double> hits, n;
  for (const auto& r : peaks.peaks)
  {
    double h = 0.0;
    for (double x : r)
      h += echo + x > theta ? 1.0 : 0.0;
    hits.push_back(h);
    n.push_back(static_cast<double>(r.size()));
  }
  return ratio_estimate(hits, n);
}

} // namespace jcas::sim
