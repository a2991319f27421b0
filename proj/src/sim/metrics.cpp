#include "jcas/sim/metrics.hpp"

#include "jcas/errors.hpp"
#include "jcas/sim/medium_access.hpp"
#include "jcas/sim/random.hpp"
#include "jcas/sim/sinr.hpp"

#include <cmath>
#include <limits>

namespace jcas::sim
{

std::uint64_t replication_seed(std::uint64_t seed, std::uint64_t r)
{
  return mix(mix(seed, Stream::replication), r);
}

std::optional<TypicalLink> sample_typical_link(const SystemParams& p, std::uint64_t rep_seed, const SimOptions& opts)
{
  const double R = opts.field_radius;
  // Nodes beyond R still contend with those inside.
  const CarrierSense probe_sense(p, opts.sensing, 0);
  TypicalLink t;
  t.nodes = sample_snapshot(p, Region::disk(R + probe_sense.range()), rep_seed);

  double best = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::uint32_t j = 0; j < t.nodes.nodes.size(); ++j)
  {
    const auto& n = t.nodes.nodes[j];
    const double d = norm(n.position);
    if (n.mode == Mode::comm && d <= R && d < best)
    {
      best = d;
      t.tx = j;
      found = true;
    }
  }
  if (!found)
    return std::nullopt;
  t.r = best;

  const AccessContext ctx(t.nodes, p, opts.sensing);
  t.e_tx = !ctx.radar_blocks(Vec2{}, kProbeId, t.r) && !ctx.comm_blocks(t.tx);

  t.interferers.assign(t.nodes.nodes.size(), 0);
  const Vec2 tx_pos = t.nodes.nodes[t.tx].position;
  for (std::uint32_t j = 0; j < t.nodes.nodes.size(); ++j)
  {
    const auto& n = t.nodes.nodes[j];
    if (j == t.tx || n.mode != Mode::comm || norm(n.position) > R)
      continue;
    if (ctx.sense().sensed(t.tx, j, distance(n.position, tx_pos)))
      continue;
    t.interferers[j] = ctx.access(j) == BlockReason::none ? 1 : 0;
  }

  SystemParams radar_only = p;
  radar_only.lambda = p.lambda * p.tau;
  radar_only.tau = 1.0;
  t.radar_layer = sample_snapshot(radar_only, Region::disk(R), mix(rep_seed, Stream::radar_layer));
  return t;
}

NetworkEvaluation evaluate_network(const Snapshot& s, const SystemParams& p, const SimOptions& opts)
{
  NetworkEvaluation ev;
  const auto access = resolve_medium_access(s, p, opts.sensing);
  ev.e = access.e;
  ev.sinr.assign(s.nodes.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::uint32_t i = 0; i < s.nodes.size(); ++i)
    if (access.e[i])
      ev.sinr[i] = compute_sinr(s, access, i, p, opts.pin_fading);
  return ev;
}

namespace
{

Metrics network_metrics(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts)
{
  const Region region = Region::rect(p.window);
  const Region interior = region.inset(opts.guard_margin);
  const double T = p.T();
  const double scale = (1.0 - p.epsilon()) / interior.area();

  std::vector<double> n_comm, n_tx, n_ok, tput;
  Metrics m;
  for (int r = 0; r < n_reps; ++r)
  {
    const auto s = sample_snapshot(p, region, replication_seed(seed, static_cast<std::uint64_t>(r)));
    const auto access = resolve_medium_access(s, p, opts.sensing);
    double c = 0.0, t = 0.0, ok = 0.0;
    for (std::uint32_t i = 0; i < s.nodes.size(); ++i)
    {
      const auto& n = s.nodes[i];
      if (n.mode != Mode::comm || !interior.contains(n.position))
        continue;
      c += 1.0;
      if (!access.e[i])
        continue;
      t += 1.0;
      if (compute_sinr(s, access, i, p, opts.pin_fading) >= T)
        ok += 1.0;
    }
    n_comm.push_back(c);
    n_tx.push_back(t);
    n_ok.push_back(ok);
    tput.push_back(scale * ok);
    m.nodes_observed += static_cast<std::size_t>(c);
  }
  m.q_w = ratio_estimate(n_tx, n_comm);
  m.P_s = ratio_estimate(n_ok, n_tx);
  m.throughput = mean_estimate(tput);
  return m;
}

Metrics typical_metrics(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts)
{
  const double T = p.T();
  const double scale = (1.0 - p.epsilon()) * derive_intensities(p).lambda_c;
  std::vector<double> e, ok, tput;
  for (int r = 0; r < n_reps; ++r)
  {
    const auto t = sample_typical_link(p, replication_seed(seed, static_cast<std::uint64_t>(r)), opts);
    if (!t)
      continue;
    const LinkSpec link{Vec2{}, kProbeId, t->tx, t->r};
    const bool success = sinr_breakdown(link, t->nodes, t->interferers, t->radar_layer, p, opts.pin_fading).sinr() >= T;
    e.push_back(t->e_tx ? 1.0 : 0.0);
    ok.push_back(success ? 1.0 : 0.0);
    tput.push_back(scale * ((t->e_tx && success) ? 1.0 : 0.0));
  }
  Metrics m;
  m.q_w = mean_estimate(e);
  m.P_s = mean_estimate(ok);
  m.throughput = mean_estimate(tput);
  m.nodes_observed = e.size();
  return m;
}

} // namespace

Metrics estimate_metrics(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts)
{
  p.validate();
  if (n_reps < 1)
    throw DomainError("n_reps must be at least 1");
  if (opts.mode == EstimationMode::typical_link)
    return typical_metrics(p, n_reps, seed, opts);
  return network_metrics(p, n_reps, seed, opts);
}

} // namespace jcas::sim
