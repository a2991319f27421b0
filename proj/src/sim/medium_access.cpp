#include "jcas/sim/medium_access.hpp"

#include "jcas/analytic/access.hpp"
#include "jcas/sim/random.hpp"

#include <algorithm>
#include <cmath>

namespace jcas::sim
{

namespace
{

std::vector<Vec2> positions(const Snapshot& s)
{
  std::vector<Vec2> out;
  out.reserve(s.nodes.size());
  for (const auto& n : s.nodes)
    out.push_back(n.position);
  return out;
}

} // namespace

CarrierSense::CarrierSense(const SystemParams& p, SensingModel model, std::uint64_t seed)
    : model_(model), seed_(mix(seed, Stream::sensing)), alpha_(p.alpha)
{
  const analytic::SensingKernel kernel(p);
  k_ = -std::log(kernel(1.0));
  range_ = model == SensingModel::rayleigh ? kernel.cutoff(1e-16) : kernel.mean_power_range();
}

bool CarrierSense::sensed(std::uint32_t a, std::uint32_t b, double d) const
{
  if (d > range_)
    return false;
  if (model_ == SensingModel::mean_power)
    return d < range_;
  const auto lo = std::min(a, b);
  const auto hi = std::max(a, b);
  return hash_uniform(mix(seed_, lo, hi)) < std::exp(-k_ * std::pow(d, alpha_));
}

bool beam_aligned(const SystemParams& p, std::uint64_t seed, std::uint32_t radar, std::uint32_t victim)
{
  const double f = p.beam_fraction();
  if (f >= 1.0)
    return true;
  return hash_uniform(mix(mix(seed, Stream::beam), radar, victim)) < f;
}

AccessContext::AccessContext(const Snapshot& s, const SystemParams& p, SensingModel model)
    : s_(s), p_(p), sense_(p, model, s.seed), grid_(positions(s), std::max(sense_.range() / 4.0, 1.0))
{
}

bool AccessContext::radar_blocks(Vec2 point, std::uint32_t listener, double exclusion) const
{
  bool blocked = false;
  grid_.visit_within(point, sense_.range(), [&](std::uint32_t j, double d) {
    const auto& n = s_.nodes[j];
    if (n.mode != Mode::radar || !n.duty_active || j == listener || d <= exclusion)
      return true;
    if (beam_aligned(p_, s_.seed, j, listener) && sense_.sensed(j, listener, d))
    {
      blocked = true;
      return false;
    }
    return true;
  });
  return blocked;
}

bool AccessContext::comm_blocks(std::uint32_t i) const
{
  const auto& me = s_.nodes[i];
  bool blocked = false;
  grid_.visit_within(me.position, sense_.range(), [&](std::uint32_t j, double d) {
    const auto& n = s_.nodes[j];
    if (n.mode != Mode::comm || j == i || n.mark >= me.mark)
      return true;
    if (sense_.sensed(i, j, d))
    {
      blocked = true;
      return false;
    }
    return true;
  });
  return blocked;
}

BlockReason AccessContext::access(std::uint32_t i) const
{
  if (radar_blocks(s_.nodes[i].position, i))
    return BlockReason::radar;
  if (comm_blocks(i))
    return BlockReason::comm_mark;
  return BlockReason::none;
}

MediumAccessOutcome resolve_medium_access(const Snapshot& s, const SystemParams& p, SensingModel model)
{
  const AccessContext ctx(s, p, model);
  MediumAccessOutcome out;
  out.e.assign(s.nodes.size(), 0);
  out.blocked_by.assign(s.nodes.size(), BlockReason::none);
  for (std::uint32_t i = 0; i < s.nodes.size(); ++i)
  {
    if (s.nodes[i].mode != Mode::comm)
      continue;
    out.blocked_by[i] = ctx.access(i);
    out.e[i] = out.blocked_by[i] == BlockReason::none ? 1 : 0;
  }
  return out;
}

} // namespace jcas::sim
