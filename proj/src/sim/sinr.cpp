#include "jcas/sim/sinr.hpp"

#include "jcas/errors.hpp"
#include "jcas/path_loss.hpp"
#include "jcas/sim/random.hpp"

namespace jcas::sim
{

double fading_gain(const SystemParams& p, std::uint64_t seed, std::uint32_t tx, std::uint32_t rx, bool pin)
{
  if (pin)
    return 1.0;
  return exponential_from_uniform(hash_uniform(mix(mix(seed, Stream::fading), tx, rx)), p.mu);
}

SinrBreakdown sinr_breakdown(const LinkSpec& link, const Snapshot& comms, const std::vector<std::uint8_t>& transmitting,
                             const Snapshot& radars, const SystemParams& p, bool pin_fading)
{
  if (!(link.distance > 0.0))
    throw DomainError("link distance must be positive");
  const auto l = PathLossModel::free_space_reference(p.f_c, p.alpha);
  const double P = p.P_tx();

  SinrBreakdown b;
  b.noise = p.noise();
  b.signal = P * fading_gain(p, comms.seed, link.tx_id, link.rx_id, pin_fading) / l(link.distance);

  for (std::uint32_t j = 0; j < comms.nodes.size(); ++j)
  {
    if (j == link.tx_id || !transmitting[j])
      continue;
    const double d = distance(comms.nodes[j].position, link.rx);
    b.comm += P * fading_gain(p, comms.seed, j, link.rx_id, pin_fading) / l(d);
  }
  for (std::uint32_t j = 0; j < radars.nodes.size(); ++j)
  {
    const auto& n = radars.nodes[j];
    if (n.mode != Mode::radar || !n.duty_active || !beam_aligned(p, radars.seed, j, link.rx_id))
      continue;
    const double d = distance(n.position, link.rx);
    b.radar += P * fading_gain(p, radars.seed, j, link.rx_id, pin_fading) / l(d);
  }
  return b;
}

double compute_sinr(const Snapshot& s, const MediumAccessOutcome& access, std::uint32_t node, const SystemParams& p,
                    bool pin_fading)
{
  const auto& n = s.nodes.at(node);
  const LinkSpec link{n.rx_position, receiver_id(node), node, p.r_c};
  return sinr_breakdown(link, s, access.e, s, p, pin_fading).sinr();
}

} // namespace jcas::sim
