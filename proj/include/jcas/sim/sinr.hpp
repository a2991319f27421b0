#pragma once

#include "jcas/params.hpp"
#include "jcas/sim/medium_access.hpp"
#include "jcas/sim/snapshot.hpp"

#include <cstdint>
#include <vector>

namespace jcas::sim
{

/// Powers in W at one receiver.
struct SinrBreakdown
{
  double signal = 0.0;
  double radar = 0.0;
  double comm = 0.0;
  double noise = 0.0;

  double sinr() const { return signal / (radar + comm + noise); }
};

/// Fading power gain for the (transmitter, receiver) pair, Exponential(mu).
double fading_gain(const SystemParams& p, std::uint64_t seed, std::uint32_t tx, std::uint32_t rx, bool pin);

struct LinkSpec
{
  Vec2 rx{};
  std::uint32_t rx_id = kProbeId;
  std::uint32_t tx_id = 0;
  double distance = 0.0; // m
};

/**
 * SINR at link.rx. Communication interference comes from every node of comms
 * whose entry in transmitting is non-zero (other than the serving node); radar
 * interference from the duty-active, beam-aligned radar nodes of radars.
 */
SinrBreakdown sinr_breakdown(const LinkSpec& link, const Snapshot& comms, const std::vector<std::uint8_t>& transmitting,
                             const Snapshot& radars, const SystemParams& p, bool pin_fading = false);

/// SINR (linear) at the receiver of node, all interferers taken from s.
double compute_sinr(const Snapshot& s, const MediumAccessOutcome& access, std::uint32_t node, const SystemParams& p,
                    bool pin_fading = false);

} // namespace jcas::sim
