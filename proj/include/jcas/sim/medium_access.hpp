#pragma once

#include "jcas/params.hpp"
#include "jcas/sim/snapshot.hpp"
#include "jcas/sim/spatial_grid.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace jcas::sim
{

/// Id used for a probe receiver that is not a node of the snapshot.
inline constexpr std::uint32_t kProbeId = std::numeric_limits<std::uint32_t>::max();

/// Id of the receiver paired with a node, distinct from every node id.
inline constexpr std::uint32_t receiver_id(std::uint32_t node) { return node | 0x80000000u; }

enum class SensingModel
{
  /// Sensed power carries Rayleigh fading, drawn once per unordered node pair.
  rayleigh,
  /// Mean received power compared with P_th.
  mean_power
};

/// Carrier-sense decision between two positions.
class CarrierSense
{
public:
  CarrierSense(const SystemParams& p, SensingModel model, std::uint64_t seed);

  bool sensed(std::uint32_t a, std::uint32_t b, double d) const;
  /// No pair farther apart than this is ever sensed.
  double range() const { return range_; }

private:
  SensingModel model_;
  std::uint64_t seed_;
  double k_;
  double alpha_;
  double range_;
};

/// Whether radar's beam covers victim; Bernoulli(phi / 2 pi) per ordered pair.
bool beam_aligned(const SystemParams& p, std::uint64_t seed, std::uint32_t radar, std::uint32_t victim);

enum class BlockReason : std::uint8_t
{
  none,
  radar,
  comm_mark
};

/// Per-node access state; entries of radar nodes stay e = 0, none.
struct MediumAccessOutcome
{
  std::vector<std::uint8_t> e;
  std::vector<BlockReason> blocked_by;
};

/// Spatial view of one snapshot for contention queries.
class AccessContext
{
public:
  AccessContext(const Snapshot& s, const SystemParams& p, SensingModel model);

  const Snapshot& snapshot() const { return s_; }
  const CarrierSense& sense() const { return sense_; }
  const SpatialGrid& grid() const { return grid_; }

  /// An active, aligned radar at distance > exclusion from point is sensed there.
  bool radar_blocks(Vec2 point, std::uint32_t listener, double exclusion = 0.0) const;
  /// A comm node with a smaller mark is sensed by node i.
  bool comm_blocks(std::uint32_t i) const;
  BlockReason access(std::uint32_t i) const;

private:
  const Snapshot& s_;
  const SystemParams& p_;
  CarrierSense sense_;
  SpatialGrid grid_;
};

MediumAccessOutcome resolve_medium_access(const Snapshot& s, const SystemParams& p,
                                          SensingModel model = SensingModel::rayleigh);

} // namespace jcas::sim
