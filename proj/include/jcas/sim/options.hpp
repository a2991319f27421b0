#pragma once

#include "jcas/sim/medium_access.hpp"

namespace jcas::sim
{

enum class EstimationMode
{
  /// Whole windows: interior nodes inset by the guard margin, fixed r_c links.
  network,
  /// One probe receiver at the centre of a disk, served by its nearest
  /// communication node; the setting of the closed-form expressions.
  typical_link
};

enum class InterferenceModel
{
  full_sum,
  nearest_only
};

struct SimOptions
{
  EstimationMode mode = EstimationMode::network;
  SensingModel sensing = SensingModel::rayleigh;
  double guard_margin = 20.0;   // m, network mode
  double field_radius = 200.0;  // m, typical-link mode
  bool pin_fading = false;

  InterferenceModel radar_interference = InterferenceModel::full_sum;
  int victims_per_rep = 20;
  /// Per-slot transmission probability of radar nodes in their communication
  /// slots; negative selects the analytic q_w.
  double comm_slot_q_w = -1.0;
  double range_ceiling = 1000.0; // m, largest range probed
};

} // namespace jcas::sim
