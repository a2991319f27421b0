#pragma once

#include "jcas/params.hpp"
#include "jcas/sim/estimate.hpp"
#include "jcas/sim/options.hpp"
#include "jcas/sim/snapshot.hpp"

#include <cstdint>
#include <vector>

namespace jcas::sim
{

/**
 * Slot activity of the radar nodes of one snapshot. A radar node with offset o
 * emits its pulse in slot o, listens in o+1 .. o+M_r-1 and, in each of its
 * communication slots, transmits with probability comm_q (all mod M).
 */
class SlotActivity
{
public:
  SlotActivity(const Snapshot& s, const SystemParams& p, double comm_q);

  bool emits(std::uint32_t node, int slot) const;

private:
  int M_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

/// Slots in which victim waits for its echo.
std::vector<int> echo_wait_slots(const Node& victim, const SystemParams& p);

/// Received interference power kappa P_tx G^2 / d^4 from one radar.
double radar_interference_power(const SystemParams& p, double d);

/// Interference (W) at victim during slot from every other radar node that is
/// beam-aligned with it, duty-active and emitting in that slot.
double aggregate_radar_interference(const Snapshot& s, const SystemParams& p, std::uint32_t victim, int slot,
                                    const SlotActivity& activity,
                                    InterferenceModel model = InterferenceModel::full_sum);

/// Largest per-slot interference over each victim's echo-wait window.
struct PeakInterference
{
  /// peaks[r] holds one value per sampled victim of replication r.
  std::vector<std::vector<double>> peaks;

  std::size_t victims() const;
  /// Share of victims whose peak exceeds theta.
  double exceedance(double theta) const;
};

/// Samples up to victims_per_rep interior radar nodes per replication.
PeakInterference sample_peak_interference(const SystemParams& p, int n_reps, std::uint64_t seed,
                                          const SimOptions& opts = {});

/// Probability that interference exceeds theta in at least one echo-wait slot.
Estimate estimate_false_alarm(const SystemParams& p, double theta, int n_reps, std::uint64_t seed,
                              const SimOptions& opts = {});

/// Smallest threshold whose exceedance is at most P_fa, by bisection in log theta
/// on [floor, largest peak].
double threshold_for_false_alarm(const PeakInterference& peaks, double P_fa, double floor);

/**
 * Largest range whose echo clears the threshold set by the false-alarm target.
 * With no interference the threshold falls to the echo power at range_ceiling
 * and the range equals the ceiling. Standard error from batch means.
 */
Estimate empirical_radar_range(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts = {});

/// Diagnostic: share of victims whose echo from target_range plus peak
/// interference exceeds theta.
Estimate detection_probability(const SystemParams& p, double theta, double target_range, int n_reps,
                               std::uint64_t seed, const SimOptions& opts = {});

} // namespace jcas::sim
