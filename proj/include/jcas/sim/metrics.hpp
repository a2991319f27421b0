#pragma once

#include "jcas/params.hpp"
#include "jcas/sim/estimate.hpp"
#include "jcas/sim/options.hpp"
#include "jcas/sim/snapshot.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace jcas::sim
{

struct Metrics
{
  Estimate q_w;
  Estimate P_s;
  Estimate throughput; // successes / m^2
  std::size_t nodes_observed = 0;
};

/// Replication r of a run seeded with seed.
std::uint64_t replication_seed(std::uint64_t seed, std::uint64_t r);

/// One typical-link replication.
struct TypicalLink
{
  Snapshot nodes;
  Snapshot radar_layer; // independent radar interferers
  std::uint32_t tx = 0;
  double r = 0.0;
  bool e_tx = false;
  /// Communication nodes inside the field that transmit and do not sense tx.
  std::vector<std::uint8_t> interferers;
};

/// Empty when the field holds no communication node.
std::optional<TypicalLink> sample_typical_link(const SystemParams& p, std::uint64_t rep_seed, const SimOptions& opts);

/// Per-node access and SINR of one network snapshot; sinr is NaN where e = 0.
struct NetworkEvaluation
{
  std::vector<std::uint8_t> e;
  std::vector<double> sinr;
};

NetworkEvaluation evaluate_network(const Snapshot& s, const SystemParams& p, const SimOptions& opts);

/**
 * q_w, P_s and throughput from n_reps replications. Network mode: q_w is the
 * share of interior comm nodes with e = 1, P_s the share of those reaching
 * SINR >= T, throughput (1 - epsilon) times interior successes per m^2.
 * Typical-link mode: q_w = P(e_tx = 1), P_s = P(SINR >= T) with the serving
 * node forced on, throughput (1 - epsilon) lambda_c E[e_tx 1{SINR >= T}].
 */
Metrics estimate_metrics(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts = {});

} // namespace jcas::sim
