#pragma once

#include "jcas/analytic/success.hpp"
#include "jcas/params.hpp"
#include "jcas/sim/options.hpp"

#include <cstdint>

namespace jcas::sim
{

struct H1Binning
{
  double bin_width = 2.5;     // m
  double max_distance = 150.0; // m
};

/**
 * Frequency with which a communication node at distance d from the serving
 * transmitter of a typical link also transmits without sensing it, binned by d.
 * Sampled with the typical-link replications; the first grid point sits at d = 0.
 */
analytic::H1Table estimate_h1_table(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts = {},
                                    const H1Binning& bins = {});

} // namespace jcas::sim
