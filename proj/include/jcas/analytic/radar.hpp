#pragma once

#include "jcas/params.hpp"

namespace jcas::analytic
{

/// Monostatic echo power (W) from a target of RCS sigma_rcs at range d.
double echo_power(const SystemParams& p, double d);

/// Range (m) at which echo_power equals the given power; inverse of echo_power.
double echo_range(const SystemParams& p, double power);

/// kappa = c^2 / ((4 pi)^3 f_c^2): the radar-to-radar coupling constant, m^2.
double radar_coupling(const SystemParams& p);

/**
 * Probability weight of slot overlaps between a radar's echo-wait window and a
 * neighbour's transmissions:
 *
 *   C = 1 - 1/M - sum_{i=M_r}^{M-1} (1/M) (1 - q_w)^{N_i},  N_i = min(M_r - 1, M - i).
 *
 * Evaluated as (M - 1 - sum) / M so that integral cases come out exact.
 */
double collision_factor(int M, int M_r, double q_w);

/// Maximum unambiguous radar range for the configured false-alarm target.
/// Throws InfeasibleTargetError when P_fa >= C.
double radar_max_range(const SystemParams& p, double q_w);

} // namespace jcas::analytic
