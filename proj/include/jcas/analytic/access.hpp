#pragma once

#include "jcas/analytic/quadrature.hpp"
#include "jcas/params.hpp"

namespace jcas::analytic
{

/**
 * Probability that a transmission from distance d is sensed above P_th when the
 * sensed power carries Rayleigh fading: s(d) = exp(-mu (P_th / P_tx) l(d)).
 */
class SensingKernel
{
public:
  explicit SensingKernel(const SystemParams& p);

  double operator()(double d) const;
  /// Distance beyond which s(d) < floor.
  double cutoff(double floor) const;
  /// Radius at which the mean received power equals P_th.
  double mean_power_range() const;

private:
  double k_;
  double alpha_;
  double mu_;
};

/// Nearest-neighbour distance density of a PPP with intensity lambda_c.
double nn_distance_pdf(double lambda_c, double r);

/// (1 - exp(-K)) / K, with a series for small K.
double contention_factor(double K);

struct ExclusionIntegrals
{
  double K_r = 0.0; // blocking radars, sensed at the receiver
  double K_c = 0.0; // contending comm nodes, sensed at the transmitter
};

/**
 * Expected numbers of blocking radar nodes and of contending communication nodes
 * outside the ball B(0, r_c) around the receiver at the origin, with the
 * transmitter at (r_c, 0). The radar term uses the beam-aligned, duty-cycled
 * intensity eta * (phi / 2 pi) * lambda_r.
 */
ExclusionIntegrals exclusion_integrals(const SystemParams& p, double r_c, const QuadratureSpec& quad = {},
                                       const FieldExtent& field = {});

/// Medium-access probability q_w: the exclusion integrals averaged over the
/// nearest-neighbour link distance.
double medium_access_probability(const SystemParams& p, const QuadratureSpec& quad = {},
                                 const FieldExtent& field = {});

/// Truncation radius actually used for the sensing integrals.
double sensing_truncation_radius(const SystemParams& p, const QuadratureSpec& quad);

/// Upper limit of link-distance integration so the omitted tail is negligible.
double link_distance_limit(double lambda_c, const QuadratureSpec& quad, const FieldExtent& field);

} // namespace jcas::analytic
