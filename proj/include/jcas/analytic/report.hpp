#pragma once

#include "jcas/analytic/quadrature.hpp"
#include "jcas/analytic/success.hpp"
#include "jcas/params.hpp"

namespace jcas::analytic
{

struct AnalyticReport
{
  double q_w = 0.0;
  double P_s = 0.0;
  double d_rm = 0.0; // m
  double throughput = 0.0; // successes / m^2
  double C = 0.0;
};

/// q_w, then C and d_rm, then P_s and throughput. Propagates InfeasibleTargetError.
AnalyticReport analytic_report(const SystemParams& p, const H1Strategy& strategy = {}, const QuadratureSpec& quad = {},
                               const FieldExtent& field = {});

} // namespace jcas::analytic
