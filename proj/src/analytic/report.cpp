#include "jcas/analytic/report.hpp"

#include "jcas/analytic/access.hpp"
#include "jcas/analytic/radar.hpp"

namespace jcas::analytic
{

AnalyticReport analytic_report(const SystemParams& p, const H1Strategy& strategy, const QuadratureSpec& quad,
                               const FieldExtent& field)
{
  p.validate();
  AnalyticReport r;
  r.q_w = medium_access_probability(p, quad, field);
  r.C = collision_factor(p.M, p.M_r, r.q_w);
  r.d_rm = radar_max_range(p, r.q_w);
  r.P_s = success_probability(p, r.q_w, strategy, quad, field);
  r.throughput = throughput_density(p, r.q_w, r.P_s);
  return r;
}

} // namespace jcas::analytic
