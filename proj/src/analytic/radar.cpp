#include "jcas/analytic/radar.hpp"

#include "jcas/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jcas::analytic
{

double radar_coupling(const SystemParams& p)
{
  const double four_pi = 4.0 * kPi;
  return kSpeedOfLight * kSpeedOfLight / (four_pi * four_pi * four_pi * p.f_c * p.f_c);
}

double echo_power(const SystemParams& p, double d)
{
  if (!(d > 0.0))
    throw DomainError("echo power requires a positive range");
  const double g = p.antenna_gain();
  const double d2 = d * d;
  return p.P_tx() * g * g * radar_coupling(p) * p.sigma_rcs / (d2 * d2);
}

double echo_range(const SystemParams& p, double power)
{
  if (!(power > 0.0))
    throw DomainError("echo range requires a positive power");
  const double g = p.antenna_gain();
  return std::pow(p.P_tx() * g * g * radar_coupling(p) * p.sigma_rcs / power, 0.25);
}

double collision_factor(int M, int M_r, double q_w)
{
  if (M < 2 || M_r <= 0 || M_r >= M)
    throw DomainError("collision factor requires 0 < M_r < M");
  if (!(q_w >= 0.0 && q_w <= 1.0))
    throw DomainError("collision factor requires q_w in [0,1]");

  const double idle = 1.0 - q_w;
  double sum = 0.0;
  for (int i = M_r; i <= M - 1; ++i)
  {
    const int n = std::min(M_r - 1, M - i);
    sum += std::pow(idle, n);
  }
  return (static_cast<double>(M - 1) - sum) / static_cast<double>(M);
}

double radar_max_range(const SystemParams& p, double q_w)
{
  const double c = collision_factor(p.M, p.M_r, q_w);
  if (!(p.P_fa < c))
    throw InfeasibleTargetError("false-alarm target " + std::to_string(p.P_fa) +
                                " is not below the collision factor " + std::to_string(c));
  // Scale factor uses 4 pi^3 in the denominator, not (4 pi)^3.
  const double scale = p.sigma_rcs * p.f_c * p.f_c / (4.0 * kPi * kPi * kPi * kSpeedOfLight * kSpeedOfLight);
  const double log_term = -std::log1p(-p.P_fa / c);
  return std::pow(scale, 0.125) * std::pow(log_term, 0.25);
}

} // namespace jcas::analytic
