#include "jcas/analytic/access.hpp"

#include "jcas/errors.hpp"
#include "jcas/path_loss.hpp"

#include <algorithm>
#include <cmath>

namespace jcas::analytic
{

SensingKernel::SensingKernel(const SystemParams& p)
    : k_(p.mu * p.P_th() / p.P_tx() * PathLossModel::free_space_reference(p.f_c, p.alpha).L0), alpha_(p.alpha), mu_(p.mu)
{
}

double SensingKernel::operator()(double d) const
{
  return std::exp(-k_ * std::pow(d, alpha_));
}

double SensingKernel::cutoff(double floor) const
{
  return std::pow(-std::log(floor) / k_, 1.0 / alpha_);
}

double SensingKernel::mean_power_range() const
{
  // k_ carries mu; the mean-power range does not.
  return std::pow(mu_ / k_, 1.0 / alpha_);
}

double nn_distance_pdf(double lambda_c, double r)
{
  if (r < 0.0)
    return 0.0;
  return 2.0 * kPi * lambda_c * r * std::exp(-lambda_c * kPi * r * r);
}

double contention_factor(double K)
{
  if (K < 1e-6)
    return 1.0 - K / 2.0 + K * K / 6.0;
  return -std::expm1(-K) / K;
}

double sensing_truncation_radius(const SystemParams& p, const QuadratureSpec& quad)
{
  if (quad.truncation_radius > 0.0)
    return quad.truncation_radius;
  return SensingKernel(p).cutoff(quad.abs_tol * 1e-6);
}

double link_distance_limit(double lambda_c, const QuadratureSpec& quad, const FieldExtent& field)
{
  // exp(-lambda_c pi R^2) below abs_tol * 1e-3.
  const double tail = -std::log(quad.abs_tol * 1e-3);
  const double r = std::sqrt(tail / (kPi * lambda_c));
  return std::min(r, field.outer_radius);
}

namespace
{

// Integrates s(|x - (r, 0)|) over r < |x| < outer, polar about the origin.
double shifted_sensing_integral(const SensingKernel& s, double r, double outer, double trunc,
                                const QuadratureSpec& quad)
{
  const double rho_max = std::min(outer, r + trunc);
  if (!(rho_max > r))
    return 0.0;

  auto ring = [&](double rho) {
    if (rho <= 0.0)
      return 0.0;
    // Restrict the angle to where the distance to the transmitter is below trunc.
    double theta_max = kPi;
    if (r > 0.0)
    {
      const double c = (rho * rho + r * r - trunc * trunc) / (2.0 * rho * r);
      if (c >= 1.0)
        return 0.0;
      if (c > -1.0)
        theta_max = std::acos(c);
    }
    auto arc = [&](double theta) {
      const double d2 = rho * rho + r * r - 2.0 * rho * r * std::cos(theta);
      return s(std::sqrt(std::max(d2, 0.0)));
    };
    return 2.0 * rho * integrate(arc, 0.0, theta_max, quad, "K_c angular");
  };
  return integrate(ring, r, rho_max, quad, "K_c radial");
}

double centred_sensing_integral(const SensingKernel& s, double r, double outer, double trunc,
                                const QuadratureSpec& quad)
{
  const double rho_max = std::min(outer, trunc);
  if (!(rho_max > r))
    return 0.0;
  auto ring = [&](double rho) { return 2.0 * kPi * rho * s(rho); };
  return integrate(ring, r, rho_max, quad, "K_r radial");
}

} // namespace

ExclusionIntegrals exclusion_integrals(const SystemParams& p, double r_c, const QuadratureSpec& quad,
                                       const FieldExtent& field)
{
  validate(quad);
  if (r_c < 0.0)
    throw DomainError("exclusion integrals require r_c >= 0");

  const auto dens = derive_intensities(p);
  const SensingKernel s(p);
  const double trunc = sensing_truncation_radius(p, quad);

  ExclusionIntegrals k;
  const double radar_intensity = p.eta * dens.lambda_r_prime;
  if (radar_intensity > 0.0)
    k.K_r = radar_intensity * centred_sensing_integral(s, r_c, field.outer_radius, trunc, quad);
  if (dens.lambda_c > 0.0)
    k.K_c = dens.lambda_c * shifted_sensing_integral(s, r_c, field.outer_radius, trunc, quad);
  return k;
}

double medium_access_probability(const SystemParams& p, const QuadratureSpec& quad, const FieldExtent& field)
{
  p.validate();
  validate(quad);
  const auto dens = derive_intensities(p);
  if (!(dens.lambda_c > 0.0))
    return 1.0; // no contending communication nodes

  const double r_max = link_distance_limit(dens.lambda_c, quad, field);
  auto integrand = [&](double r) {
    const double pdf = nn_distance_pdf(dens.lambda_c, r);
    if (pdf == 0.0)
      return 0.0;
    const auto k = exclusion_integrals(p, r, quad, field);
    return contention_factor(k.K_c) * std::exp(-k.K_r) * pdf;
  };
  double q = integrate(integrand, 0.0, r_max, quad, "q_w link distance");
  if (!field.infinite())
    q /= -std::expm1(-dens.lambda_c * kPi * r_max * r_max);
  return std::clamp(q, 0.0, 1.0);
}

} // namespace jcas::analytic
