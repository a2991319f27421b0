#include "jcas/analytic/success.hpp"

#include "jcas/analytic/access.hpp"
#include "jcas/errors.hpp"
#include "jcas/path_loss.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

namespace jcas::analytic
{

H1Table::H1Table(std::vector<double> distances, std::vector<double> values)
    : d_(std::move(distances)), v_(std::move(values))
{
  if (d_.empty() || d_.size() != v_.size())
    throw DomainError("h1 table needs matching, non-empty distance and value grids");
  for (std::size_t i = 0; i < d_.size(); ++i)
  {
    if (!(v_[i] >= 0.0 && v_[i] <= 1.0))
      throw DomainError("h1 table values must lie in [0, 1]");
    if (i > 0 && !(d_[i] > d_[i - 1]))
      throw DomainError("h1 table distances must be strictly increasing");
  }
}

double H1Table::operator()(double d) const
{
  if (d < d_.front() || d > d_.back())
  {
    if (!warned_->exchange(true))
      std::clog << "warning: h1 table lookup at d=" << d << " m outside [" << d_.front() << ", " << d_.back()
                << "], clamping\n";
    return d < d_.front() ? v_.front() : v_.back();
  }
  const auto it = std::upper_bound(d_.begin(), d_.end(), d);
  if (it == d_.end())
    return v_.back();
  const auto i = static_cast<std::size_t>(it - d_.begin());
  const double w = (d - d_[i - 1]) / (d_[i] - d_[i - 1]);
  return v_[i - 1] + w * (v_[i] - v_[i - 1]);
}

double h1_conditional_map(const H1Strategy& strategy, double q_w, double r_c, Vec2 x)
{
  if (strategy.kind == H1Strategy::Kind::independent)
    return q_w;
  if (strategy.table.empty())
    throw DomainError("monte-carlo h1 strategy without a table");
  return strategy.table(distance(x, Vec2{r_c, 0.0}));
}

double interference_kernel_integral(double T, double alpha, double a, double b, const QuadratureSpec& quad)
{
  if (!(b > a))
    return 0.0;
  if (T == 0.0)
    return 0.0;
  auto f = [&](double u) { return u * T / (std::pow(u, alpha) + T); };

  // Beyond U the integrand expands as a geometric series in T u^-alpha <= 1/8.
  const double U = std::pow(8.0 * T, 1.0 / alpha);
  if (b <= U)
    return integrate(f, a, b, quad, "interference kernel");

  double head = 0.0;
  double lo = a;
  if (a < U)
  {
    head = integrate(f, a, U, quad, "interference kernel");
    lo = U;
  }
  double tail = 0.0;
  for (int k = 0; k < 200; ++k)
  {
    const double e = 2.0 - alpha * (k + 1);
    const double lo_term = std::pow(lo, e);
    const double hi_term = std::isfinite(b) ? std::pow(b, e) : 0.0;
    const double term = std::pow(T, k + 1) * (lo_term - hi_term) / (-e);
    tail += (k % 2 == 0) ? term : -term;
    if (std::abs(term) < 1e-17 * std::abs(tail))
      break;
  }
  return head + tail;
}

namespace
{

double noise_factor(const SystemParams& p, double r)
{
  const auto l = PathLossModel::free_space_reference(p.f_c, p.alpha);
  return std::exp(-p.mu * p.T() * l(r) * p.noise() / p.P_tx());
}

// Communication interferers with a distance-dependent h1 around the transmitter.
// The correction term is integrated in polar coordinates about the transmitter,
// so h1 depends on the radial variable only and each grid cell is smooth.
double comm_exponent_table(const SystemParams& p, double lambda_c, double r, const H1Table& h1,
                           const QuadratureSpec& quad, const FieldExtent& field)
{
  const double T = p.T();
  const double outer = field.outer_radius;
  const double far = h1.far_value();
  const double base = far * 2.0 * kPi * r * r * interference_kernel_integral(T, p.alpha, 1.0, outer / r, quad);

  const double v = T * std::pow(r, p.alpha);
  // Angular integral over the circle of radius d about the transmitter at (r, 0),
  // restricted to r < |x| <= outer.
  auto circle = [&](double d) {
    if (d <= 0.0)
      return 0.0;
    double psi_hi = d < 2.0 * r ? std::acos(-d / (2.0 * r)) : kPi;
    double psi_lo = 0.0;
    if (std::isfinite(outer))
    {
      const double c = (outer * outer - r * r - d * d) / (2.0 * r * d);
      if (c <= -1.0)
        return 0.0;
      if (c < 1.0)
        psi_lo = std::acos(c);
    }
    if (!(psi_hi > psi_lo))
      return 0.0;
    auto kernel = [&](double psi) {
      const double rho2 = r * r + d * d + 2.0 * r * d * std::cos(psi);
      return v / (std::pow(rho2, 0.5 * p.alpha) + v);
    };
    return 2.0 * integrate(kernel, psi_lo, psi_hi, quad, "h1 correction angular");
  };

  const auto& grid = h1.distances();
  QuadratureSpec piece = quad;
  piece.abs_tol = quad.abs_tol / static_cast<double>(grid.size());
  double corr = 0.0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k)
  {
    const double a = grid[k], b = grid[k + 1];
    if (h1.values()[k] == far && h1.values()[k + 1] == far)
      continue;
    auto f = [&](double d) { return (h1(d) - far) * d * circle(d); };
    corr += integrate(f, a, b, piece, "h1 correction radial");
  }
  return lambda_c * (base + corr);
}

} // namespace

SuccessFactors success_factors(const SystemParams& p, double q_w, double r, const H1Strategy& strategy,
                               const QuadratureSpec& quad, const FieldExtent& field)
{
  if (!(r > 0.0))
    throw DomainError("success factors require r > 0");
  if (!(q_w >= 0.0 && q_w <= 1.0))
    throw DomainError("q_w must lie in [0, 1]");
  const auto dens = derive_intensities(p);
  const double T = p.T();
  const double outer = field.outer_radius / r;

  SuccessFactors f;
  f.noise = noise_factor(p, r);

  const double radar_intensity = p.eta * dens.lambda_r_prime;
  if (radar_intensity > 0.0)
    f.radar = std::exp(-radar_intensity * 2.0 * kPi * r * r * interference_kernel_integral(T, p.alpha, 0.0, outer, quad));

  if (dens.lambda_c > 0.0)
  {
    double A_c = 0.0;
    if (strategy.kind == H1Strategy::Kind::independent)
      A_c = dens.lambda_c * q_w * 2.0 * kPi * r * r * interference_kernel_integral(T, p.alpha, 1.0, outer, quad);
    else
      A_c = comm_exponent_table(p, dens.lambda_c, r, strategy.table, quad, field);
    f.comm = std::exp(-A_c);
  }
  return f;
}

double success_probability(const SystemParams& p, double q_w, const H1Strategy& strategy, const QuadratureSpec& quad,
                           const FieldExtent& field)
{
  p.validate();
  validate(quad);
  const auto dens = derive_intensities(p);
  if (!(dens.lambda_c > 0.0))
  {
    // No link partner exists; report the value at the nominal link distance.
    return success_factors(p, q_w, p.r_c, strategy, quad, field).product();
  }
  const double r_max = link_distance_limit(dens.lambda_c, quad, field);
  auto integrand = [&](double r) {
    if (r <= 0.0)
      return 0.0;
    return success_factors(p, q_w, r, strategy, quad, field).product() * nn_distance_pdf(dens.lambda_c, r);
  };
  double ps = integrate(integrand, 0.0, r_max, quad, "P_s link distance");
  if (!field.infinite())
    ps /= -std::expm1(-dens.lambda_c * kPi * r_max * r_max);
  return std::clamp(ps, 0.0, 1.0);
}

double throughput_density(const SystemParams& p, double q_w, double P_s)
{
  if (!(q_w >= 0.0 && q_w <= 1.0) || !(P_s >= 0.0 && P_s <= 1.0))
    throw DomainError("throughput density needs probabilities in [0, 1]");
  return (1.0 - p.epsilon()) * derive_intensities(p).lambda_c * q_w * P_s;
}

} // namespace jcas::analytic
