#pragma once

#include "jcas/analytic/quadrature.hpp"
#include "jcas/geometry.hpp"
#include "jcas/params.hpp"

#include <atomic>
#include <memory>
#include <vector>

namespace jcas::analytic
{

/**
 * Tabulated probability that a communication node at distance d from an active
 * transmitter is itself transmitting. Linear interpolation between grid points;
 * lookups outside the grid clamp to the boundary value and print one warning.
 */
class H1Table
{
public:
  H1Table() = default;
  H1Table(std::vector<double> distances, std::vector<double> values);

  double operator()(double d) const;

  const std::vector<double>& distances() const { return d_; }
  const std::vector<double>& values() const { return v_; }
  bool empty() const { return d_.empty(); }
  double far_value() const { return v_.back(); }
  double max_distance() const { return d_.back(); }

private:
  std::vector<double> d_;
  std::vector<double> v_;
  std::shared_ptr<std::atomic<bool>> warned_ = std::make_shared<std::atomic<bool>>(false);
};

struct H1Strategy
{
  enum class Kind
  {
    independent,
    monte_carlo_table
  };

  Kind kind = Kind::independent;
  H1Table table;

  static H1Strategy independent() { return {}; }
  static H1Strategy from_table(H1Table t) { return {Kind::monte_carlo_table, std::move(t)}; }
};

/// h1 at location x, with the receiver at the origin and the transmitter at (r_c, 0).
double h1_conditional_map(const H1Strategy& strategy, double q_w, double r_c, Vec2 x);

/// Integral of u T / (u^alpha + T) over [a, b]; b may be infinite.
double interference_kernel_integral(double T, double alpha, double a, double b, const QuadratureSpec& quad = {});

struct SuccessFactors
{
  double noise = 1.0;
  double radar = 1.0;
  double comm = 1.0;

  double product() const { return noise * radar * comm; }
};

/// The three factors of the success integrand at link distance r.
SuccessFactors success_factors(const SystemParams& p, double q_w, double r, const H1Strategy& strategy,
                               const QuadratureSpec& quad = {}, const FieldExtent& field = {});

/// P(SINR >= T) averaged over the nearest-neighbour link distance.
double success_probability(const SystemParams& p, double q_w, const H1Strategy& strategy = {},
                           const QuadratureSpec& quad = {}, const FieldExtent& field = {});

/// Successful transmissions per m^2 per slot: (1 - epsilon) lambda_c q_w P_s.
double throughput_density(const SystemParams& p, double q_w, double P_s);

} // namespace jcas::analytic
