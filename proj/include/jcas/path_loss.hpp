#pragma once

namespace jcas
{

/// Linear-scale power-law attenuation l(d) = L0 * d^alpha, d in metres.
struct PathLossModel
{
  double L0 = 1.0;
  double alpha = 3.0;

  /// Free-space reference at 1 m: L0 = (4 pi f_c / c)^2.
  static PathLossModel free_space_reference(double f_c, double alpha);

  double operator()(double d) const;
};

/// Throws DomainError for d <= 0.
double path_loss_linear(const PathLossModel& model, double d);

} // namespace jcas
