#include "jcas/path_loss.hpp"

#include "jcas/errors.hpp"
#include "jcas/params.hpp"

#include <cmath>

namespace jcas
{

PathLossModel PathLossModel::free_space_reference(double f_c, double alpha)
{
  const double k = 4.0 * kPi * f_c / kSpeedOfLight;
  return {k * k, alpha};
}

double PathLossModel::operator()(double d) const
{
  return L0 * std::pow(d, alpha);
}

double path_loss_linear(const PathLossModel& model, double d)
{
  if (!(d > 0.0))
    throw DomainError("path loss requires a positive distance");
  return model(d);
}

} // namespace jcas
