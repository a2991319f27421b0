#include "jcas/analytic/quadrature.hpp"

namespace jcas::analytic
{

void validate(const QuadratureSpec& spec)
{
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0))
    throw DomainError("quadrature tolerances must be positive");
  if (spec.truncation_radius < 0.0)
    throw DomainError("truncation radius must be >= 0");
  if (spec.max_panels < 1)
    throw DomainError("max_panels must be >= 1");
}

} // namespace jcas::analytic
