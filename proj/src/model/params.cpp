#include "jcas/params.hpp"

#include "jcas/errors.hpp"
#include "jcas/units.hpp"

#include <cmath>
#include <string>

namespace jcas
{

double SystemParams::P_tx() const { return dbm_to_watt(P_tx_dbm); }
double SystemParams::P_th() const { return dbm_to_watt(P_th_dbm); }
double SystemParams::noise() const { return dbm_to_watt(noise_dbm); }
double SystemParams::T() const { return db_to_linear(T_db); }
double SystemParams::antenna_gain() const { return 4.0 * kPi / (phi * phi); }
double SystemParams::beam_fraction() const { return phi / (2.0 * kPi); }

namespace
{
void require(bool ok, const char* what)
{
  if (!ok)
    throw DomainError(std::string("invalid SystemParams: ") + what);
}
} // namespace

void SystemParams::validate() const
{
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be >= 0");
  require(tau >= 0.0 && tau <= 1.0, "tau must lie in [0,1]");
  require(M >= 2, "M must be >= 2");
  require(M_r > 0 && M_r < M, "M_r must satisfy 0 < M_r < M");
  // eta = 0 is accepted as the radar-silent limit.
  require(eta >= 0.0 && eta <= 1.0, "eta must lie in [0,1]");
  require(phi > 0.0 && phi <= 2.0 * kPi + 1e-12, "phi must lie in (0, 2pi]");
  require(std::isfinite(P_tx_dbm), "P_tx_dbm must be finite");
  require(std::isfinite(P_th_dbm), "P_th_dbm must be finite");
  require(std::isfinite(noise_dbm), "noise_dbm must be finite");
  require(std::isfinite(T_db), "T_db must be finite");
  require(f_c > 0.0, "f_c must be > 0");
  require(sigma_rcs >= 0.0, "sigma_rcs must be >= 0");
  require(P_fa > 0.0 && P_fa < 1.0, "P_fa must lie in (0,1)");
  require(alpha > 2.0, "alpha must be > 2");
  require(r_c > 0.0, "r_c must be > 0");
  require(mu > 0.0, "mu must be > 0");
  require(window.width > 0.0 && window.height > 0.0, "window extent must be > 0");
}

DerivedIntensities derive_intensities(const SystemParams& p)
{
  DerivedIntensities d;
  d.lambda_r = p.tau * p.lambda;
  d.lambda_c = p.lambda - d.lambda_r;
  d.lambda_r_prime = p.beam_fraction() * d.lambda_r;
  d.lambda_r_active = p.eta * d.lambda_r;
  return d;
}

} // namespace jcas
