#include "jcas/units.hpp"

#include <cmath>

namespace jcas
{

double dbm_to_watt(double dbm)
{
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watt_to_dbm(double watt)
{
  return 10.0 * std::log10(watt) + 30.0;
}

double db_to_linear(double db)
{
  return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear)
{
  return 10.0 * std::log10(linear);
}

} // namespace jcas
