#pragma once

namespace jcas
{

// Power and ratio conversions. dBm is referenced to 1 mW.
double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);
double db_to_linear(double db);
double linear_to_db(double linear);

} // namespace jcas
