#include "jcas/sim/estimate.hpp"

#include "jcas/errors.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace jcas::sim
{

Estimate mean_estimate(const std::vector<double>& samples)
{
  Estimate e;
  e.n = samples.size();
  if (e.n == 0)
    return e;
  e.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(e.n);
  if (e.n > 1)
  {
    double ss = 0.0;
    for (double x : samples)
      ss += (x - e.mean) * (x - e.mean);
    e.std_error = std::sqrt(ss / static_cast<double>(e.n - 1) / static_cast<double>(e.n));
  }
  return e;
}

Estimate ratio_estimate(const std::vector<double>& num, const std::vector<double>& den)
{
  if (num.size() != den.size())
    throw DomainError("ratio estimate needs paired samples");
  Estimate e;
  e.n = num.size();
  const double sx = std::accumulate(num.begin(), num.end(), 0.0);
  const double sy = std::accumulate(den.begin(), den.end(), 0.0);
  if (e.n == 0 || sy == 0.0)
  {
    e.mean = std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  e.mean = sx / sy;
  if (e.n > 1)
  {
    const double n = static_cast<double>(e.n);
    const double ybar = sy / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < e.n; ++i)
    {
      const double r = num[i] - e.mean * den[i];
      ss += r * r;
    }
    e.std_error = std::sqrt(ss / (n - 1.0) / n) / ybar;
  }
  return e;
}

Estimate batch_estimate(const std::vector<double>& batch_values)
{
  return mean_estimate(batch_values);
}

} // namespace jcas::sim
