#pragma once

#include <cstddef>
#include <vector>

namespace jcas::sim
{

struct Estimate
{
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;

  double ci95_low() const { return mean - 1.96 * std_error; }
  double ci95_high() const { return mean + 1.96 * std_error; }
};

/// Sample mean and standard error of the mean.
Estimate mean_estimate(const std::vector<double>& samples);

/**
 * Ratio of sums sum(num) / sum(den) over replications, with a delta-method
 * standard error. Replications with den = 0 still count toward n; the mean is
 * NaN when every den is 0.
 */
Estimate ratio_estimate(const std::vector<double>& num, const std::vector<double>& den);

/// Mean of per-batch statistics and their standard error.
Estimate batch_estimate(const std::vector<double>& batch_values);

} // namespace jcas::sim
