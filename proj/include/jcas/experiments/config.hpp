#pragma once

#include "jcas/params.hpp"
#include "jcas/sim/options.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jcas::experiments
{

enum class Engines
{
  analytic,
  sim,
  both
};

enum class H1Choice
{
  independent,
  mc_table
};

/**
 * A sweep over the Cartesian product tau_list x epsilon_list x eta_list x
 * density_grid, each point evaluated on every window. Scalars of base not
 * covered by a list stay fixed.
 */
struct SweepConfig
{
  SystemParams base{};
  std::vector<Window> windows{{150.0, 150.0}, {200.0, 200.0}};
  std::vector<double> density_grid = default_density_grid();
  std::vector<double> tau_list{0.25, 0.5, 0.75};
  std::vector<double> epsilon_list{0.25};
  std::vector<double> eta_list{1.0};
  int n_reps = 1000;
  std::uint64_t seed = 1;
  Engines engines = Engines::both;
  H1Choice h1_strategy = H1Choice::independent;
  double guard_margin = 20.0;
  sim::InterferenceModel interference = sim::InterferenceModel::full_sum;
  double range_ceiling = 1000.0;
  int victims_per_rep = 20;
  int workers = 1;

  /// 25 log-spaced densities over [1e-6, 1].
  static std::vector<double> default_density_grid();

  /// Throws ConfigError naming the offending key.
  void validate() const;

  bool operator==(const SweepConfig&) const = default;
};

class ConfigError : public std::runtime_error
{
public:
  ConfigError(int line, std::string key, const std::string& message);

  int line() const { return line_; }
  const std::string& key() const { return key_; }

private:
  int line_;
  std::string key_;
};

/// M_r for a slot fraction; throws DomainError unless epsilon * M is integral.
int radar_slots(int M, double epsilon);

/// Flat "key = value" lines, lists comma-separated, '#' starts a comment.
SweepConfig parse_config(std::string_view text);

/// Applies the keys of text on top of cfg.
void apply_config(SweepConfig& cfg, std::string_view text);

/// Every key, with values that reparse exactly.
std::string serialize_config(const SweepConfig& cfg);

SweepConfig load_config(const std::string& path);

} // namespace jcas::experiments
