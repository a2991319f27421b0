#pragma once

#include "jcas/experiments/config.hpp"

#include <string>
#include <vector>

namespace jcas::experiments
{

/**
 * fig3: radar range against density, tau = 0.25, epsilon in {0.25, 0.5, 0.75}.
 * fig4: throughput against density, tau in {0.25, 0.5, 0.75}, epsilon = 0.25.
 * fig5: throughput against density, tau = 0.25, epsilon in {0.25, 0.5, 0.75}.
 * fig6: duty cycle, lambda in {1e-2, 1e-1, 1}, eta in {0.1, ..., 1}.
 * Throws std::invalid_argument for other names.
 */
SweepConfig figure_preset(const std::string& name);

std::vector<std::string> preset_names();

} // namespace jcas::experiments
