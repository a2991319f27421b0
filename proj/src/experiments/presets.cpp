#include "jcas/experiments/presets.hpp"

#include <stdexcept>

namespace jcas::experiments
{

std::vector<std::string> preset_names()
{
  return {"fig3", "fig4", "fig5", "fig6"};
}

SweepConfig figure_preset(const std::string& name)
{
  SweepConfig c;
  if (name == "fig3" || name == "fig5")
  {
    c.tau_list = {0.25};
    c.epsilon_list = {0.25, 0.5, 0.75};
  }
  else if (name == "fig4")
  {
    c.tau_list = {0.25, 0.5, 0.75};
    c.epsilon_list = {0.25};
  }
  else if (name == "fig6")
  {
    c.density_grid = {1e-2, 1e-1, 1.0};
    c.tau_list = {0.25};
    c.epsilon_list = {0.25};
    c.eta_list.clear();
    for (int i = 1; i <= 10; ++i)
      c.eta_list.push_back(i / 10.0);
  }
  else
    throw std::invalid_argument("unknown preset '" + name + "'");
  c.validate();
  return c;
}

} // namespace jcas::experiments
