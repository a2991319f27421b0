#include "jcas/sim/h1_table.hpp"

#include "jcas/errors.hpp"
#include "jcas/sim/metrics.hpp"

#include <cmath>

namespace jcas::sim
{

analytic::H1Table estimate_h1_table(const SystemParams& p, int n_reps, std::uint64_t seed, const SimOptions& opts,
                                    const H1Binning& bins)
{
  if (!(bins.bin_width > 0.0 && bins.max_distance > bins.bin_width))
    throw DomainError("invalid h1 binning");
  const auto n_bins = static_cast<std::size_t>(std::ceil(bins.max_distance / bins.bin_width));
  std::vector<double> hits(n_bins, 0.0), seen(n_bins, 0.0);

  for (int r = 0; r < n_reps; ++r)
  {
    const auto t = sample_typical_link(p, replication_seed(seed, static_cast<std::uint64_t>(r)), opts);
    if (!t)
      continue;
    const Vec2 tx = t->nodes.nodes[t->tx].position;
    for (std::uint32_t j = 0; j < t->nodes.nodes.size(); ++j)
    {
      const auto& n = t->nodes.nodes[j];
      if (j == t->tx || n.mode != Mode::comm || norm(n.position) > opts.field_radius)
        continue;
      const double d = distance(n.position, tx);
      const auto b = static_cast<std::size_t>(d / bins.bin_width);
      if (b >= n_bins)
        continue;
      seen[b] += 1.0;
      hits[b] += t->interferers[j];
    }
  }

  std::vector<double> d{0.0}, v;
  double last = 1.0;
  for (std::size_t b = 0; b < n_bins; ++b)
  {
    if (seen[b] > 0.0)
      last = hits[b] / seen[b];
    if (b == 0)
      v.push_back(last);
    d.push_back((static_cast<double>(b) + 0.5) * bins.bin_width);
    v.push_back(last);
  }
  return analytic::H1Table(std::move(d), std::move(v));
}

} // namespace jcas::sim
