#pragma once

#include "jcas/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace jcas::sim
{

/// Uniform bucket grid over a point set.
class SpatialGrid
{
public:
  SpatialGrid(const std::vector<Vec2>& points, double cell);

  /**
   * Calls f(index, distance) for every point within radius of centre, visiting
   * square rings of cells outwards so near points come first. Stops as soon as
   * f returns false. Returns false if stopped early.
   */
  template <class F>
  bool visit_within(Vec2 centre, double radius, F&& f) const
  {
    if (points_.empty())
      return true;
    const int cx = cell_x(centre.x);
    const int cy = cell_y(centre.y);
    const int rings = static_cast<int>(std::ceil(radius / cell_)) + 1;
    const double r2 = radius * radius;
    for (int k = 0; k <= rings; ++k)
    {
      for (int gy = cy - k; gy <= cy + k; ++gy)
      {
        if (gy < 0 || gy >= ny_)
          continue;
        const bool edge_row = (gy == cy - k || gy == cy + k);
        const int step = edge_row ? 1 : 2 * k;
        for (int gx = cx - k; gx <= cx + k; gx += (step == 0 ? 1 : step))
        {
          if (gx < 0 || gx >= nx_)
            continue;
          const auto c = static_cast<std::size_t>(gy) * static_cast<std::size_t>(nx_) + static_cast<std::size_t>(gx);
          for (std::uint32_t s = start_[c]; s < start_[c + 1]; ++s)
          {
            const std::uint32_t i = order_[s];
            const double dx = points_[i].x - centre.x;
            const double dy = points_[i].y - centre.y;
            const double d2 = dx * dx + dy * dy;
            if (d2 <= r2 && !f(i, std::sqrt(d2)))
              return false;
          }
        }
      }
    }
    return true;
  }

private:
  int cell_x(double x) const;
  int cell_y(double y) const;

  std::vector<Vec2> points_;
  double cell_;
  double x0_ = 0.0, y0_ = 0.0;
  int nx_ = 1, ny_ = 1;
  std::vector<std::uint32_t> start_;
  std::vector<std::uint32_t> order_;
};

} // namespace jcas::sim
