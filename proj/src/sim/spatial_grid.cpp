#include "jcas/sim/spatial_grid.hpp"

#include "jcas/errors.hpp"

#include <algorithm>
#include <cmath>

namespace jcas::sim
{

SpatialGrid::SpatialGrid(const std::vector<Vec2>& points, double cell) : points_(points), cell_(cell)
{
  if (!(cell > 0.0))
    throw DomainError("grid cell size must be positive");
  if (points_.empty())
  {
    start_.assign(2, 0);
    return;
  }
  double x1 = points_[0].x, y1 = points_[0].y;
  x0_ = x1;
  y0_ = y1;
  for (const auto& p : points_)
  {
    x0_ = std::min(x0_, p.x);
    y0_ = std::min(y0_, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  nx_ = static_cast<int>((x1 - x0_) / cell_) + 1;
  ny_ = static_cast<int>((y1 - y0_) / cell_) + 1;

  const auto n_cells = static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_);
  std::vector<std::uint32_t> cell_of(points_.size());
  start_.assign(n_cells + 1, 0);
  for (std::size_t i = 0; i < points_.size(); ++i)
  {
    const auto c = static_cast<std::size_t>(cell_y(points_[i].y)) * static_cast<std::size_t>(nx_) +
                   static_cast<std::size_t>(cell_x(points_[i].x));
    cell_of[i] = static_cast<std::uint32_t>(c);
    ++start_[c + 1];
  }
  for (std::size_t c = 0; c < n_cells; ++c)
    start_[c + 1] += start_[c];
  order_.resize(points_.size());
  auto fill = start_;
  for (std::size_t i = 0; i < points_.size(); ++i)
    order_[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
}

int SpatialGrid::cell_x(double x) const
{
  return std::clamp(static_cast<int>(std::floor((x - x0_) / cell_)), -1, nx_);
}

int SpatialGrid::cell_y(double y) const
{
  return std::clamp(static_cast<int>(std::floor((y - y0_) / cell_)), -1, ny_);
}

} // namespace jcas::sim
