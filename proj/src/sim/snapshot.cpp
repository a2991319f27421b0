#include "jcas/sim/snapshot.hpp"

#include "jcas/errors.hpp"
#include "jcas/sim/random.hpp"

#include <cmath>

namespace jcas::sim
{

double Region::area() const
{
  return shape == Shape::rect ? window.area() : kPi * radius * radius;
}

bool Region::contains(Vec2 x) const
{
  if (shape == Shape::disk)
    return x.x * x.x + x.y * x.y <= radius * radius;
  return x.x >= offset.x && x.x <= offset.x + window.width && x.y >= offset.y && x.y <= offset.y + window.height;
}

Region Region::inset(double margin) const
{
  Region r = *this;
  if (shape == Shape::disk)
  {
    r.radius -= margin;
    if (!(r.radius > 0.0))
      throw DomainError("guard margin leaves an empty interior");
    return r;
  }
  r.window.width -= 2.0 * margin;
  r.window.height -= 2.0 * margin;
  if (!(r.window.width > 0.0 && r.window.height > 0.0))
    throw DomainError("guard margin leaves an empty interior");
  r.offset = {offset.x + margin, offset.y + margin};
  return r;
}

Snapshot sample_snapshot(const SystemParams& p, const Region& region, std::uint64_t seed)
{
  if (!(region.area() > 0.0))
    throw DomainError("snapshot region must have positive area");

  Snapshot s;
  s.region = region;
  s.seed = seed;

  auto count_rng = make_stream(seed, Stream::count);
  const double mean = p.lambda * region.area();
  const std::size_t n = mean > 0.0 ? std::poisson_distribution<std::uint64_t>(mean)(count_rng) : 0;

  auto pos_rng = make_stream(seed, Stream::position);
  auto mode_rng = make_stream(seed, Stream::mode);
  auto mark_rng = make_stream(seed, Stream::mark);
  auto duty_rng = make_stream(seed, Stream::duty);
  auto offset_rng = make_stream(seed, Stream::offset);
  auto angle_rng = make_stream(seed, Stream::rx_angle);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> slot(0, p.M - 1);

  s.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    Node node;
    node.id = static_cast<std::uint32_t>(i);
    const double u = unit(pos_rng);
    const double v = unit(pos_rng);
    if (region.shape == Region::Shape::rect)
      node.position = {region.offset.x + u * region.window.width, region.offset.y + v * region.window.height};
    else
    {
      const double rho = region.radius * std::sqrt(u);
      node.position = {rho * std::cos(2.0 * kPi * v), rho * std::sin(2.0 * kPi * v)};
    }
    node.mode = unit(mode_rng) < p.tau ? Mode::radar : Mode::comm;
    node.mark = unit(mark_rng);
    node.duty_active = unit(duty_rng) < p.eta;
    node.cycle_offset = slot(offset_rng);
    const double theta = 2.0 * kPi * unit(angle_rng);
    node.rx_position = {node.position.x + p.r_c * std::cos(theta), node.position.y + p.r_c * std::sin(theta)};

    (node.mode == Mode::radar ? s.n_radar : s.n_comm) += 1;
    s.nodes.push_back(node);
  }
  return s;
}

Snapshot sample_snapshot(const SystemParams& p, std::uint64_t seed)
{
  return sample_snapshot(p, Region::rect(p.window), seed);
}

} // namespace jcas::sim
