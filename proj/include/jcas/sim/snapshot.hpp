#pragma once

#include "jcas/geometry.hpp"
#include "jcas/params.hpp"

#include <cstdint>
#include <vector>

namespace jcas::sim
{

enum class Mode : std::uint8_t
{
  radar,
  comm
};

/// Sampling region: a window with its lower-left corner at the origin, or a
/// disk centred on the origin.
struct Region
{
  enum class Shape
  {
    rect,
    disk
  };

  Shape shape = Shape::rect;
  Window window{};
  double radius = 0.0;

  static Region rect(Window w) { return {Shape::rect, w, 0.0}; }
  static Region disk(double r) { return {Shape::disk, {}, r}; }

  double area() const;
  bool contains(Vec2 x) const;
  /// Region shrunk by margin on every side; throws DomainError when empty.
  Region inset(double margin) const;
  /// Lower-left corner offset of an inset rectangle, zero otherwise.
  Vec2 origin() const { return offset; }

  Vec2 offset{};
};

struct Node
{
  std::uint32_t id = 0;
  Vec2 position{};
  Mode mode = Mode::comm;
  double mark = 0.0;
  bool duty_active = false;
  int cycle_offset = 0;
  Vec2 rx_position{};
};

struct Snapshot
{
  Region region{};
  std::vector<Node> nodes;
  std::uint64_t seed = 0;
  std::size_t n_radar = 0;
  std::size_t n_comm = 0;
};

/**
 * One PPP realization. Every node draws its mark, duty state, cycle offset and
 * receiver angle from its own stream whatever its mode, so changing tau or eta
 * under a fixed seed changes only the affected attributes.
 */
Snapshot sample_snapshot(const SystemParams& p, const Region& region, std::uint64_t seed);

/// Over the params' own window.
Snapshot sample_snapshot(const SystemParams& p, std::uint64_t seed);

} // namespace jcas::sim
