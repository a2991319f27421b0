#pragma once

#include <cstdint>
#include <random>

namespace jcas::sim
{

/// Purposes that own separate random streams.
enum class Stream : std::uint64_t
{
  count = 1,
  position,
  mode,
  mark,
  duty,
  offset,
  rx_angle,
  sensing,
  beam,
  fading,
  slot_activity,
  radar_layer,
  replication,
};

std::uint64_t splitmix64(std::uint64_t x);

/// Order-dependent 64-bit combination.
std::uint64_t mix(std::uint64_t a, std::uint64_t b);

template <class... Rest>
std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c, Rest... rest)
{
  return mix(mix(a, b), c, static_cast<std::uint64_t>(rest)...);
}

inline std::uint64_t mix(std::uint64_t a, Stream s) { return mix(a, static_cast<std::uint64_t>(s)); }

/// Uniform in [0, 1) from the top 53 bits of a hashed key.
double hash_uniform(std::uint64_t key);

/// Exponential(mu) variate by inversion of a uniform in [0, 1).
double exponential_from_uniform(double u, double mu);

/// Sequential generator for one purpose of one replication.
std::mt19937_64 make_stream(std::uint64_t seed, Stream purpose);

} // namespace jcas::sim
