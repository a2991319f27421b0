#include "jcas/sim/random.hpp"

#include <cmath>

namespace jcas::sim
{

std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b)
{
  return splitmix64(splitmix64(a) ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2)));
}

double hash_uniform(std::uint64_t key)
{
  return static_cast<double>(splitmix64(key) >> 11) * 0x1.0p-53;
}

double exponential_from_uniform(double u, double mu)
{
  return -std::log1p(-u) / mu;
}

std::mt19937_64 make_stream(std::uint64_t seed, Stream purpose)
{
  return std::mt19937_64(mix(seed, purpose));
}

} // namespace jcas::sim
