#pragma once

#include <numbers>

namespace jcas
{

inline constexpr double kSpeedOfLight = 299792458.0; // m/s
inline constexpr double kPi = std::numbers::pi;

/// Rectangular deployment area, origin at its lower-left corner.
struct Window
{
  double width = 150.0;  // m
  double height = 150.0; // m

  double area() const { return width * height; }
  bool operator==(const Window&) const = default;
};

/**
 * Every scalar of the network model. Powers are stored in dBm / dB as they are
 * usually quoted; the accessors return linear values in W or ratios.
 *
 * Defaults follow the reference scenario: M = 100 slots, 23 dBm transmit power,
 * 10 m^2 RCS, P_fa = 0.1, T = 5 dB, -62 dBm sensing threshold, path-loss
 * exponent 3, 6 GHz carrier, 20 m links, 150 x 150 m^2 area.
 */
struct SystemParams
{
  double lambda = 0.01;      // nodes / m^2
  double tau = 0.25;         // fraction of nodes in radar mode
  int M = 100;               // slots per cycle
  int M_r = 25;              // radar slots per cycle
  double eta = 1.0;          // radar duty cycle
  double phi = 2.0 * kPi;    // radar beam width, rad
  double P_tx_dbm = 23.0;    // transmit power
  double f_c = 6.0e9;        // carrier, Hz
  double sigma_rcs = 10.0;   // m^2
  double P_fa = 0.1;         // target false-alarm probability
  double T_db = 5.0;         // SINR decoding threshold
  double P_th_dbm = -62.0;   // carrier-sense / detection threshold
  double alpha = 3.0;        // communication path-loss exponent
  double r_c = 20.0;         // transmitter-receiver distance, m
  double noise_dbm = -94.0;  // noise power
  double mu = 1.0;           // Rayleigh fading rate (power ~ Exp(mu))
  Window window{};

  double epsilon() const { return static_cast<double>(M_r) / static_cast<double>(M); }
  double P_tx() const;
  double P_th() const;
  double noise() const;
  double T() const;
  /// Main-beam gain G = 4 pi / phi^2.
  double antenna_gain() const;
  /// Probability phi / 2 pi that a randomly oriented beam covers a given direction.
  double beam_fraction() const;

  /// Throws DomainError naming the first violated invariant.
  void validate() const;

  bool operator==(const SystemParams&) const = default;
};

struct DerivedIntensities
{
  double lambda_r = 0.0;        // tau * lambda
  double lambda_c = 0.0;        // (1 - tau) * lambda
  double lambda_r_prime = 0.0;  // (phi / 2 pi) * lambda_r
  double lambda_r_active = 0.0; // eta * lambda_r
};

DerivedIntensities derive_intensities(const SystemParams& p);

} // namespace jcas
