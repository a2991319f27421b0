#pragma once

#include <stdexcept>
#include <string>

namespace jcas
{

/// Argument outside the domain of a model function (negative distance, bad slot counts, ...).
class DomainError : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// The requested false-alarm target cannot be met (P_fa >= collision factor).
class InfeasibleTargetError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public std::runtime_error
{
public:
  QuadratureError(const std::string& what, double estimate, double error_estimate, int panels)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate), panels_(panels)
  {
  }

  double estimate() const { return estimate_; }
  double error_estimate() const { return error_estimate_; }
  int panels() const { return panels_; }

private:
  double estimate_;
  double error_estimate_;
  int panels_;
};

} // namespace jcas
