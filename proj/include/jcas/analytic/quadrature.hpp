#pragma once

#include "jcas/errors.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

namespace jcas::analytic
{

struct QuadratureSpec
{
  double abs_tol = 1e-9;
  double rel_tol = 1e-8;
  /// Outer cutoff (m) for the super-exponentially decaying sensing integrals.
  /// Zero selects a radius where the kernel falls below abs_tol * 1e-6.
  double truncation_radius = 0.0;
  int max_panels = 4000;
};

/// Outer radius of the interference field. Infinite reproduces the plane; a
/// finite radius matches a simulation disk centred on the receiver.
struct FieldExtent
{
  double outer_radius = std::numeric_limits<double>::infinity();

  bool infinite() const { return !std::isfinite(outer_radius); }
};

struct QuadratureResult
{
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
};

namespace detail
{

struct Panel
{
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gauss_kronrod_21(F& f, double a, double b)
{
  using rule = boost::math::quadrature::gauss_kronrod<double, 21>;
  using gauss = boost::math::quadrature::gauss<double, 10>;
  const auto& x = rule::abscissa();
  const auto& wk = rule::weights();
  const auto& wg = gauss::weights();

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double kronrod = f0 * wk[0];
  double gauss_sum = 0.0;
  for (std::size_t i = 1; i < x.size(); ++i)
  {
    const double pair = f(mid - half * x[i]) + f(mid + half * x[i]);
    kronrod += pair * wk[i];
    if (i % 2 == 1)
      gauss_sum += pair * wg[i / 2];
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss_sum) * half)};
}

} // namespace detail

/**
 * Globally adaptive Gauss-Kronrod (G10/K21) on a finite interval. The panel with
 * the largest error estimate is bisected until the summed estimate drops below
 * max(abs_tol, rel_tol * |value|). Throws QuadratureError when the panel budget
 * runs out first.
 */
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec, const char* what)
{
  if (!(a < b))
    return {};

  std::priority_queue<detail::Panel> heap;
  auto first = detail::gauss_kronrod_21(f, a, b);
  double value = first.value;
  double error = first.error;
  heap.push(first);
  int panels = 1;

  auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(value)); };
  while (error > target())
  {
    if (panels >= spec.max_panels)
      throw QuadratureError(std::string("quadrature did not converge: ") + what, value, error, panels);
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    auto left = detail::gauss_kronrod_21(f, worst.a, mid);
    auto right = detail::gauss_kronrod_21(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!heap.empty())
  {
    value += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  return {value, error, panels};
}

template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec, const char* what)
{
  return integrate_adaptive(std::forward<F>(f), a, b, spec, what).value;
}

} // namespace jcas::analytic

namespace jcas::analytic
{
/// Throws DomainError unless both tolerances are positive.
void validate(const QuadratureSpec& spec);
} // namespace jcas::analytic
