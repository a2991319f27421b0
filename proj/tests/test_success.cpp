#include "jcas/analytic/access.hpp"
#include "jcas/analytic/radar.hpp"
#include "jcas/analytic/report.hpp"
#include "jcas/analytic/success.hpp"
#include "jcas/errors.hpp"
#include "jcas/path_loss.hpp"

#include <doctest.h>

#include <cmath>

using namespace jcas;
using namespace jcas::analytic;

TEST_CASE("interference kernel integral")
{
  const double T = std::pow(10.0, 0.5);
  CHECK(interference_kernel_integral(T, 3.0, 0.0, INFINITY) == doctest::Approx(2.6051415140426499).epsilon(1e-10));
  CHECK(interference_kernel_integral(T, 3.0, 1.0, INFINITY) == doctest::Approx(2.1581943465514945).epsilon(1e-10));
  // Closed form pi / alpha / sin(2 pi / alpha) T^(2/alpha) at another exponent.
  const double a = 4.0;
  CHECK(interference_kernel_integral(T, a, 0.0, INFINITY) ==
        doctest::Approx(std::pow(T, 2.0 / a) * (kPi / a) / std::sin(2.0 * kPi / a)).epsilon(1e-10));
  // Tail series against plain quadrature on a finite range.
  const double direct = integrate([&](double u) { return u * T / (u * u * u + T); }, 2.0, 80.0, {}, "test");
  CHECK(interference_kernel_integral(T, 3.0, 2.0, 80.0) == doctest::Approx(direct).epsilon(1e-10));
  CHECK(interference_kernel_integral(0.0, 3.0, 0.0, INFINITY) == 0.0);
}

TEST_CASE("success probability at pinned points")
{
  SystemParams a;
  CHECK(success_probability(a, medium_access_probability(a)) == doctest::Approx(0.34657311065576755).epsilon(1e-8));

  SystemParams b;
  b.lambda = 1e-3;
  b.tau = 0.5;
  b.eta = 0.5;
  b.phi = kPi;
  CHECK(success_probability(b, medium_access_probability(b)) == doctest::Approx(0.16634352846022335).epsilon(1e-8));

  SystemParams c;
  c.lambda = 0.05;
  c.tau = 0.75;
  c.eta = 0.3;
  c.alpha = 3.5;
  c.T_db = 0.0;
  CHECK(success_probability(c, medium_access_probability(c)) == doctest::Approx(0.37391759482384778).epsilon(1e-8));
}

TEST_CASE("success probability limits")
{
  SystemParams p;
  p.T_db = -120.0;
  CHECK(success_probability(p, 0.5) > 1.0 - 1e-6);

  p = {};
  p.noise_dbm = 60.0;
  CHECK(success_probability(p, 0.5) < 1e-9);
}

TEST_CASE("success probability is monotone")
{
  auto ladder = [](auto set, std::initializer_list<double> values) {
    double prev = 2.0;
    for (double v : values)
    {
      SystemParams p;
      set(p, v);
      const double ps = success_probability(p, medium_access_probability(p));
      CHECK(ps <= prev + 1e-12);
      prev = ps;
    }
  };
  ladder([](SystemParams& p, double v) { p.T_db = v; }, {-10.0, 0.0, 5.0, 10.0, 20.0});
  // With q_w and the link length held fixed, duty cycle and density only add
  // interferers.
  double prev = 2.0;
  for (double eta : {0.0, 0.25, 0.5, 1.0})
  {
    SystemParams p;
    p.eta = eta;
    const double ps = success_probability(p, 0.3);
    CHECK(ps <= prev + 1e-12);
    prev = ps;
  }
  prev = 2.0;
  for (double lam : {1e-4, 1e-3, 1e-2, 1e-1})
  {
    SystemParams p;
    p.lambda = lam;
    const double ps = success_factors(p, 0.3, 20.0, H1Strategy::independent()).product();
    CHECK(ps <= prev + 1e-12);
    prev = ps;
  }
}

TEST_CASE("throughput density")
{
  SystemParams p;
  p.lambda = 0.4;
  p.tau = 0.25;
  CHECK(throughput_density(p, 0.5, 0.8) == doctest::Approx(0.09).epsilon(1e-14));
  CHECK(throughput_density(p, 0.0, 0.8) == 0.0);
  p.M_r = 99;
  CHECK(throughput_density(p, 1.0, 1.0) == doctest::Approx(0.01 * 0.3).epsilon(1e-14));
  CHECK_THROWS_AS(throughput_density(p, 1.5, 0.5), DomainError);
}

TEST_CASE("h1 table lookup")
{
  H1Table t({0.0, 10.0, 20.0}, {0.0, 0.5, 0.3});
  CHECK(t(0.0) == 0.0);
  CHECK(t(10.0) == 0.5);
  CHECK(t(5.0) == doctest::Approx(0.25));
  CHECK(t(15.0) == doctest::Approx(0.4));
  CHECK(t(50.0) == 0.3); // clamped, warns once
  CHECK(t(-1.0) == 0.0);
  CHECK_THROWS_AS(H1Table({0.0, 1.0}, {0.5}), DomainError);
  CHECK_THROWS_AS(H1Table({0.0, 1.0}, {0.5, 1.5}), DomainError);
  CHECK_THROWS_AS(H1Table({1.0, 1.0}, {0.5, 0.5}), DomainError);
}

TEST_CASE("h1 strategies")
{
  const auto ind = H1Strategy::independent();
  CHECK(h1_conditional_map(ind, 0.37, 20.0, {100.0, -3.0}) == 0.37);
  CHECK(h1_conditional_map(ind, 1.0, 20.0, {1.0, 1.0}) == 1.0);

  const auto tab = H1Strategy::from_table(H1Table({0.0, 10.0, 20.0}, {0.1, 0.6, 0.4}));
  // Receiver at origin, transmitter at (20, 0): (30, 0) is 10 m from it.
  CHECK(h1_conditional_map(tab, 0.37, 20.0, {30.0, 0.0}) == 0.6);
  CHECK(h1_conditional_map(tab, 0.37, 20.0, {20.0, 20.0}) == 0.4);

  // With no contenders the measured table is all ones, like q_w.
  const auto ones = H1Strategy::from_table(H1Table({0.0, 50.0}, {1.0, 1.0}));
  CHECK(h1_conditional_map(ones, 1.0, 20.0, {0.0, 5.0}) == 1.0);
}

TEST_CASE("flat h1 table reproduces the independent strategy")
{
  SystemParams p;
  const double q = 0.3;
  const auto flat = H1Strategy::from_table(H1Table({0.0, 60.0, 120.0}, {q, q, q}));
  CHECK(success_probability(p, q, flat) == doctest::Approx(success_probability(p, q)).epsilon(1e-10));
}

TEST_CASE("comm factor with a distance-dependent h1 against a polar midpoint sum")
{
  SystemParams p;
  p.lambda = 0.01;
  const H1Table h1({0.0, 10.0, 30.0, 60.0}, {0.0, 0.05, 0.3, 0.2});
  const auto strat = H1Strategy::from_table(h1);
  const double r = 8.0;
  const FieldExtent field{150.0};
  const double got = -std::log(success_factors(p, 0.2, r, strat, {}, field).comm);

  // Sum over a polar grid about the receiver, r < |x| < 150.
  const double T = p.T(), lc = derive_intensities(p).lambda_c;
  const int n_rho = 6000, n_th = 2000;
  const double h_rho = (150.0 - r) / n_rho, h_th = 2.0 * kPi / n_th;
  double sum = 0.0;
  for (int i = 0; i < n_rho; ++i)
  {
    const double rho = r + (i + 0.5) * h_rho;
    const double k = T * std::pow(r, p.alpha) / (std::pow(rho, p.alpha) + T * std::pow(r, p.alpha));
    double ring = 0.0;
    for (int j = 0; j < n_th; ++j)
    {
      const double th = (j + 0.5) * h_th;
      const double d = std::hypot(rho * std::cos(th) - r, rho * std::sin(th));
      ring += h1(std::min(d, 60.0));
    }
    sum += k * ring * rho;
  }
  const double oracle = lc * sum * h_rho * h_th;
  CHECK(got == doctest::Approx(oracle).epsilon(1e-4));
}

TEST_CASE("analytic report composition")
{
  SystemParams p;
  const auto rep = analytic_report(p);
  CHECK(rep.q_w == doctest::Approx(0.034414581158802108).epsilon(1e-8));
  CHECK(rep.C == collision_factor(p.M, p.M_r, rep.q_w));
  CHECK(rep.d_rm == radar_max_range(p, rep.q_w));
  CHECK(rep.P_s == doctest::Approx(0.34657311065576755).epsilon(1e-8));
  CHECK(rep.throughput == doctest::Approx(0.75 * 0.0075 * rep.q_w * rep.P_s).epsilon(1e-14));

  p.lambda = 1e-9;
  const auto sparse = analytic_report(p);
  CHECK(sparse.q_w > 0.99999);
  CHECK(sparse.C == doctest::Approx(0.99).epsilon(1e-4));

  for (double lam : {1e-5, 1e-3, 0.1, 1.0})
    for (double tau : {0.1, 0.5, 0.9})
    {
      SystemParams s;
      s.lambda = lam;
      s.tau = tau;
      s.P_fa = 0.01;
      const auto r = analytic_report(s);
      CHECK(r.q_w >= 0.0);
      CHECK(r.q_w <= 1.0);
      CHECK(r.P_s >= 0.0);
      CHECK(r.P_s <= 1.0);
      CHECK(r.C >= 0.0);
      CHECK(r.C <= 1.0);
      CHECK(r.d_rm >= 0.0);
      CHECK(r.throughput >= 0.0);
    }
}

TEST_CASE("analytic report propagates infeasible targets")
{
  SystemParams p;
  p.lambda = 1.0;
  p.P_fa = 0.5; // q_w ~ 0 gives C = 0.24
  CHECK_THROWS_AS(analytic_report(p), InfeasibleTargetError);
}
