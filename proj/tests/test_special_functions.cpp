#include <catch2/catch.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "support/reference.hpp"
#include "trinomial/special_functions.hpp"

using namespace trinomial;

TEST_CASE("log_gamma known values") {
  CHECK(std::abs(log_gamma({1.0, 0.0})) <= 1e-14);
  CHECK(log_gamma({0.5, 0.0}).real() ==
        Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-13));
  CHECK(log_gamma({0.5, 0.0}).imag() == 0.0);
  // Gamma(6) = 5! by direct multiplication
  CHECK(log_gamma({6.0, 0.0}).real() ==
        Approx(std::log(5.0 * 4.0 * 3.0 * 2.0)).epsilon(1e-13));
}

TEST_CASE("log_gamma agrees with the C library on the positive axis") {
  for (double x = 0.5; x < 50.0; x += 0.37) {
    const double mine = log_gamma({x, 0.0}).real();
    CHECK(std::abs(mine - std::lgamma(x)) <=
          1e-13 * std::max(1.0, std::abs(std::lgamma(x))));
  }
}

TEST_CASE("log_gamma reflection handles Re(z) < 0.5") {
  // Gamma(-0.7) is real and negative; exp(log_gamma) must reproduce it.
  const Complex g = std::exp(log_gamma({-0.7, 0.0}));
  CHECK(g.real() == Approx(std::tgamma(-0.7)).epsilon(1e-12));
  CHECK(std::abs(g.imag()) <= 1e-12);
  const Complex h = std::exp(log_gamma({0.2, 0.0}));
  CHECK(h.real() == Approx(std::tgamma(0.2)).epsilon(1e-12));
}

TEST_CASE("log_gamma poles throw") {
  CHECK_THROWS_AS(log_gamma({0.0, 0.0}), PoleError);
  CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), PoleError);
  CHECK_NOTHROW(log_gamma({-3.0, 1e-3}));
}

TEST_CASE("log_gamma duplication identity (m = 2 multiplication theorem)") {
  // log Gamma(2z) = log Gamma(z) + log Gamma(z + 1/2) + (2z-1) ln 2 - ln(pi)/2
  const double half_log_pi = 0.5 * std::log(std::numbers::pi);
  for (double x = 0.5; x <= 10.0; x += 0.25) {
    for (double y : {0.0, 0.7, -1.3, 2.5}) {
      const Complex z{x, y};
      const Complex lhs = log_gamma(2.0 * z);
      const Complex rhs = log_gamma(z) + log_gamma(z + Complex(0.5, 0.0)) +
                          (2.0 * z - 1.0) * std::numbers::ln2 - half_log_pi;
      CHECK(std::abs(lhs - rhs) <= 1e-11);
    }
  }
}

TEST_CASE("gamma_ratio_term examples") {
  CHECK(gamma_ratio_term(2, 0) == Approx(1.0).epsilon(1e-13));
  // Gamma(3)/(Gamma(3) Gamma(2)) = 1
  CHECK(gamma_ratio_term(2, 1) == Approx(1.0).epsilon(1e-13));
  // Gamma(4)/(Gamma(4) Gamma(2)) = 1
  CHECK(gamma_ratio_term(3, 2) == Approx(1.0).epsilon(1e-13));
  // direct gamma evaluation of a fractional case
  const double direct = std::tgamma(15.0 / 2.0 + 1.0) /
                        (std::tgamma(7.0) * std::tgamma(5.0 / 2.0 + 1.0));
  CHECK(gamma_ratio_term(3, 5) == Approx(direct).epsilon(1e-12));
  CHECK_THROWS_AS(gamma_ratio_term(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_ratio_term(3, -1), std::invalid_argument);
}

TEST_CASE("pfq trivial and closed-form values") {
  const SeriesResult zero = pfq(HypergeometricSpec({{1, 2}}, {{7, 3}}, {0.0, 0.0}),
                                1e-12, 1000);
  CHECK(zero.value == Complex(1.0, 0.0));
  CHECK(zero.terms_used == 1);
  CHECK(zero.converged);
  CHECK(zero.tail_estimate == 0.0);

  // 2F1(1/2,1;2;z) = (2/z)(1 - sqrt(1-z)) at z = 0.75 gives 4/3
  const SeriesResult quad =
      pfq(HypergeometricSpec({{1, 2}, {1, 1}}, {{2, 1}}, {0.75, 0.0}), 1e-13, 100000);
  CHECK(quad.value.real() == Approx(4.0 / 3.0).epsilon(1e-11));
  CHECK(std::abs(quad.value.imag()) <= 1e-14);
  CHECK(quad.converged);
  CHECK(quad.tail_estimate <= 1e-13);

  // 2F1(1/3,2/3;3/2;z) = (3/sqrt(z)) sin(asin(sqrt(z))/3) at z = 0.6075
  const double z = 0.6075;
  const SeriesResult trig =
      pfq(HypergeometricSpec({{1, 3}, {2, 3}}, {{3, 2}}, {z, 0.0}), 1e-13, 100000);
  const double expected = 3.0 / std::sqrt(z) * std::sin(std::asin(std::sqrt(z)) / 3.0);
  CHECK(trig.value.real() == Approx(expected).epsilon(1e-11));
}

TEST_CASE("pfq rejects bad specs and bad domains") {
  CHECK_THROWS_AS(HypergeometricSpec({{1, 2}}, {{0, 1}}, {0.1, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(HypergeometricSpec({{1, 2}}, {{-2, 1}}, {0.1, 0.0}),
                  std::invalid_argument);
  CHECK_NOTHROW(HypergeometricSpec({{-2, 1}}, {{1, 2}}, {0.1, 0.0}));

  CHECK_THROWS_AS(pfq(HypergeometricSpec({{1, 2}, {1, 1}}, {{2, 1}}, {1.2, 0.0}),
                      1e-12, 1000),
                  DivergenceError);
  // |z| = 1 with nonpositive parameter excess is rejected
  CHECK_THROWS_AS(pfq(HypergeometricSpec({{1, 1}, {1, 1}}, {{3, 2}}, {1.0, 0.0}),
                      1e-12, 1000),
                  DivergenceError);
  // p > q + 1 diverges for z != 0
  CHECK_THROWS_AS(pfq(HypergeometricSpec({{1, 2}, {1, 3}}, {}, {0.5, 0.0}),
                      1e-12, 1000),
                  DivergenceError);
  CHECK_THROWS_AS(pfq(HypergeometricSpec({{1, 2}, {1, 1}}, {{2, 1}}, {0.9, 0.0}),
                      1e-12, 5),
                  NonConvergenceError);
  CHECK_THROWS_AS(pfq(HypergeometricSpec({{1, 2}}, {{1, 1}}, {0.5, 0.0}), -1.0, 10),
                  std::invalid_argument);
}

TEST_CASE("pfq terminating series escape the divergence checks") {
  // upper parameter -3 makes a cubic polynomial; |z| > 1 is fine
  const HypergeometricSpec spec({{-3, 1}, {3, 2}}, {{5, 2}}, {2.5, 0.0});
  const SeriesResult r = pfq(spec, 1e-12, 1000);
  CHECK(r.converged);
  CHECK(r.tail_estimate == 0.0);
  CHECK(r.terms_used == 4);
  const Complex expected = testref::horner_reference(spec, 3);
  CHECK(std::abs(r.value - expected) <= 1e-14 * std::abs(expected));
}

TEST_CASE("pfq polynomial case matches Horner exactly") {
  std::mt19937 rng(20240811u);
  std::uniform_int_distribution<int> degree_dist(1, 8);
  std::uniform_int_distribution<std::int64_t> num_dist(1, 12);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 6);
  std::uniform_real_distribution<double> z_dist(-2.0, -0.1);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = degree_dist(rng);
    // negative z keeps all polynomial terms the same sign (no cancellation)
    const HypergeometricSpec spec({{-m, 1}, {num_dist(rng), den_dist(rng)}},
                                  {{num_dist(rng), den_dist(rng)}},
                                  {z_dist(rng), 0.0});
    const SeriesResult r = pfq(spec, 1e-12, 1000);
    const Complex expected = testref::horner_reference(spec, m);
    CHECK(std::abs(r.value - expected) <= 1e-14 * std::abs(expected));
  }
}

TEST_CASE("pfq term recurrence matches direct log-gamma terms") {
  std::mt19937 rng(911u);
  std::uniform_int_distribution<std::int64_t> num_dist(1, 20);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 12);
  std::uniform_real_distribution<double> mag_dist(0.05, 0.9);
  std::uniform_real_distribution<double> arg_dist(0.0, 2.0 * std::numbers::pi);

  for (int trial = 0; trial < 12; ++trial) {
    std::vector<Rational> upper = {{num_dist(rng), den_dist(rng)},
                                   {num_dist(rng), den_dist(rng)}};
    std::vector<Rational> lower = {{num_dist(rng), den_dist(rng)},
                                   {num_dist(rng), den_dist(rng)}};
    const Complex z = std::polar(mag_dist(rng), arg_dist(rng));

    // recurrence terms
    Complex term(1.0, 0.0);
    for (int k = 0; k < 200; ++k) {
      double num = 1.0, den = k + 1.0;
      for (const auto& a : upper) num *= a.value() + k;
      for (const auto& b : lower) den *= b.value() + k;
      term *= z * (num / den);

      // same term from Pochhammer ratios of log-gammas and k! directly
      Complex log_term{};
      for (const auto& a : upper)
        log_term += log_gamma({a.value() + k + 1.0, 0.0}) - log_gamma({a.value(), 0.0});
      for (const auto& b : lower)
        log_term -= log_gamma({b.value() + k + 1.0, 0.0}) - log_gamma({b.value(), 0.0});
      log_term += (k + 1.0) * std::log(z);
      log_term -= log_gamma({k + 2.0, 0.0});
      const Complex direct = std::exp(log_term);

      if (std::abs(direct) < 1e-280) break;  // below the subnormal floor
      REQUIRE(std::abs(term - direct) <= 1e-10 * std::abs(direct));
    }
  }
}

TEST_CASE("pfq converges inside the disk and tightens with tol") {
  std::mt19937 rng(77u);
  std::uniform_int_distribution<std::int64_t> num_dist(1, 9);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 5);
  std::uniform_real_distribution<double> mag_dist(0.1, 0.85);
  std::uniform_real_distribution<double> arg_dist(0.0, 2.0 * std::numbers::pi);

  for (int trial = 0; trial < 10; ++trial) {
    const HypergeometricSpec spec({{num_dist(rng), den_dist(rng)},
                                   {num_dist(rng), den_dist(rng)}},
                                  {{num_dist(rng), den_dist(rng)},
                                   {num_dist(rng), den_dist(rng)}},
                                  std::polar(mag_dist(rng), arg_dist(rng)));
    const Complex reference = testref::pfq_reference(spec);

    double previous_distance = std::numeric_limits<double>::infinity();
    for (double tol : {1e-4, 5e-5, 2.5e-5, 1.25e-5, 1e-8, 1e-12}) {
      const SeriesResult r = pfq(spec, tol, 200000);
      REQUIRE(r.converged);
      REQUIRE(r.tail_estimate <= tol);
      const double distance = std::abs(r.value - reference);
      // halving tol never moves the value away from the reference
      CHECK(distance <= previous_distance + 1e-15);
      previous_distance = distance;
    }
  }
}

TEST_CASE("gauss multiplication spot check Gamma(2n+1) = 4^n (1/2)_n (1)_n") {
  for (int n = 0; n <= 20; ++n) {
    const double lhs = std::exp(log_gamma({2.0 * n + 1.0, 0.0}).real());
    const double poch_half =
        std::exp(log_gamma({0.5 + n, 0.0}).real() - log_gamma({0.5, 0.0}).real());
    const double poch_one = std::exp(log_gamma({1.0 + n, 0.0}).real());
    const double rhs = std::pow(4.0, n) * poch_half * poch_one;
    CHECK(std::abs(lhs - rhs) <= 1e-11 * rhs);
  }
}
