#include <catch2/catch.hpp>

#include <cmath>

#include "trinomial/rational.hpp"
#include "trinomial/special_functions.hpp"
#include "trinomial/types.hpp"

using namespace trinomial;

TEST_CASE("rationals reduce to canonical form") {
  CHECK(Rational(4, -8) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(21, 6).str() == "7/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-3, 1).is_nonpositive_integer());
  CHECK(Rational(0, 1).is_nonpositive_integer());
  CHECK(!Rational(-3, 2).is_nonpositive_integer());
  CHECK(Rational(1, 2).value() == 0.5);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("hypergeometric specs compare by value") {
  const HypergeometricSpec a({{1, 2}, {2, 2}}, {{2, 1}}, {0.25, 0.0});
  const HypergeometricSpec b({{1, 2}, {1, 1}}, {{4, 2}}, {0.25, 0.0});
  CHECK(a == b);
  const HypergeometricSpec c({{1, 2}, {1, 1}}, {{2, 1}}, {0.5, 0.0});
  CHECK(!(a == c));
}

TEST_CASE("pow_int agrees with std::pow") {
  const Complex z{0.83, -0.41};
  for (int n : {0, 1, 2, 3, 7, 13}) {
    const Complex expected = std::pow(z, n);
    CHECK(std::abs(pow_int(z, n) - expected) <= 1e-14 * std::abs(expected));
  }
  CHECK(pow_int({0.0, 0.0}, 0) == Complex(1.0, 0.0));
}

TEST_CASE("roots of unity are exact on the axes") {
  CHECK(root_of_unity(0, 4) == Complex(1.0, 0.0));
  CHECK(root_of_unity(2, 4) == Complex(-1.0, 0.0));
  CHECK(root_of_unity(1, 4) == Complex(0.0, 1.0));
  CHECK(root_of_unity(3, 4) == Complex(0.0, -1.0));
  CHECK(root_of_unity(-1, 4) == Complex(0.0, -1.0));
  CHECK(root_of_unity(5, 1) == Complex(1.0, 0.0));
  CHECK(std::abs(root_of_unity(1, 6) - Complex(0.5, std::sqrt(3.0) / 2.0)) <= 1e-15);
}

TEST_CASE("is_finite flags bad components") {
  CHECK(is_finite({1.0, -2.0}));
  CHECK(!is_finite({std::nan(""), 0.0}));
  CHECK(!is_finite({0.0, std::numeric_limits<double>::infinity()}));
}
