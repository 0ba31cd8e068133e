#include <doctest.h>

#include <stdexcept>

#include "npcount/precision.hpp"
#include "test_support.hpp"

using namespace npcount;
using npcount::testing::relative_error;

TEST_CASE("precision context rejects fewer than 64 bits") {
  CHECK_THROWS_AS(PrecisionContext(63), std::invalid_argument);
  CHECK(PrecisionContext().bits() == 192);
  CHECK(PrecisionContext(64).widened(8).bits() == 72);
}

TEST_CASE("binary operations keep the wider precision") {
  const Real a = Real::from_int(1, 100);
  const Real b = Real::from_int(3, 300);
  CHECK((a / b).precision() == 300);
  CHECK((b / a).precision() == 300);
  Real c = a;
  c += b;
  CHECK(c.precision() == 300);
}

TEST_CASE("decimal parsing") {
  const Real x = Real::from_string("14.134725", 128);
  CHECK(x.to_double() == doctest::Approx(14.134725));
  CHECK_THROWS_AS(Real::from_string("abc", 128), std::invalid_argument);
  CHECK_THROWS_AS(Real::from_string("1.5x", 128), std::invalid_argument);
  CHECK_THROWS_AS(Real::from_string("", 128), std::invalid_argument);
}

TEST_CASE("fifteen significant digits") {
  CHECK(Real::pi(128).to_string() == "3.14159265358979");
  CHECK(Real::from_int(157, 64).to_string() == "157");
}

TEST_CASE("conjugation is an involution and arithmetic is deterministic") {
  for (int i = 0; i < 50; ++i) {
    const Complex z = Complex::from_doubles(npcount::testing::uniform(-10, 10), npcount::testing::uniform(-10, 10), 192);
    CHECK(conj(conj(z)) == z);
    const Complex w = Complex::from_doubles(1.25, -0.5, 192);
    CHECK(z * w / z == z * w / z);
  }
}

TEST_CASE("complex elementary functions agree with their identities") {
  const Bits bits = 192;
  const Complex z = Complex::from_doubles(0.75, -2.5, bits);
  CHECK(relative_error(exp(log(z)), z) < npcount::testing::power_of_two(-180));
  // sin^2 + cos^2 = 1
  const Complex s = sin(z);
  const Complex c = cos(z);
  const Complex one = s * s + c * c;
  CHECK(abs(one - 1) < npcount::testing::power_of_two(-180));
  // z / z = 1 through Smith's division in both branches
  CHECK(abs(z / z - 1) < npcount::testing::power_of_two(-185));
  const Complex tall = Complex::from_doubles(0.1, 7.0, bits);
  CHECK(abs(tall / tall - 1) < npcount::testing::power_of_two(-185));
}

TEST_CASE("move leaves a usable object") {
  Real a = Real::from_int(5, 128);
  Real b = std::move(a);
  CHECK(b == 5);
  a = Real::from_int(7, 64);
  CHECK(a == 7);
}
