#include <doctest.h>

#include "xop/errors.hpp"
#include "xop/real.hpp"

using xop::Real;

TEST_SUITE("real") {
  TEST_CASE("mixed precision arithmetic takes the larger precision") {
    const Real a(1, 128);
    const Real b(3, 320);
    CHECK((a / b).precision() == 320);
    CHECK((a + 1).precision() == 128);
  }

  TEST_CASE("precision scope restores the previous default") {
    const long before = xop::default_precision();
    {
      xop::PrecisionScope scope(512);
      CHECK(xop::default_precision() == 512);
      CHECK(Real(7).precision() == 512);
    }
    CHECK(xop::default_precision() == before);
  }

  TEST_CASE("non-finite results are errors") {
    CHECK_THROWS_AS(Real(1) / Real(0), xop::NumericError);
    CHECK_THROWS_AS(sqrt(Real(-1)), xop::DomainError);
    CHECK_THROWS_AS(log(Real(0)), xop::DomainError);
    CHECK_THROWS_AS(exp(Real::power_of_two(80)), xop::NumericError);
    CHECK_THROWS_AS(Real::parse("nan"), xop::DomainError);
    CHECK_THROWS_AS(Real::parse("1.5x"), xop::DomainError);
  }

  TEST_CASE("decimal output is the shortest round-trip form") {
    CHECK(Real(24).to_string() == "2.4e1");
    CHECK(Real(0).to_string() == "0");
    CHECK(Real(-6).to_string() == "-6e0");
    CHECK(Real::parse("0.5").to_string() == "5e-1");
    const Real third = Real(1) / 3;
    const std::string text = third.to_string();
    CHECK(text.size() >= 77);
    CHECK(Real::parse(text) == third);
  }

  TEST_CASE("parse respects the requested precision") {
    const Real x = Real::parse("0.1", 400);
    CHECK(x.precision() == 400);
    CHECK(x != Real::parse("0.1", 200));
  }

  TEST_CASE("comparisons against integers") {
    CHECK(Real(3) > 2);
    CHECK(Real(3) == 3);
    CHECK(Real::parse("-0.5") < 0);
    CHECK(Real::parse("-2.5").sign() < 0);
  }
}
