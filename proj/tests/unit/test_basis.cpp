#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "xop/basis.hpp"
#include "xop/classical.hpp"
#include "xop/errors.hpp"

using namespace xop;
using xop::test::dec;

namespace {

MonomialPoly ints(std::initializer_list<int> cs) {
  std::vector<Real> v;
  for (int c : cs) v.push_back(Real(c));
  return MonomialPoly(std::move(v));
}

Real tol_bits(long k) { return Real::power_of_two(k - 256); }

}  // namespace

TEST_SUITE("basis") {
  TEST_CASE("basis elements") {
    const auto ctx = ParameterContext::parse("3");
    CHECK(basis_element(0, ctx).coefficients() == ints({1}).coefficients());
    CHECK(basis_element(1, ctx).coefficients() == ints({6, 1}).coefficients());
    CHECK(basis_element(2, ctx).coefficients() == ints({12, 8, 1}).coefficients());
    // (x+6)^2 (x+2)
    CHECK(basis_element(3, ctx).coefficients() == ints({72, 60, 14, 1}).coefficients());
    CHECK_THROWS_AS(basis_element(-1, ctx), DomainError);
    const auto ctx1 = ParameterContext::parse("1");
    for (int k = 0; k <= 9; ++k) {
      const MonomialPoly b = basis_element(k, ctx1);
      CHECK(b.degree() == k);
      CHECK(b.leading() == 1);
    }
  }

  TEST_CASE("to_monomial and from_monomial") {
    const auto ctx = ParameterContext::parse("3");
    CHECK(to_monomial(ShiftedPoly{{Real(1)}, ctx}).coefficients() == ints({1}).coefficients());
    CHECK(to_monomial(ShiftedPoly{{Real(0), Real(1)}, ctx}).coefficients() == ints({6, 1}).coefficients());
    CHECK(to_monomial(ShiftedPoly{{Real(1), Real(2), Real(3)}, ctx}).coefficients() ==
          ints({49, 26, 3}).coefficients());
    const ShiftedPoly c = from_monomial(MonomialPoly::constant(dec("2.5")), ctx);
    REQUIRE(c.coefficients.size() == 1);
    CHECK(c.coefficients[0] == dec("2.5"));
    const ShiftedPoly b2 = from_monomial(ints({12, 8, 1}), ctx);
    REQUIRE(b2.coefficients.size() == 3);
    CHECK(b2.coefficients[0] == 0);
    CHECK(b2.coefficients[1] == 0);
    CHECK(b2.coefficients[2] == 1);
  }

  // Worst round-trip deviations over 20 random polynomials of degree <= 10, in
  // both directions (monomial first, shifted first).
  std::pair<Real, Real> round_trip_errors(const ParameterContext& ctx, std::uint32_t seed, Real cond_floor) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-4.0, 4.0);
    std::uniform_int_distribution<int> deg(0, 10);
    const Real growth = max(Real(1), abs(ctx.r()));
    Real via_shifted(0);
    Real via_monomial(0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Real> c;
      const int d = deg(rng);
      for (int k = 0; k <= d; ++k) c.push_back(Real(coef(rng)));
      const Real cond = cond_floor.is_zero() ? Real(1) : pow(growth, static_cast<long>(d));
      const MonomialPoly p(c);
      via_shifted = max(via_shifted, max_relative_deviation(to_monomial(from_monomial(p, ctx)), p) / cond);

      const ShiftedPoly s{c, ctx};
      const ShiftedPoly s_back = from_monomial(to_monomial(s), ctx);
      Real worst(0);
      Real scale(0);
      for (std::size_t k = 0; k < c.size(); ++k) {
        worst = max(worst, abs(s_back.coefficients[k] - c[k]));
        scale = max(scale, abs(c[k]));
      }
      via_monomial = max(via_monomial, worst / scale / cond);
    }
    return {via_shifted, via_monomial};
  }

  TEST_CASE("round trip on random polynomials up to degree 10") {
    // Literal 2^(16-p): attainable only while |r|^degree stays below 2^16.
    for (const char* as : {"0.5", "3.7"}) {
      const auto [a, b] = round_trip_errors(ParameterContext::parse(as), 1234, Real(0));
      CHECK_MESSAGE(a <= tol_bits(16), "alpha=" << as);
      CHECK_MESSAGE(b <= tol_bits(16), "alpha=" << as);
    }
  }

  TEST_CASE("round trip relative to the conversion's conditioning") {
    for (const char* as : {"0.5", "1", "3", "3.7"}) {
      const auto [a, b] = round_trip_errors(ParameterContext::parse(as), 1234, Real(1));
      CHECK_MESSAGE(a <= tol_bits(16), "alpha=" << as);
      CHECK_MESSAGE(b <= tol_bits(16), "alpha=" << as);
    }
    // Integer roots (alpha = 3: r = -6, s = -2) convert exactly.
    const auto [a, b] = round_trip_errors(ParameterContext::parse("3"), 99, Real(0));
    CHECK(a == 0);
    CHECK(b == 0);
  }

  TEST_CASE("flag elements") {
    const auto ctx = ParameterContext::parse("3");
    CHECK(max_relative_deviation(flag_element(2, ctx), MonomialPoly({Real(10), Real(5), dec("0.5")})) <=
          tol_bits(4));
    // (x+6)^2 (x+3)
    CHECK(flag_element(3, ctx).coefficients() == ints({108, 72, 15, 1}).coefficients());
    CHECK(flag_element(4, ctx).coefficients() == basis_element(4, ctx).coefficients());
    CHECK(flag_element(7, ctx).coefficients() == basis_element(7, ctx).coefficients());
    CHECK_THROWS_AS(flag_element(1, ctx), DomainError);

    const MonomialPoly v2 = flag_element(2, ctx);
    CHECK(evaluate(v2, ctx.r()) == -2);
    CHECK(evaluate(differentiate(v2), ctx.r()) == -1);
  }

  TEST_CASE("flag satisfies the exceptional conditions") {
    for (const char* as : {"0.5", "1", "3"}) {
      const auto ctx = ParameterContext::parse(as);
      for (int l = 2; l <= 12; ++l) {
        const MonomialPoly v = flag_element(l, ctx);
        const MonomialPoly dv = differentiate(v);
        for (const Real& xi : {ctx.r(), ctx.s()}) {
          CHECK(abs(xi * evaluate(dv, xi) + ctx.alpha() * evaluate(v, xi)) <= tol_bits(32) * v.max_abs_coefficient());
        }
      }
    }
  }

  TEST_CASE("v3 equals (x-r)^2 (x-s) + (x-r)^2") {
    for (const char* as : {"0.5", "1", "3.7"}) {
      const auto ctx = ParameterContext::parse(as);
      const MonomialPoly xr = MonomialPoly::linear(-ctx.r(), Real(1));
      const MonomialPoly xs = MonomialPoly::linear(-ctx.s(), Real(1));
      CHECK(max_relative_deviation(flag_element(3, ctx), xr * xr * xs + xr * xr) <= tol_bits(16));
    }
  }

  TEST_CASE("polynomial ring operations") {
    const auto ctx = ParameterContext::parse("3");
    CHECK(differentiate(ints({0, 0, 1})).coefficients() == ints({0, 2}).coefficients());
    const MonomialPoly xr = MonomialPoly::linear(-ctx.r(), Real(1));
    const MonomialPoly xs = MonomialPoly::linear(-ctx.s(), Real(1));
    CHECK((xr * xs).coefficients() == ints({12, 8, 1}).coefficients());
    CHECK((xr - xr).is_zero());
    CHECK((xr - xr).degree() == -1);
    CHECK(scale(xr, Real(2)).coefficients() == ints({12, 2}).coefficients());
    CHECK(evaluate(ints({1, 2, 3}), Real(2)) == 17);
    CHECK(ints({1, 2, 0}).degree() == 1);
  }
}
