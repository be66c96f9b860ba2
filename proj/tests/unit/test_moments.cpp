#include <doctest.h>

#include "frozen.hpp"
#include "oracle.hpp"
#include "xop/errors.hpp"
#include "xop/moments.hpp"
#include "xop/numerics.hpp"

using namespace xop;
using xop::test::dec;
using xop::test::rel;

namespace {

Real tol_bits(long k) { return Real::power_of_two(k - 256); }

Real frozen_moment(const char* alpha, int i, int j) {
  for (const auto& m : test::frozen::kMoments) {
    if (std::string(m.alpha) == alpha && m.i == i && m.j == j) return dec(m.value);
  }
  throw std::logic_error("no frozen moment");
}

MomentTable oracle_table(const ParameterContext& ctx, int max_i, int max_j) {
  const QuadratureRule rule = gauss_laguerre_rule(ctx.alpha(), adjusted_node_count(ctx), ctx.precision());
  return quadrature_table(rule, ctx, max_i, max_j);
}

}  // namespace

TEST_SUITE("moments") {
  TEST_CASE("initial moments") {
    const auto ctx3 = ParameterContext::parse("3");
    CHECK(initial_moments(ctx3).mu22 == 24);
    for (const char* as : {"0.5", "1", "3"}) {
      const auto ctx = ParameterContext::parse(as);
      const InitialMoments m = initial_moments(ctx);
      CHECK(rel(m.mu22, 4 * gamma(ctx.alpha() + 1)) <= tol_bits(8));
      CHECK(rel(m.mu12, frozen_moment(as, 1, 2)) < test::tenth_power(-48));
      CHECK(rel(m.mu21, frozen_moment(as, 2, 1)) < test::tenth_power(-48));
      const QuadratureRule rule = gauss_laguerre_rule(ctx.alpha(), adjusted_node_count(ctx), 256);
      CHECK(rel(m.mu12, integrate_adjusted(rule, 1, 2, ctx)) < test::tenth_power(-30));
      CHECK(rel(m.mu21, integrate_adjusted(rule, 2, 1, ctx)) < test::tenth_power(-30));
    }
    // live integral oracle at an alpha that has no frozen values
    const auto ctx = ParameterContext::parse("2.2");
    const InitialMoments m = initial_moments(ctx);
    CHECK(rel(m.mu12, test::to_real(test::adjusted_moment("2.2", 1, 2))) < test::tenth_power(-40));
    CHECK(rel(m.mu21, test::to_real(test::adjusted_moment("2.2", 2, 1))) < test::tenth_power(-40));
  }

  TEST_CASE("three-term forms") {
    const auto ctx = ParameterContext::parse("1");
    CHECK(three_term(Real(1), Real(0), ctx) == 2 * ctx.beta());
    const Real a = dec("1.25");
    const Real b = dec("-0.5");
    const Real c = three_term(a, b, ctx);
    CHECK(rel(three_term_solve_right(c, a, ctx), b) <= tol_bits(4));
    CHECK(rel(three_term_solve_center(c, b, ctx), a) <= tol_bits(4));

    // B cell matches the integral
    for (const char* as : {"0.5", "1", "3"}) {
      const auto cx = ParameterContext::parse(as);
      const InitialMoments m = initial_moments(cx);
      CHECK(rel(three_term_solve_center(m.mu21, m.mu12, cx), frozen_moment(as, 1, 1)) < test::tenth_power(-45));
    }
  }

  TEST_CASE("four-term formulas") {
    for (const char* as : {"0.5", "1", "3"}) {
      const auto ctx = ParameterContext::parse(as);
      const auto mu = [&](int i, int j) { return frozen_moment(as, i, j); };
      const Real mu22 = initial_moments(ctx).mu22;
      // C cells
      const Real mu01 = four_term_a_solve_back(mu22, initial_moments(ctx).mu21, mu(1, 1), 1, 1, ctx);
      CHECK(rel(mu01, mu(0, 1)) < test::tenth_power(-45));
      const Real mu10 = four_term_b_solve_back(mu22, initial_moments(ctx).mu12, mu(1, 1), 1, 1, ctx);
      CHECK(rel(mu10, mu(1, 0)) < test::tenth_power(-45));
      // coefficient of the solved cell at (1,1)
      CHECK(rel(four_term_a_coefficients(1, 1, ctx).back, -2 * (ctx.alpha() + 1) * (ctx.beta() + 1)) <= tol_bits(4));
      CHECK(rel(four_term_b_coefficients(1, 1, ctx).back, 2 * (ctx.alpha() + 1) * (ctx.beta() - 1)) <= tol_bits(4));
    }

    const auto ctx = ParameterContext::parse("1");
    CHECK_THROWS_AS(four_term_a_solve_back(Real(1), Real(1), Real(1), 2, 3, ctx), SingularError);
    CHECK_THROWS_AS(four_term_b_solve_back(Real(1), Real(1), Real(1), 3, 2, ctx), SingularError);
    CHECK_THROWS_AS(four_term_a_coefficients(0, 1, ctx), DomainError);
    CHECK_THROWS_AS(four_term_b_coefficients(1, 0, ctx), DomainError);
  }

  TEST_CASE("forward four-term uses match quadrature for 1 <= i,j <= 6") {
    for (const char* as : {"0.5", "1", "3"}) {
      const auto ctx = ParameterContext::parse(as);
      const MomentTable q = oracle_table(ctx, 7, 7);
      for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
          const Real a = four_term_a(q(i + 1, j), q(i, j), q(i - 1, j), i, j, ctx);
          const Real b = four_term_b(q(i, j + 1), q(i, j), q(i, j - 1), i, j, ctx);
          CHECK_MESSAGE(rel(a, q(i + 1, j + 1)) < test::tenth_power(-25), "A alpha=" << as << " " << i << "," << j);
          CHECK_MESSAGE(rel(b, q(i + 1, j + 1)) < test::tenth_power(-25), "B alpha=" << as << " " << i << "," << j);
        }
      }
    }
    // (2,2) forward at alpha = 1 gives the exact value 64
    const auto ctx = ParameterContext::parse("1");
    const MomentTable t = fill_table(ctx, 3, 3);
    CHECK(rel(four_term_a(t(3, 2), t(2, 2), t(1, 2), 2, 2, ctx), Real(64)) <= tol_bits(40));
    CHECK(rel(four_term_b(t(2, 3), t(2, 2), t(2, 1), 2, 2, ctx), Real(64)) <= tol_bits(40));
  }

  TEST_CASE("fill_table: seed block and provenance") {
    const auto ctx = ParameterContext::parse("1");
    const MomentTable t = fill_table(ctx, 2, 2);
    for (const auto& m : test::frozen::kMoments) {
      if (std::string(m.alpha) == "1" && m.i <= 2 && m.j <= 2) CHECK(rel(t(m.i, m.j), dec(m.value)) < test::tenth_power(-30));
    }
    const MomentTable q = oracle_table(ctx, 2, 2);
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; j <= 2; ++j) CHECK(rel(t(i, j), q(i, j)) < test::tenth_power(-30));
    }
    using P = Provenance;
    CHECK(t.provenance(2, 2) == P::initial);
    CHECK(t.provenance(1, 2) == P::initial);
    CHECK(t.provenance(2, 1) == P::initial);
    CHECK(t.provenance(1, 1) == P::three_term);
    CHECK(t.provenance(0, 1) == P::four_term_a);
    CHECK(t.provenance(1, 0) == P::four_term_b);
    CHECK(t.provenance(0, 0) == P::three_term);
    CHECK(t.provenance(0, 2) == P::three_term);
    CHECK(t.provenance(2, 0) == P::three_term);
    CHECK(to_string(P::four_term_b) == "four_term_b");
  }

  TEST_CASE("fill_table: large block against frozen integrals") {
    for (const char* as : {"0.5", "1", "3"}) {
      const auto ctx = ParameterContext::parse(as);
      const MomentTable t = fill_table(ctx, 8, 8);
      for (const auto& m : test::frozen::kMoments) {
        if (std::string(m.alpha) != as) continue;
        CHECK_MESSAGE(rel(t(m.i, m.j), dec(m.value)) < test::tenth_power(-45), as << " " << m.i << "," << m.j);
      }
    }
  }

  TEST_CASE("fill_table: path independence and identities") {
    for (const char* as : {"0.5", "1", "3", "3.7"}) {
      const auto ctx = ParameterContext::parse(as);
      const MomentTable t = fill_table(ctx, 10, 9);
      for (const FillOptions opt : {FillOptions{SeedFormula::four_term_b, false}, FillOptions{SeedFormula::four_term_a, true},
                                    FillOptions{SeedFormula::four_term_b, true}}) {
        const MomentTable u = fill_table(ctx, 10, 9, opt);
        for (int i = 0; i <= 10; ++i) {
          for (int j = 0; j <= 9; ++j) CHECK(rel(u(i, j), t(i, j)) <= tol_bits(48));
        }
      }
      for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 9; ++j) {
          CHECK(abs(t(i + 1, j) - t(i, j + 1) - 2 * ctx.beta() * t(i, j)) <= tol_bits(48) * abs(t(i + 1, j)));
        }
      }
      for (int i = 1; i < 10; ++i) {
        for (int j = 1; j < 9; ++j) {
          const Real a = four_term_a(t(i + 1, j), t(i, j), t(i - 1, j), i, j, ctx);
          const Real b = four_term_b(t(i, j + 1), t(i, j), t(i, j - 1), i, j, ctx);
          CHECK(rel(a, b) <= tol_bits(48));
        }
      }
      for (int i = 0; i <= 10; i += 2) {
        for (int j = 0; j <= 9; j += 2) CHECK(t(i, j) > 0);
      }
    }
  }

  TEST_CASE("table errors") {
    const auto ctx = ParameterContext::parse("1");
    CHECK_THROWS_AS(fill_table(ctx, 1, 4), DomainError);
    CHECK_THROWS_AS(fill_table(ctx, 4, 1), DomainError);
    const MomentTable t = fill_table(ctx, 3, 2);
    try {
      (void)t(4, 0);
      FAIL("expected a coverage error");
    } catch (const CoverageError& e) {
      CHECK(e.i() == 4);
      CHECK(e.j() == 0);
    }
    MomentTable empty(ctx, 2, 2);
    CHECK_FALSE(empty.contains(1, 1));
    CHECK_THROWS_AS(empty(1, 1), CoverageError);
    CHECK_THROWS_AS(empty.set(3, 0, Real(1), Provenance::initial), CoverageError);
  }

  TEST_CASE("moment inner product of basis elements") {
    const auto ctx = ParameterContext::parse("3");
    const MomentTable t = fill_table(ctx, 6, 6);
    for (int j = 0; j <= 5; ++j) {
      for (int k = 0; k <= 5; ++k) {
        std::vector<Real> a(static_cast<std::size_t>(j + 1), Real(0));
        std::vector<Real> b(static_cast<std::size_t>(k + 1), Real(0));
        a.back() = 1;
        b.back() = 1;
        const Real ip = moment_inner_product(ShiftedPoly{a, ctx}, ShiftedPoly{b, ctx}, t);
        CHECK(ip == t(ceil_half(j) + ceil_half(k), floor_half(j) + floor_half(k)));
      }
    }
  }
}
