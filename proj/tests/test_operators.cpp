#include <gtest/gtest.h>

#include <random>

#include "bvforms/cohomology.hpp"
#include "bvforms/expression.hpp"
#include "bvforms/operators.hpp"
#include "word_oracle.hpp"

using namespace bvf;

namespace {

SuperForm g(int n, GeneratorId id) { return SuperForm::generator(n, id); }
SuperForm P(const char* text, int n) { return parse(text, n); }

}  // namespace

TEST(D, Examples) {
  EXPECT_EQ(d(g(1, x(1))), g(1, dx(1)));
  EXPECT_EQ(d(P("p1*dx1", 1)), omega(1));
  EXPECT_EQ(print(d(P("p1*dx1", 1))), "dx1*dp1");
  EXPECT_EQ(d(P("x1^2", 1)), P("2*x1*dx1", 1));
}

TEST(D, AgreesWithPositionwiseOracle) {
  for (int n = 1; n <= 2; ++n)
    for (const auto& m : monomials_up_to_total(n, 4)) {
      const SuperForm f = SuperForm::term(n, m);
      ASSERT_EQ(d(f), oracle::d(f)) << print(f);
    }
}

TEST(Omega, Examples) {
  EXPECT_EQ(print(omega(1)), "dx1*dp1");
  EXPECT_EQ(omega(1).size(), 1u);
  EXPECT_EQ(print(omega(2)), "dx1*dp1 + dx2*dp2");
  EXPECT_EQ(omega(2), P("dp1*dx1 + dp2*dx2", 2));
  for (int n = 1; n <= 3; ++n) {
    EXPECT_TRUE(mul(omega(n), omega(n)).is_zero());
    EXPECT_TRUE(d(omega(n)).is_zero());
  }
}

TEST(OmegaWedge, Examples) {
  EXPECT_EQ(omega_wedge(SuperForm::constant(1, 1)), omega(1));
  EXPECT_TRUE(omega_wedge(P("p1*dx1", 1)).is_zero());
  const SuperForm f = g(1, x(1));
  EXPECT_TRUE((d(omega_wedge(f)) + omega_wedge(d(f))).is_zero());
}

TEST(OmegaWedge, ShiftsDxAndDpCountsByOne) {
  const int n = 2;
  for (const auto& m : monomials_up_to_total(n, 4)) {
    const MultiDegree before = m.degrees();
    const SuperForm image_form = omega_wedge(SuperForm::term(n, m));
    for (const auto& [image, c] : image_form.terms()) {
      const MultiDegree after = image.degrees();
      ASSERT_EQ(after.xdeg, before.xdeg);
      ASSERT_EQ(after.pdeg, before.pdeg);
      ASSERT_EQ(after.dxcount, before.dxcount + 1);
      ASSERT_EQ(after.dpcount, before.dpcount + 1);
      ASSERT_EQ(after.auxdeg(), before.auxdeg());
    }
  }
}

TEST(HomotopyL, Examples) {
  EXPECT_TRUE(homotopy_L(SuperForm::constant(2, 1)).is_zero());
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(homotopy_L(omega(n)), SuperForm::constant(n, n));
    EXPECT_TRUE(homotopy_L(top_form(n)).is_zero());
  }
}

TEST(HomotopyL, IdentityWithCoefficientNMinusAuxdeg) {
  for (int n = 1; n <= 2; ++n)
    for (const auto& m : monomials_up_to_total(n, 5)) {
      const SuperForm a = SuperForm::term(n, m);
      ASSERT_EQ(homotopy_L(omega_wedge(a)) + omega_wedge(homotopy_L(a)),
                a * Scalar(n - m.degrees().auxdeg()))
          << print(a);
    }
}

TEST(Bicomplex, LawsOnSmallRange) {
  for (int n = 1; n <= 2; ++n)
    for (const auto& m : monomials_up_to_total(n, 4)) {
      const SuperForm f = SuperForm::term(n, m);
      ASSERT_TRUE(d(d(f)).is_zero());
      ASSERT_TRUE(omega_wedge(omega_wedge(f)).is_zero());
      ASSERT_TRUE((d(omega_wedge(f)) + omega_wedge(d(f))).is_zero());
    }
}

TEST(InvertOmega, Examples) {
  EXPECT_EQ(invert_omega(omega(1)), SuperForm::constant(1, 1));
  EXPECT_EQ(invert_omega(omega(3)), SuperForm::constant(3, 1));
  EXPECT_TRUE(invert_omega(SuperForm(2)).is_zero());

  const SuperForm beta = d(P("x1*p1*dx1", 1));
  EXPECT_EQ(beta, P("x1*dx1*dp1", 1));
  const SuperForm alpha = invert_omega(beta);
  EXPECT_EQ(alpha, homotopy_L(beta));
  EXPECT_EQ(alpha, g(1, x(1)));
  EXPECT_EQ(omega_wedge(alpha), beta);
}

TEST(InvertOmega, Errors) {
  try {
    invert_omega(P("x1*dx1 + dx1*dp1", 1));
    FAIL() << "expected ComponentAtTopAuxdeg";
  } catch (const ComponentAtTopAuxdeg& e) {
    EXPECT_EQ(e.component(), P("x1*dx1", 1));
  }
  try {
    invert_omega(P("x1*dp1", 1));
    FAIL() << "expected NotExact";
  } catch (const NotExact& e) {
    EXPECT_EQ(e.residual(), -P("x1*dp1", 1));
  }
}

TEST(InvertOmega, SectionOfOmegaWedge) {
  for (int n = 1; n <= 2; ++n)
    for (const auto& m : monomials_up_to_total(n, 5)) {
      if (m.degrees().auxdeg() == n) continue;
      const SuperForm a = SuperForm::term(n, m);
      const SuperForm beta = omega_wedge(a);
      const SuperForm back = invert_omega(beta);
      ASSERT_EQ(omega_wedge(back), beta);
      ASSERT_TRUE(omega_wedge(back - a).is_zero());
    }
}

TEST(BvDelta, Examples) {
  EXPECT_EQ(bv_delta(P("x1*p1", 1)), SuperForm::constant(1, 1));
  EXPECT_TRUE(bv_delta(P("x1^3 + 2*x1", 1)).is_zero());
  EXPECT_EQ(bv_delta(P("x1^2*p1", 1)), P("2*x1", 1));
  EXPECT_EQ(bv_delta(P("x1*p1*p2", 2)), g(2, p(2)));
  EXPECT_EQ(bv_delta(P("x1*p1*p2", 2)), oracle::delta(P("x1*p1*p2", 2)));
  EXPECT_THROW(bv_delta(g(1, dx(1))), InvalidArgument);
}

TEST(BvDelta, SquaresToZeroAndMatchesOracle) {
  for (int n = 1; n <= 3; ++n) {
    AlgebraContext ctx;
    ctx.n = n;
    ctx.max_xdeg = 4;
    ctx.max_total = 4;
    for (const auto& m : function_monomials(ctx)) {
      const SuperForm f = SuperForm::term(n, m);
      ASSERT_TRUE(bv_delta(bv_delta(f)).is_zero());
      ASSERT_EQ(bv_delta(f), oracle::delta(f));
    }
  }
}

TEST(CanonicalRep, Examples) {
  EXPECT_EQ(canonical_rep(P("x1*dx1", 1)), g(1, x(1)));
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(canonical_rep(omega(n)).is_zero());
  EXPECT_THROW(canonical_rep(P("x1*dp1", 1)), NotClosed);
}

TEST(CanonicalRep, ExactTermsDoNotChangeTheClass) {
  const int n = 2;
  const SuperForm f = P("x1*p2 - 3*x2^2", n);
  for (const auto& m : monomials_up_to_total(n, 3)) {
    const SuperForm h = SuperForm::term(n, m);
    ASSERT_EQ(canonical_rep(times_top(f) + omega_wedge(h)), f) << print(h);
  }
  AlgebraContext ctx;
  ctx.n = n;
  for (const auto& m : function_monomials(ctx))
    ASSERT_EQ(canonical_rep(times_top(SuperForm::term(n, m))), SuperForm::term(n, m));
}

TEST(HbarD, Examples) {
  const HbarForm one(SuperForm::constant(1, 1));
  EXPECT_EQ(hbar_d(one), HbarForm(omega(1)));
  EXPECT_TRUE(hbar_d(parse_hbar("p1*dx1 - h", 1)).is_zero());
}

TEST(HbarD, SquaresToZero) {
  const int n = 2;
  const auto monos = monomials_up_to_total(n, 4);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<SuperForm> levels;
    for (int j = 0; j < 3; ++j)
      levels.push_back(SuperForm::term(n, monos[pick(rng)], j + 1) - SuperForm::term(n, monos[pick(rng)]));
    const HbarForm z(n, levels);
    ASSERT_TRUE(hbar_d(hbar_d(z)).is_zero()) << print(z);
  }
}
