#include <gtest/gtest.h>

#include <random>

#include "bvforms/cohomology.hpp"
#include "bvforms/errors.hpp"
#include "bvforms/expression.hpp"
#include "bvforms/operators.hpp"
#include "bvforms/substitution.hpp"
#include "word_oracle.hpp"

using namespace bvf;

namespace {

SuperForm g(int n, GeneratorId id) { return SuperForm::generator(n, id); }

std::vector<GeneratorId> all_generators(int n) {
  std::vector<GeneratorId> out;
  for (GeneratorKind k : {GeneratorKind::X, GeneratorKind::P, GeneratorKind::DX, GeneratorKind::DP})
    for (int i = 1; i <= n; ++i) out.push_back({k, i});
  return out;
}

}  // namespace

TEST(Scalar, CanonicalFormAndText) {
  EXPECT_EQ(to_string(parse_scalar("6/4")), "3/2");
  EXPECT_EQ(to_fraction_string(parse_scalar("-3")), "-3/1");
  EXPECT_EQ(to_string(ratio(2, -4)), "-1/2");
  EXPECT_THROW(parse_scalar("1/0"), InvalidArgument);
  EXPECT_THROW(parse_scalar("1.5"), InvalidArgument);
  EXPECT_THROW(parse_scalar("2/-3"), InvalidArgument);
}

TEST(Mul, Examples) {
  const int n = 1;
  const SuperForm f = g(n, x(1)) * g(n, p(1)) + SuperForm::constant(n, 3);
  EXPECT_EQ(mul(SuperForm::constant(n, 1), f), f);
  EXPECT_TRUE(mul(g(n, dx(1)), g(n, dx(1))).is_zero());

  const SuperForm px = mul(g(n, p(1)), g(n, x(1)));
  Monomial xp = Monomial::generator(x(1)).with_exponent(p(1), 1);
  EXPECT_EQ(px, SuperForm::term(n, xp, 1));

  // Both odd: one transposition.
  const SuperForm dxp = mul(g(n, dx(1)), g(n, p(1)));
  Monomial pdx = Monomial::generator(p(1)).with_exponent(dx(1), 1);
  EXPECT_EQ(dxp, SuperForm::term(n, pdx, -1));
  EXPECT_EQ(dxp, oracle::mul(g(n, dx(1)), g(n, p(1))));
}

TEST(Mul, ContextMismatch) {
  EXPECT_THROW(mul(g(1, x(1)), g(2, x(1))), ContextMismatch);
  EXPECT_THROW(g(1, x(1)) + g(2, x(1)), ContextMismatch);
}

TEST(Mul, SignConsistencyOverAllGeneratorPairs) {
  for (int n = 1; n <= 3; ++n)
    for (GeneratorId a : all_generators(n))
      for (GeneratorId b : all_generators(n)) {
        const int sign = (is_odd(a.kind) && is_odd(b.kind)) ? -1 : 1;
        EXPECT_EQ(mul(g(n, a), g(n, b)), mul(g(n, b), g(n, a)) * Scalar(sign))
            << to_string(a) << " " << to_string(b);
      }
}

TEST(Mul, AgreesWithBubbleSortOracle) {
  const int n = 2;
  const auto monos = monomials_up_to_total(n, 3);
  for (const auto& a : monos)
    for (const auto& b : monos) {
      const SuperForm fa = SuperForm::term(n, a), fb = SuperForm::term(n, b);
      ASSERT_EQ(mul(fa, fb), oracle::mul(fa, fb)) << print(fa) << " * " << print(fb);
    }
}

TEST(Mul, AssociativeAndDistributive) {
  const int n = 2;
  const auto small = monomials_up_to_total(n, 2);
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small) {
        const SuperForm fa = SuperForm::term(n, a), fb = SuperForm::term(n, b), fc = SuperForm::term(n, c);
        ASSERT_EQ(mul(mul(fa, fb), fc), mul(fa, mul(fb, fc)));
        ASSERT_EQ(mul(fa, fb + fc), mul(fa, fb) + mul(fa, fc));
      }
  // Sampled triples up to total degree 4 each.
  const auto big = monomials_up_to_total(n, 4);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, big.size() - 1);
  for (int t = 0; t < 3000; ++t) {
    const SuperForm fa = SuperForm::term(n, big[pick(rng)]) * Scalar(2);
    const SuperForm fb = SuperForm::term(n, big[pick(rng)]) - SuperForm::term(n, big[pick(rng)]);
    const SuperForm fc = SuperForm::term(n, big[pick(rng)]);
    ASSERT_EQ(mul(mul(fa, fb), fc), mul(fa, mul(fb, fc)));
    ASSERT_EQ(mul(fa + fb, fc), mul(fa, fc) + mul(fb, fc));
  }
}

TEST(PartialLeft, Examples) {
  const SuperForm xp = g(1, x(1)) * g(1, p(1));
  EXPECT_EQ(partial_left(p(1), xp), g(1, x(1)));
  EXPECT_EQ(partial_left(x(1), pow(g(1, x(1)), 2)), g(1, x(1)) * Scalar(2));
  const SuperForm p1p2 = g(2, p(1)) * g(2, p(2));
  EXPECT_EQ(partial_left(p(2), p1p2), -g(2, p(1)));
  EXPECT_TRUE(partial_left(p(2), g(2, x(1))).is_zero());
}

TEST(PartialLeft, AgreesWithOracleAndIsGradedDerivation) {
  const int n = 2;
  const auto monos = monomials_up_to_total(n, 3);
  for (GeneratorId gen : all_generators(n)) {
    const int gp = is_odd(gen.kind) ? 1 : 0;
    for (const auto& a : monos) {
      const SuperForm fa = SuperForm::term(n, a);
      ASSERT_EQ(partial_left(gen, fa), oracle::partial(gen, fa));
      for (const auto& b : monos) {
        if (b.degrees().total() > 2) continue;
        const SuperForm fb = SuperForm::term(n, b);
        const int sign = (gp * a.parity()) % 2 ? -1 : 1;
        ASSERT_EQ(partial_left(gen, mul(fa, fb)),
                  mul(partial_left(gen, fa), fb) + mul(fa, partial_left(gen, fb)) * Scalar(sign));
      }
    }
  }
}

TEST(Contract, Examples) {
  EXPECT_EQ(contract(x(1), g(1, dx(1))), SuperForm::constant(1, 1));
  EXPECT_TRUE(contract(p(1), g(1, dx(1))).is_zero());
  EXPECT_EQ(contract(x(1), g(1, dx(1)) * g(1, dp(1))), g(1, dp(1)));
  EXPECT_THROW(contract(dx(1), g(1, dx(1))), InvalidArgument);
  EXPECT_THROW(contract(dp(1), g(1, dx(1))), InvalidArgument);
}

TEST(Contract, OddContractionSquaresToZero) {
  const int n = 3;
  for (const auto& m : monomials_up_to_total(n, 4)) {
    const SuperForm f = SuperForm::term(n, m);
    for (int i = 1; i <= n; ++i) ASSERT_TRUE(contract(x(i), contract(x(i), f)).is_zero());
  }
}

TEST(Degrees, Examples) {
  Monomial a = Monomial::generator(x(1)).with_exponent(x(1), 2).with_exponent(p(1), 1);
  EXPECT_EQ(degrees(a), (MultiDegree{2, 1, 0, 0}));
  EXPECT_EQ(degrees(a).auxdeg(), 0);

  Monomial b = Monomial::generator(dx(1)).with_exponent(dp(1), 1);
  EXPECT_EQ(degrees(b), (MultiDegree{0, 0, 1, 1}));
  EXPECT_EQ(degrees(b).auxdeg(), 0);
  EXPECT_EQ(degrees(b).formdeg(), 2);

  Monomial c = Monomial::generator(dx(1)).with_exponent(dx(2), 1);
  EXPECT_EQ(degrees(c), (MultiDegree{0, 0, 2, 0}));
  EXPECT_EQ(degrees(c).auxdeg(), 2);
  EXPECT_EQ(degrees(c).parity(), 0);
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(g(1, x(1)), CoordinateChange::identity(1)), g(1, x(1)));

  CoordinateChange c = CoordinateChange::identity(2);
  c.xprime[1] = g(2, x(2)) + pow(g(2, x(1)), 2);
  EXPECT_EQ(substitute(g(2, dx(1)), c), g(2, dx(1)));
  EXPECT_EQ(substitute(g(2, dx(2)), c), g(2, dx(2)) + g(2, x(1)) * g(2, dx(1)) * Scalar(2));
}

TEST(Substitute, IdentityHomomorphismAndChainRule) {
  const int n = 2;
  CoordinateChange c = CoordinateChange::identity(n);
  c.xprime[0] = g(n, x(1)) * Scalar(2) + SuperForm::constant(n, 1);
  c.xprime[1] = g(n, x(2)) + pow(g(n, x(1)), 2);
  c.pprime[0] = g(n, p(1)) * ratio(1, 2) - g(n, x(1)) * g(n, p(2));
  const auto monos = monomials_up_to_total(n, 3);
  for (const auto& a : monos) {
    const SuperForm fa = SuperForm::term(n, a);
    ASSERT_EQ(substitute(fa, CoordinateChange::identity(n)), fa);
    ASSERT_EQ(substitute(d(fa), c), d(substitute(fa, c))) << print(fa);
    for (const auto& b : monos) {
      if (b.degrees().total() > 2) continue;
      const SuperForm fb = SuperForm::term(n, b);
      ASSERT_EQ(substitute(mul(fa, fb), c), mul(substitute(fa, c), substitute(fb, c)));
    }
  }
}

TEST(Substitute, RejectsInvalidChanges) {
  CoordinateChange c = CoordinateChange::identity(2);
  c.xprime[0] = g(2, x(1)) + g(2, p(2));  // mixed parity
  EXPECT_THROW(substitute(g(2, x(1)), c), InvalidCoordinateChange);
  c = CoordinateChange::identity(2);
  c.pprime[0] = g(2, dx(1));
  EXPECT_THROW(substitute(g(2, x(1)), c), InvalidCoordinateChange);
  c = CoordinateChange::identity(2);
  c.pprime.pop_back();
  EXPECT_THROW(substitute(g(2, x(1)), c), InvalidCoordinateChange);
  EXPECT_THROW(substitute(g(1, x(1)), CoordinateChange::identity(2)), ContextMismatch);
}
