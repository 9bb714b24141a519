#include <gtest/gtest.h>

#include <random>

#include "bvforms/cohomology.hpp"
#include "bvforms/errors.hpp"
#include "bvforms/expression.hpp"
#include "bvforms/operators.hpp"
#include "word_oracle.hpp"

using namespace bvf;

namespace {

std::size_t error_position(std::string_view text, std::optional<int> n = std::nullopt) {
  try {
    parse_hbar(text, n);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no ParseError for '" << text << "'";
  return 0;
}

std::string token(GeneratorId g) { return to_string(g); }

}  // namespace

TEST(Parse, Examples) {
  const SuperForm w = parse("dp1*dx1", 1);
  EXPECT_EQ(w, omega(1));
  EXPECT_EQ(print(w), "dx1*dp1");
  EXPECT_EQ(print(parse("dx1*p1")), "-p1*dx1");

  const SuperForm f = parse("3/2*x1^2*p1");
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.terms().begin()->second, ratio(3, 2));
  EXPECT_EQ(print(f), "3/2*x1^2*p1");

  EXPECT_TRUE(parse("dx1*dx1").is_zero());
  EXPECT_EQ(parse("(x1 + p1)^2", 1), parse("x1^2 + 2*x1*p1", 1));
  EXPECT_EQ(parse("-(x1 - 2/4)", 1), parse("1/2 - x1", 1));
  EXPECT_EQ(parse("  x2 * dp1 ").n(), 2);
  EXPECT_EQ(parse("4/6").terms().begin()->second, ratio(2, 3));
}

TEST(Print, Examples) {
  EXPECT_EQ(print(SuperForm(1)), "0");
  EXPECT_EQ(print(omega(2)), "dx1*dp1 + dx2*dp2");
  EXPECT_EQ(print(SuperForm::constant(1, ratio(-1, 3))), "-1/3");
  EXPECT_EQ(print(HbarForm(1)), "0");
  EXPECT_EQ(print(parse_hbar("x1*h^2*3/2 - h*p1 + dx1", 1)), "dx1 - h*p1 + 3/2*h^2*x1");
}

TEST(Parse, NormalizationAgreesWithWordOracle) {
  const int n = 2;
  std::vector<GeneratorId> gens;
  for (int i = 1; i <= n; ++i)
    for (GeneratorId g : {x(i), p(i), dx(i), dp(i)}) gens.push_back(g);
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(0, 5);
  for (int t = 0; t < 2000; ++t) {
    oracle::Word w;
    std::string text = "1";
    const int k = len(rng);
    for (int i = 0; i < k; ++i) {
      w.push_back(gens[pick(rng)]);
      text += "*" + token(w.back());
    }
    ASSERT_EQ(parse(text, n), oracle::normalize(n, {{Scalar(1), w}})) << text;
  }
}

TEST(Parse, RoundTripOnRandomForms) {
  for (int n = 1; n <= 3; ++n) {
    const auto monos = monomials_up_to_total(n, 4);
    std::mt19937_64 rng(100 + n);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7), terms(0, 6);
    for (int t = 0; t < 500; ++t) {
      SuperForm f(n);
      for (int i = terms(rng); i > 0; --i) f += SuperForm::term(n, monos[pick(rng)], ratio(num(rng), den(rng)));
      const std::string text = print(f);
      ASSERT_EQ(parse(text, n), f) << text;
      ASSERT_EQ(print(parse(text, n)), text);
    }
  }
}

TEST(Parse, HbarLevels) {
  const HbarForm z = parse_hbar("p1*dx1 - h + h^3*x1*h", 1);
  ASSERT_EQ(z.levels().size(), 5u);
  EXPECT_EQ(z.level(0), parse("p1*dx1", 1));
  EXPECT_EQ(z.level(1), SuperForm::constant(1, -1));
  EXPECT_TRUE(z.level(2).is_zero());
  EXPECT_EQ(z.level(4), parse("x1", 1));
  EXPECT_TRUE(z.level(9).is_zero());
  EXPECT_EQ(parse_hbar(print(z), 1), z);
  EXPECT_TRUE(parse_hbar("h - h", 1).is_zero());
  EXPECT_THROW(parse("x1*h", 1), ParseError);
}

TEST(Parse, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("x1 +"), 4u);
  EXPECT_EQ(error_position("x1 ** p1"), 4u);
  EXPECT_EQ(error_position("(x1 + p1"), 8u);
  EXPECT_EQ(error_position("y1"), 0u);
  EXPECT_EQ(error_position("x0"), 1u);
  EXPECT_EQ(error_position("3/0"), 2u);
  EXPECT_EQ(error_position("dx1 $ 2"), 4u);
  EXPECT_EQ(error_position("x1^"), 3u);
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("x1 p1"), 3u);

  try {
    parse("x1 +");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos);
  }
}

TEST(Parse, IndexOutOfRange) {
  EXPECT_THROW(parse("x3", 2), ParseError);
  EXPECT_THROW(parse("dp9"), ParseError);
  EXPECT_NO_THROW(parse("x2", 2));
  EXPECT_EQ(max_generator_index("x1*dp3 + 2"), 3);
  EXPECT_EQ(max_generator_index("7/2"), 0);
}

TEST(Json, SuperFormRoundTrip) {
  const SuperForm f = parse("3/2*x1*dx1 - p1*p2 + 5", 2);
  const nlohmann::json j = to_json(f);
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 3u);
  for (const auto& e : j) {
    ASSERT_TRUE(e["monomial"].is_string());
    ASSERT_NE(e["coeff"].get<std::string>().find('/'), std::string::npos);
  }
  bool seen = false;
  for (const auto& e : j)
    if (e["monomial"] == "x1*dx1") {
      seen = true;
      EXPECT_EQ(e["coeff"], "3/2");
    }
  EXPECT_TRUE(seen);
  EXPECT_EQ(superform_from_json(j, 2), f);
  EXPECT_TRUE(to_json(SuperForm(2)).empty());
}
