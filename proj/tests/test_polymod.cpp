#include <gtest/gtest.h>

#include <random>

#include "macaulay/error.hpp"
#include "support.hpp"

using namespace macaulay;
using support::ring2;

namespace {

oracle::Poly<mpq_class> oracle_product(const oracle::Poly<mpq_class>& a, const oracle::Poly<mpq_class>& b) {
  oracle::Poly<mpq_class> out;
  for (const auto& [e, c] : a) oracle::add_scaled(out, b, e, c);
  return out;
}

}  // namespace

TEST(Polymod, ParseAndFormat) {
  auto r = ring2();
  EXPECT_EQ(r.format(r.parse_polynomial("x2^2 + x1^2 - 1")), "x1^2 + x2^2 - 1");
  EXPECT_EQ(r.format(r.parse_polynomial("(x1 - x2)*(x1 + x2)")), "x1^2 - x2^2");
  EXPECT_EQ(r.format(r.parse_polynomial("x1^4/2 - 3/4")), "1/2*x1^4 - 3/4");
  EXPECT_EQ(r.format(r.parse_polynomial("x1 - x1")), "0");
  EXPECT_EQ(r.format(r.parse_polynomial("-(x1 + 1)^2")), "-x1^2 - 2*x1 - 1");
}

TEST(Polymod, SyntaxErrorsCarryPositions) {
  auto r = ring2();
  try {
    r.parse_polynomial("x1 + x3 + 1", 4);
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.message(), "unknown variable x3");
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 6u);
  }
  try {
    r.parse_polynomial("x1^y");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.message(), "malformed exponent");
  }
  EXPECT_THROW(r.parse_polynomial("x1 +"), SyntaxError);
  EXPECT_THROW(r.parse_polynomial("(x1"), SyntaxError);
  EXPECT_THROW(r.parse_polynomial("x1/x2"), SyntaxError);
  EXPECT_THROW(r.parse_polynomial("x1/0"), SyntaxError);
}

TEST(Polymod, FormatParseRoundTrip) {
  auto r = support::ring3();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto p = random_polynomial(rng, 3, r.field());
    EXPECT_EQ(r.parse_polynomial(r.format(p)), p);
  }
}

TEST(Polymod, ProductMatchesOracle) {
  std::mt19937_64 rng(6);
  auto q = Field::rationals();
  for (int i = 0; i < 200; ++i) {
    auto a = random_polynomial(rng, 3, q), b = random_polynomial(rng, 3, q);
    EXPECT_EQ(oracle::to_q(a * b), oracle_product(oracle::to_q(a), oracle::to_q(b)));
  }
}

TEST(Polymod, RingAxioms) {
  std::mt19937_64 rng(8);
  for (auto f : {Field::rationals(), Field::prime(101)}) {
    for (int i = 0; i < 100; ++i) {
      auto a = random_polynomial(rng, 2, f), b = random_polynomial(rng, 2, f), c = random_polynomial(rng, 2, f);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Polymod, PowerMatchesRepeatedProduct) {
  auto r = ring2();
  auto p = r.parse_polynomial("x1 - 2*x2 + 1");
  auto acc = Polynomial::constant(2, r.field().one());
  for (std::uint32_t k = 0; k < 6; ++k) {
    EXPECT_EQ(p.pow(k), acc);
    acc = acc * p;
  }
}

TEST(Polymod, LeadingFormsUnderTotalDegree) {
  auto r = ring2();
  auto g = support::total(2);
  auto f = r.parse_element("x1^2 + x2^2 - 1", 1);
  auto lf = leading_form(f, g);
  EXPECT_EQ(r.format(lf.element), "x1^2 + x2^2");
  EXPECT_EQ(lf.degree, (Degree{{2}, -1}));
  auto parts = homogeneous_components(f, g);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(r.format(parts[1].element), "-1");
  EXPECT_FALSE(is_homogeneous(f, g));
  EXPECT_THROW(leading_form(ModuleElement(1, 2, r.field()), g), UsageError);
}

TEST(Polymod, LeadingFormUnderDegrevlexIsOneTerm) {
  auto r = ring2();
  auto g = support::drl(2);
  auto f = r.parse_element("x1*x2 + x2^2 + x1^2", 1);
  EXPECT_EQ(r.format(leading_form(f, g).element), "x1^2");
}

TEST(Polymod, ModuleElements) {
  auto r = ring2();
  auto a = r.parse_element("[x1, x2^2]", 2);
  auto b = r.parse_element("[1, -x1]", 2);
  EXPECT_EQ(r.format(a + b), "[x1 + 1, x2^2 - x1]");
  EXPECT_EQ(r.format(r.parse_polynomial("x2") * b), "[x2, -x1*x2]");
  EXPECT_EQ(a.component(1), r.parse_polynomial("x2^2"));
  EXPECT_EQ(ModuleElement::from_components(a.components()), a);
  EXPECT_THROW(r.parse_element("[x1]", 2), SyntaxError);
  std::vector<Polynomial> coords{r.parse_polynomial("x1"), r.parse_polynomial("1")};
  EXPECT_EQ(r.format(combine(coords, {a, b})), "[x1^2 + 1, x1*x2^2 - x1]");
}

TEST(Polymod, NormalizationFixesLeadingCoefficient) {
  auto r = ring2();
  auto g = support::total(2);
  auto f = r.parse_element("-3*x1^2 - 3*x2^2 + 3", 1);
  EXPECT_EQ(r.format(f.normalized(g)), "x1^2 + x2^2 - 1");
  auto fp = RingContext(Field::prime(7), {"x1", "x2"});
  EXPECT_EQ(fp.format(fp.parse_element("3*x1 + 1", 1).normalized(g)), "x1 + 5");
}

TEST(Polymod, DuplicateVariablesRejected) {
  EXPECT_THROW(RingContext(Field::rationals(), {"x", "x"}), UsageError);
  EXPECT_THROW(RingContext(Field::rationals(), {"2x"}), UsageError);
}
