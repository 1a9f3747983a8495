#include <gtest/gtest.h>

#include <random>

#include "macaulay/reduce.hpp"
#include "support.hpp"

using namespace macaulay;
using support::ring2;

TEST(Reduce, NormalFormOfX1ToTheFourth) {
  auto r = ring2();
  Reducer red(support::total(2), r.field(), support::grobsym(), ComplementPolicy::Orthogonal);
  auto m = r.parse_element("x1^4", 1);
  EXPECT_EQ(r.format(red.normal_form(m)), "1/2*x1^2 - 1/2*x2^2 - 1/2");
  EXPECT_TRUE(red.is_normal_form(red.normal_form(m)));
}

TEST(Reduce, NormalFormOfNormalFormIsFixed) {
  auto r = ring2();
  Reducer red(support::total(2), r.field(), support::grobsym(), ComplementPolicy::Orthogonal);
  auto m = r.parse_element("x1 - x2", 1);
  auto trace = red.reduce(m, ReductionMode::Complement);
  EXPECT_EQ(trace.final, m);
  EXPECT_TRUE(trace.steps.empty());
}

TEST(Reduce, SpanModeStopsOutsideW) {
  auto r = ring2();
  Reducer red(support::total(2), r.field(), support::grobsym(), ComplementPolicy::Pivot);
  EXPECT_FALSE(red.reduce_step(r.parse_element("x1*x2", 1), ReductionMode::Span).has_value());
  auto step = red.reduce_step(r.parse_element("x1^2 + x2^2 + x1", 1), ReductionMode::Span);
  ASSERT_TRUE(step.has_value());
  EXPECT_EQ(r.format(*step), "x1 + 1");
}

TEST(Reduce, MembersReduceToZeroInBothModes) {
  auto gens = support::grobsym();
  auto g = support::total(2);
  std::mt19937_64 rng(51);
  for (auto policy : {ComplementPolicy::Pivot, ComplementPolicy::Orthogonal}) {
    Reducer red(g, gens[0].field(), gens, policy);
    for (int i = 0; i < 60; ++i) {
      auto m = support::random_member(rng, gens);
      EXPECT_TRUE(red.reduce(m, ReductionMode::Span).final.is_zero());
      EXPECT_TRUE(red.reduce(m, ReductionMode::Complement).final.is_zero());
    }
  }
}

TEST(Reduce, TracesDescendAndStayBelowDegree) {
  auto gens = support::grobsym();
  auto g = support::total(2);
  Reducer red(g, gens[0].field(), gens, ComplementPolicy::Orthogonal);
  std::mt19937_64 rng(52);
  RandomElementOptions o;
  o.max_degree = 7;
  o.max_terms = 6;
  for (int i = 0; i < 80; ++i) {
    auto m = random_element(rng, 1, 2, gens[0].field(), o);
    if (m.is_zero()) continue;
    auto top = degree(m, g);
    for (auto mode : {ReductionMode::Span, ReductionMode::Complement}) {
      auto trace = red.reduce(m, mode);
      for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& st = trace.steps[k];
        EXPECT_LE(g.compare(st.degree, top), 0);
        if (k > 0) EXPECT_LT(g.compare(st.degree, trace.steps[k - 1].degree), 0);
        for (const auto& t : st.terms) {
          auto lf = leading_form(gens[t.index], g).element.times(t.multiplier, t.coefficient);
          EXPECT_EQ(degree(lf, g), st.degree);
        }
      }
      // m - sum representation_i * x_i is the remainder.
      EXPECT_EQ(m - combine(trace.representation, gens), trace.final);
    }
  }
}

TEST(Reduce, ModesAgreeOnZeroTest) {
  auto gens = support::grobsym();
  auto g = support::total(2);
  Reducer red(g, gens[0].field(), gens, ComplementPolicy::Orthogonal);
  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    auto m = support::random_member(rng, gens);
    if (i % 2) m += random_element(rng, 1, 2, gens[0].field());
    EXPECT_EQ(red.reduce(m, ReductionMode::Span).final.is_zero(),
              red.reduce(m, ReductionMode::Complement).final.is_zero());
  }
}

TEST(Reduce, NormalFormIsConstantOnCosets) {
  auto gens = support::grobsym();
  auto g = support::total(2);
  std::mt19937_64 rng(54);
  for (auto policy : {ComplementPolicy::Pivot, ComplementPolicy::Orthogonal}) {
    Reducer red(g, gens[0].field(), gens, policy);
    for (int i = 0; i < 40; ++i) {
      auto m = random_element(rng, 1, 2, gens[0].field());
      EXPECT_EQ(red.normal_form(m), red.normal_form(m + support::random_member(rng, gens)));
    }
  }
}

TEST(Reduce, AddInvalidatesCache) {
  auto r = ring2();
  auto g = support::total(2);
  Reducer red(g, r.field(), {r.parse_element("x1", 1)}, ComplementPolicy::Pivot);
  auto before = red.version();
  EXPECT_FALSE(red.reduces_to_zero(r.parse_element("x2^2", 1)));
  red.add(r.parse_element("x2", 1));
  EXPECT_GT(red.version(), before);
  EXPECT_TRUE(red.reduces_to_zero(r.parse_element("x2^2 + x1*x2", 1)));
  EXPECT_THROW(red.add(ModuleElement(1, 2, r.field())), UsageError);
}

TEST(Reduce, PrimeCharacteristicPivot) {
  auto f = Field::prime(32003);
  auto r = ring2(f);
  Reducer red(support::total(2), f, support::grobsym(f), ComplementPolicy::Pivot);
  auto nf = red.normal_form(r.parse_element("x1^4", 1));
  EXPECT_TRUE(red.is_normal_form(nf));
  EXPECT_TRUE(red.reduces_to_zero(r.parse_element("x1^4", 1) - nf));
}
