#include <gtest/gtest.h>

#include <random>

#include "macaulay/apps.hpp"
#include "support.hpp"

using namespace macaulay;
using support::ring2;

namespace {

ModuleGrading total_with_t(std::size_t n) { return support::total(n); }

}  // namespace

TEST(Apps, EliminationMatchesLexOracle) {
  auto r = ring2();
  auto gens = support::parse_all(r, {"x1^2 + x2^2 - 1", "x1 - x2"});
  auto result = eliminate(gens, {false, true}, r.field());
  ASSERT_FALSE(result.kept.empty());
  for (const auto& x : result.kept) EXPECT_TRUE(uses_only(x, {false, true}));

  // Oracle: lex basis with x1 > x2, keep the elements free of x1.
  std::vector<oracle::Poly<mpq_class>> og;
  for (const auto& x : gens) og.push_back(oracle::to_q(x));
  std::vector<oracle::Poly<mpq_class>> expect;
  for (const auto& p : oracle::groebner(og, oracle::Order::Lex)) {
    if (std::all_of(p.begin(), p.end(), [](const auto& t) { return t.first[0] == 0; })) expect.push_back(p);
  }
  std::vector<oracle::Poly<mpq_class>> got;
  for (const auto& x : result.kept) got.push_back(oracle::to_q(x));
  auto gb_expect = oracle::groebner(expect, oracle::Order::Lex);
  auto gb_got = oracle::groebner(got, oracle::Order::Lex);
  for (const auto& p : got) EXPECT_TRUE(oracle::in_ideal(p, gb_expect, oracle::Order::Lex));
  for (const auto& p : expect) EXPECT_TRUE(oracle::in_ideal(p, gb_got, oracle::Order::Lex));
  auto two = oracle::to_q(r.parse_polynomial("2*x2^2 - 1"));
  EXPECT_TRUE(oracle::in_ideal(two, gb_got, oracle::Order::Lex));
  EXPECT_TRUE(oracle::in_ideal(got[0], oracle::groebner<mpq_class>({two}, oracle::Order::Lex), oracle::Order::Lex));
}

TEST(Apps, EliminatedElementsLieInTheModule) {
  auto r = support::ring3();
  auto gens = support::parse_all(r, {"x1 - x2*x3", "x2 - x3^2"});
  auto result = eliminate(gens, {false, true, true}, r.field());
  auto full = buchberger_algorithm(gens, support::drl(3), r.field());
  Reducer red(support::drl(3), r.field(), full.elements, ComplementPolicy::Pivot);
  ASSERT_FALSE(result.kept.empty());
  for (const auto& x : result.kept) {
    EXPECT_TRUE(uses_only(x, {false, true, true}));
    EXPECT_TRUE(red.reduces_to_zero(x));
  }
}

TEST(Apps, SchreyerSyzygiesAreExact) {
  auto r = support::ring3();
  for (auto texts : std::vector<std::vector<std::string>>{
           {"x1^2 + x2^2 - 1", "x1^2*x2^2 - 1"}, {"x1*x2 - x3", "x2*x3 - x1", "x1*x3 - x2"}, {"x1", "x2", "x3"}}) {
    auto gens = support::parse_all(r, texts);
    for (auto g : {support::total(3), support::drl(3)}) {
      auto basis = buchberger_algorithm(gens, g, r.field());
      auto syz = schreyer_syzygy_basis(basis);
      for (const auto& s : syz.elements) EXPECT_TRUE(apply_syzygy(s, basis.elements).is_zero());
      if (!syz.elements.empty()) EXPECT_TRUE(buchberger_criterion(syz.elements, syz.grading, r.field()).passed);
    }
  }
}

TEST(Apps, KoszulSyzygy) {
  auto r = ring2();
  auto basis = buchberger_algorithm(support::parse_all(r, {"x1", "x2"}), support::total(2), r.field());
  auto syz = schreyer_syzygy_basis(basis);
  ASSERT_EQ(syz.elements.size(), 1u);
  EXPECT_TRUE(support::same_span(syz.elements, {r.parse_element("[x2, -x1]", 2)}));
}

TEST(Apps, HilbertMatchesBruteForce) {
  auto r = support::ring3();
  std::vector<std::vector<std::string>> ideals{
      {"x1^2", "x2^3"},
      {"x1*x2", "x2*x3", "x1*x3"},
      {"x1^2 - x2*x3", "x1*x2"},
      {"x1^3 - x2^3", "x2^2*x3 - x1^3"},
      {"x1^2 - x2^2", "x2^2 - x3^2", "x1*x2*x3"},
  };
  auto coarse = support::total(3);
  auto fine = degrevlex_refinement(coarse);
  std::vector<Degree> degrees;
  for (int b = 0; b <= 8; ++b) degrees.push_back(Degree{{b}, -1});
  for (const auto& texts : ideals) {
    auto gens = support::parse_all(r, texts);
    auto table = hilbert_function(gens, coarse, fine, r.field(), degrees);
    std::vector<oracle::Poly<mpq_class>> og;
    for (const auto& x : gens) og.push_back(oracle::to_q(x));
    for (int b = 0; b <= 8; ++b) EXPECT_EQ(table.values[b], oracle::slice_dimension(og, 3, b)) << texts[0] << " b=" << b;
  }
}

TEST(Apps, HilbertRejectsInhomogeneousInput) {
  auto coarse = support::total(2);
  EXPECT_THROW(hilbert_function(support::grobsym(), coarse, degrevlex_refinement(coarse), Field::rationals(), {}),
               UsageError);
}

TEST(Apps, HomogenizationRoundTrip) {
  std::mt19937_64 rng(71);
  HomogenizationContext ctx(3, 2, {0});
  for (int i = 0; i < 100; ++i) {
    auto m = append_variable(random_element(rng, 1, 2, Field::rationals()));
    if (m.is_zero()) continue;
    auto h = ctx.homogenize(m);
    EXPECT_TRUE(is_homogeneous(h, ctx.grading()));
    EXPECT_EQ(ctx.dehomogenize(h), m);
  }
}

TEST(Apps, HomogenizationWithShifts) {
  RingContext r(Field::rationals(), {"x1", "x2", "t"});
  HomogenizationContext ctx(3, 2, {0, 2});
  auto m = r.parse_element("[x1^3 + 1, x1]", 2);
  auto h = ctx.homogenize(m);
  EXPECT_TRUE(is_homogeneous(h, ctx.grading()));
  EXPECT_EQ(ctx.dehomogenize(h), m);
  EXPECT_THROW(ctx.homogenize(r.parse_element("[t, 0]", 2)), UsageError);
  EXPECT_THROW(HomogenizationContext(3, 2, {-1}), UsageError);
}

TEST(Apps, HomogenizationEquivalence) {
  RingContext r(Field::rationals(), {"x1", "x2", "t"});
  HomogenizationContext ctx(3, 2, {0});
  std::vector<ModuleElement> hbasis;
  for (const auto& x : support::grobsym()) hbasis.push_back(append_variable(x));
  EXPECT_TRUE(verify_homogenization_equivalence(hbasis, ctx, r.field()).h_basis);
  EXPECT_TRUE(verify_homogenization_equivalence({hbasis[0]}, ctx, r.field()).h_basis);

  // Coprime leading forms in two variables form a regular sequence, so this pair is still
  // an H-basis.
  auto coprime = support::parse_all(r, {"x1^2*x2^2 - x1", "x1^2 + x2^2 - 1"});
  EXPECT_TRUE(verify_homogenization_equivalence(coprime, ctx, r.field()).h_basis);

  // Sharing x1^2*x2 in the leading forms breaks it: the witness (1, -x2) leaves x2 - x1.
  auto bad = support::parse_all(r, {"x1^2*x2^2 - x1", "x1^2*x2 - 1"});
  auto report = verify_homogenization_equivalence(bad, ctx, r.field());
  EXPECT_FALSE(report.h_basis);
  ASSERT_TRUE(report.criterion.remainder.has_value());
  EXPECT_TRUE(support::same_span({*report.criterion.remainder}, {r.parse_element("x2 - x1", 1)}));

  // Membership sampling: m^H lies in (m_i^H) for members m of an H-basis ideal.
  std::vector<ModuleElement> hs;
  for (const auto& x : hbasis) hs.push_back(ctx.homogenize(x));
  auto graded = buchberger_algorithm(hs, ctx.grading(), r.field());
  Reducer red(ctx.grading(), r.field(), graded.elements, ComplementPolicy::Pivot);
  std::mt19937_64 rng(72);
  for (int i = 0; i < 30; ++i) {
    auto m = append_variable(support::random_member(rng, support::grobsym(), 2));
    if (m.is_zero()) continue;
    EXPECT_TRUE(red.reduces_to_zero(ctx.homogenize(m)));
  }
  // The failing pair's homogenizations do not generate: the criterion remainder is a
  // member whose homogenization escapes.
  std::vector<ModuleElement> bad_h;
  for (const auto& x : bad) bad_h.push_back(ctx.homogenize(x));
  auto bad_graded = buchberger_algorithm(bad_h, ctx.grading(), r.field());
  Reducer bad_red(ctx.grading(), r.field(), bad_graded.elements, ComplementPolicy::Pivot);
  EXPECT_FALSE(bad_red.reduces_to_zero(ctx.homogenize(*report.criterion.remainder)));
}

TEST(Apps, DegrevlexRefinementShape) {
  auto coarse = ModuleGrading::free_module(RingGrading::total_degree(2), 2, {{1}, {0}});
  auto fine = degrevlex_refinement(coarse);
  EXPECT_EQ(fine.tie(), TieOrder::TermOverPosition);
  EXPECT_EQ(fine.generator_degree(0).value, (DegreeVector{1, 0}));
  EXPECT_THROW(degrevlex_refinement(support::drl(2)), UsageError);
  (void)total_with_t;
}
