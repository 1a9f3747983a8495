#include <gtest/gtest.h>

#include <random>

#include "macaulay/error.hpp"
#include "macaulay/grading.hpp"
#include "oracles.hpp"

using namespace macaulay;

namespace {

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp = 4) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = static_cast<std::uint32_t>(e(rng));
  return Monomial(v);
}

oracle::Exp exps(const Monomial& m) { return oracle::Exp(m.exponents().begin(), m.exponents().end()); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Grading, TotalDegree) {
  auto g = RingGrading::total_degree(3);
  EXPECT_EQ(g.degree(Monomial({2, 1, 0})), DegreeVector{3});
  EXPECT_EQ(g.dimension(), 1u);
  EXPECT_FALSE(g.separates_monomials());
}

TEST(Grading, DegrevlexMatchesOracle) {
  auto g = RingGrading::degrevlex(3);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto a = random_monomial(rng, 3), b = random_monomial(rng, 3);
    int c = g.compare(g.degree(a), g.degree(b));
    bool expect_greater = oracle::greater(exps(a), exps(b), oracle::Order::Grevlex);
    bool expect_less = oracle::greater(exps(b), exps(a), oracle::Order::Grevlex);
    EXPECT_EQ(c > 0, expect_greater);
    EXPECT_EQ(c < 0, expect_less);
    EXPECT_EQ(compare_degrevlex(a, b), c);
  }
}

TEST(Grading, LexMatchesOracle) {
  auto g = RingGrading::lex(3);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 2000; ++i) {
    auto a = random_monomial(rng, 3), b = random_monomial(rng, 3);
    int c = g.compare(g.degree(a), g.degree(b));
    EXPECT_EQ(c > 0, oracle::greater(exps(a), exps(b), oracle::Order::Lex));
  }
}

TEST(Grading, EliminationKeepsChosenVariables) {
  auto g = RingGrading::elimination({false, true});
  EXPECT_EQ(g.degree(Monomial({1, 0})), (DegreeVector{0, 1}));
  EXPECT_EQ(g.degree(Monomial({0, 1})), (DegreeVector{1, 0}));
  // Anything involving x1 outranks every pure power of x2.
  EXPECT_GT(g.compare(g.degree(Monomial({1, 0})), g.degree(Monomial({0, 9}))), 0);
  EXPECT_GT(g.compare(g.degree(Monomial({0, 3})), g.degree(Monomial({0, 2}))), 0);
}

TEST(Grading, MonomialsOfDegreeCounts) {
  auto g = RingGrading::total_degree(3);
  for (int b = 0; b <= 6; ++b) {
    auto ms = g.monomials_of_degree(DegreeVector{b});
    EXPECT_EQ(ms.size(), binomial(b + 2, 2));
    for (const auto& m : ms) EXPECT_EQ(static_cast<int>(m.total_degree()), b);
  }
  auto d = RingGrading::degrevlex(3);
  auto one = d.monomials_of_degree(DegreeVector{1, 2, 0});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], Monomial({1, 2, 0}));
}

TEST(Grading, MonoidOrderChecks) {
  EXPECT_TRUE(verify_monoid_order(RingGrading::total_degree(3), 100).passed());
  EXPECT_TRUE(verify_monoid_order(RingGrading::degrevlex(4), 100).passed());
  EXPECT_TRUE(verify_monoid_order(RingGrading::lex(3), 100).passed());
  EXPECT_TRUE(verify_monoid_order(RingGrading::elimination({true, false, true}), 100).passed());
  EXPECT_TRUE(verify_monoid_order(RingGrading::matrix_order({{1, 1}, {0, -1}}), 100).passed());
  EXPECT_FALSE(verify_monoid_order(RingGrading::matrix_order({{-1, 0}, {0, 1}}), 100).passed());
  EXPECT_FALSE(verify_monoid_order(RingGrading::matrix_order({{1, 1}, {1, 1}}), 100).passed());
}

TEST(Grading, ModuleTieOrders) {
  auto ring = RingGrading::degrevlex(2);
  auto pot = ModuleGrading::free_module(ring, 2, {}, TieOrder::PositionOverTerm);
  auto top = ModuleGrading::free_module(ring, 2, {}, TieOrder::TermOverPosition);
  ModuleMonomial a{Monomial({2, 0}), 1}, b{Monomial({0, 1}), 0};
  // Position first: component 0 ranks higher whatever the monomial.
  EXPECT_GT(pot.compare(pot.degree(b), pot.degree(a)), 0);
  EXPECT_GT(top.compare(top.degree(a), top.degree(b)), 0);
  EXPECT_TRUE(verify_monoid_order(pot, 100).passed());
  EXPECT_TRUE(verify_monoid_order(top, 100).passed());
}

TEST(Grading, ShiftsAndMultipliers) {
  auto g = ModuleGrading::free_module(RingGrading::total_degree(2), 2, {{0}, {1}});
  EXPECT_EQ(g.degree(ModuleMonomial{Monomial({1, 0}), 1}).value, DegreeVector{2});
  auto mult = g.multipliers(Degree{{1}, -1}, Degree{{3}, -1});
  EXPECT_EQ(mult.size(), 3u);
  EXPECT_EQ(g.component_monomials(Degree{{2}, -1}).size(), 3u + 2u);
  EXPECT_TRUE(g.multipliers(Degree{{3}, -1}, Degree{{1}, -1}).empty());
}

TEST(Grading, RefinementDegrevlexToTotal) {
  auto map = RefinementMap::between(RingGrading::degrevlex(3), RingGrading::total_degree(3));
  EXPECT_EQ(map.apply(DegreeVector{1, 2, 3}), DegreeVector{6});
  EXPECT_THROW(RefinementMap::between(RingGrading::total_degree(3), RingGrading::degrevlex(3)), UsageError);
}

TEST(Grading, RefinementOfModules) {
  auto coarse = ModuleGrading::free_module(RingGrading::total_degree(2), 2, {{0}, {2}});
  auto fine = ModuleGrading::free_module(RingGrading::degrevlex(2), 2, {{0, 0}, {2, 0}}, TieOrder::TermOverPosition);
  auto map = RefinementMap::between(fine, coarse);
  ModuleMonomial m{Monomial({1, 1}), 1};
  EXPECT_EQ(map.apply(fine.degree(m)), coarse.degree(m));
}

TEST(Grading, DegreeRendering) {
  EXPECT_EQ(to_string(Degree{{4}, -1}), "4");
  EXPECT_EQ(to_string(Degree{{2, 0}, -1}), "(2,0)");
  EXPECT_EQ(to_string(Degree{{2, 0}, 1}), "(2,0)@e2");
}

TEST(Grading, RejectsBadMatrices) {
  EXPECT_THROW(RingGrading::matrix_order({{1, 0}}), UsageError);
  EXPECT_THROW(RingGrading::matrix_order({{1, 0}, {0}}), UsageError);
}
