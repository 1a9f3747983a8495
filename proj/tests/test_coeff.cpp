#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "macaulay/coeff.hpp"
#include "macaulay/error.hpp"
#include "oracles.hpp"

using namespace macaulay;

namespace {

// Small exact fraction used as an oracle for rational arithmetic.
struct Frac {
  std::int64_t n, d;
  Frac(std::int64_t a, std::int64_t b) {
    if (b < 0) a = -a, b = -b;
    auto g = std::gcd(a, b);
    n = a / g;
    d = b / g;
  }
  friend Frac operator+(Frac a, Frac b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Frac operator*(Frac a, Frac b) { return Frac(a.n * b.n, a.d * b.d); }
  std::string str() const { return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d); }
};

}  // namespace

TEST(Coeff, RationalRendering) {
  auto q = Field::rationals();
  EXPECT_EQ(q.parse("10/4").to_string(), "5/2");
  EXPECT_EQ(q.parse("-6/3").to_string(), "-2");
  EXPECT_EQ(q.from_int(0).to_string(), "0");
  EXPECT_EQ(q.to_string(), "q");
}

TEST(Coeff, RationalMatchesFractionOracle) {
  auto q = Field::rationals();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 40);
  for (int i = 0; i < 500; ++i) {
    Frac a(num(rng), den(rng)), b(num(rng), den(rng));
    auto sa = q.parse(a.str()), sb = q.parse(b.str());
    EXPECT_EQ((sa + sb).to_string(), (a + b).str());
    EXPECT_EQ((sa * sb).to_string(), (a * b).str());
  }
}

TEST(Coeff, PrimeFieldMatchesModularOracle) {
  auto f = Field::prime(32003);
  oracle::Zp::p = 32003;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> val(-100000, 100000);
  for (int i = 0; i < 500; ++i) {
    auto a = val(rng), b = val(rng);
    oracle::Zp za(a), zb(b);
    auto sa = f.from_int(a), sb = f.from_int(b);
    EXPECT_EQ((sa + sb).residue(), static_cast<std::uint32_t>((za + zb).v));
    EXPECT_EQ((sa - sb).residue(), static_cast<std::uint32_t>((za - zb).v));
    EXPECT_EQ((sa * sb).residue(), static_cast<std::uint32_t>((za * zb).v));
    if (!sb.is_zero()) {
      EXPECT_EQ((sa / sb).residue(), static_cast<std::uint32_t>((za / zb).v));
      EXPECT_TRUE((sb * sb.inverse()).is_one());
    }
  }
}

TEST(Coeff, PrimeFieldParsesFractions) {
  auto f = Field::from_spec("fp:7");
  EXPECT_EQ(f.parse("3/4").residue(), 6u);  // 4 * 6 = 24 = 3 mod 7
  EXPECT_EQ(f.parse("-1").to_string(), "6");
  EXPECT_THROW(f.parse("1/7"), ArithmeticError);
}

TEST(Coeff, LargePrimeNearLimit) {
  auto f = Field::prime(2147483647);
  auto a = f.from_int(2147483646);
  EXPECT_TRUE((a * a).is_one());
  EXPECT_TRUE((a.inverse() * a).is_one());
}

TEST(Coeff, FieldValidation) {
  EXPECT_THROW(Field::prime(4), UsageError);
  EXPECT_THROW(Field::prime(1), UsageError);
  EXPECT_THROW(Field::prime(4294967311ull), UsageError);
  EXPECT_THROW(Field::from_spec("r"), UsageError);
  EXPECT_THROW(Field::from_spec("fp:x"), UsageError);
  EXPECT_EQ(Field::from_spec("q"), Field::rationals());
  EXPECT_EQ(Field::from_spec("fp:5").characteristic(), 5u);
}

TEST(Coeff, ZeroHasNoInverse) {
  EXPECT_THROW(Field::rationals().zero().inverse(), ArithmeticError);
  EXPECT_THROW(Field::prime(5).zero().inverse(), ArithmeticError);
}

TEST(Coeff, MixedFieldsRejected) {
  EXPECT_ANY_THROW(Field::rationals().one() + Field::prime(5).one());
  EXPECT_ANY_THROW(Field::prime(7).one() * Field::prime(5).one());
}

TEST(Coeff, IsPrime) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(32003));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(32001));
  for (std::uint64_t n = 2; n < 300; ++n) {
    bool brute = true;
    for (std::uint64_t k = 2; k * k <= n; ++k) brute = brute && n % k != 0;
    EXPECT_EQ(is_prime(n), brute) << n;
  }
}

TEST(Coeff, HashAgreesWithEquality) {
  auto q = Field::rationals();
  EXPECT_EQ(q.parse("2/4").hash(), q.parse("1/2").hash());
  EXPECT_EQ(Field::prime(7).from_int(9).hash(), Field::prime(7).from_int(2).hash());
}
