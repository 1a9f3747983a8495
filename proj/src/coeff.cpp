#include "macaulay/coeff.hpp"

#include <charconv>
#include <functional>

#include "macaulay/error.hpp"

namespace macaulay {

namespace {

std::uint32_t reduce_mod(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw UsageError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw UsageError("malformed integer literal '" + std::string(text) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw UsageError("malformed integer literal '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) throw UsageError("prime modulus must be below 2^31");
  if (!is_prime(p)) throw UsageError("characteristic " + std::to_string(p) + " is not prime");
  return Field(static_cast<std::uint32_t>(p));
}

Field Field::from_spec(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.starts_with("fp:")) {
    std::uint64_t p = 0;
    auto digits = spec.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw UsageError("malformed prime in field spec '" + std::string(spec) + "'");
    }
    return prime(p);
  }
  throw UsageError("unknown coefficient field '" + std::string(spec) + "' (expected q or fp:<p>)");
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
  if (p_ == 0) return Scalar(mpq_class(static_cast<long>(value)));
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar(Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::from_mpq(const mpq_class& value) const {
  if (p_ == 0) return Scalar(value);
  std::uint32_t den = reduce_mod(value.get_den(), p_);
  if (den == 0) throw ArithmeticError("denominator vanishes modulo " + std::to_string(p_));
  std::uint32_t num = reduce_mod(value.get_num(), p_);
  std::uint64_t r = static_cast<std::uint64_t>(num) * inverse_mod(den, p_) % p_;
  return Scalar(Residue{static_cast<std::uint32_t>(r), p_});
}

Scalar Field::parse(std::string_view text) const {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_mpq(mpq_class(parse_integer(text)));
  mpz_class num = parse_integer(text.substr(0, slash));
  mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ArithmeticError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return from_mpq(q);
}

std::string Field::to_string() const { return p_ == 0 ? "q" : "fp:" + std::to_string(p_); }

Scalar::Scalar(const mpq_class& q) : value_(q) {
  std::get<mpq_class>(value_).canonicalize();
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

std::uint32_t Scalar::characteristic() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->modulus;
  return 0;
}

Field Scalar::field() const {
  return is_rational() ? Field::rationals() : Field::prime(characteristic());
}

bool Scalar::is_negative() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) < 0;
  return false;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (characteristic() != other.characteristic()) {
    throw UsageError("arithmetic between elements of different fields");
  }
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1 / *q));
  const auto& r = std::get<Residue>(value_);
  return Scalar(Residue{inverse_mod(r.value, r.modulus), r.modulus});
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(other.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t s = static_cast<std::uint64_t>(r.value) + std::get<Residue>(other.value_).value;
    r.value = static_cast<std::uint32_t>(s % r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(other.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t s = static_cast<std::uint64_t>(r.value) * std::get<Residue>(other.value_).value;
    r.value = static_cast<std::uint32_t>(s % r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (auto* q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  return std::get<Residue>(a.value_) == std::get<Residue>(b.value_);
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

std::size_t Scalar::hash() const {
  return std::hash<std::string>{}(to_string()) ^ (static_cast<std::size_t>(characteristic()) << 1);
}

}  // namespace macaulay
