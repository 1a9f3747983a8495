#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace macaulay {

class Scalar;

// The coefficient field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws UsageError unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  // "q" or "fp:<p>".
  static Field from_spec(std::string_view spec);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  Scalar from_mpq(const mpq_class& value) const;
  // Parses "a" or "a/b" with optional sign.
  Scalar parse(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

// Canonical residue in [0, modulus).
struct Residue {
  std::uint32_t value;
  std::uint32_t modulus;
  friend bool operator==(const Residue&, const Residue&) = default;
};

// An element of the active field. Rationals are kept in lowest terms with positive
// denominator; residues are fully reduced. Arithmetic across fields is a UsageError.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(const mpq_class& q);
  explicit Scalar(Residue r) : value_(r) {}

  bool is_zero() const;
  bool is_one() const;
  std::uint32_t characteristic() const;
  Field field() const;

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }

  // Sign used for printing: residues are never negative.
  bool is_negative() const;

  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void check_same_field(const Scalar& other) const;
  std::variant<mpq_class, Residue> value_;
};

bool is_prime(std::uint64_t n);

}  // namespace macaulay
