#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace macaulay {

// x^alpha for an exponent vector alpha in N^d.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
    Monomial m(nvars);
    m.exps_[index] = power;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  // Precondition: divisor divides *this.
  Monomial quotient(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend Monomial operator*(const Monomial& a, const Monomial& b);

  // Structural (lexicographic on exponents) comparison for use as a map key; not a term order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

// Degree reverse lexicographic comparison: positive when a > b.
int compare_degrevlex(const Monomial& a, const Monomial& b);

// x^alpha e_component in a free module.
struct ModuleMonomial {
  Monomial monomial;
  std::size_t component = 0;

  friend auto operator<=>(const ModuleMonomial&, const ModuleMonomial&) = default;
  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

// Canonical storage order: component ascending, then degrevlex descending.
// Negative when a is stored before b.
int compare_storage(const ModuleMonomial& a, const ModuleMonomial& b);

}  // namespace macaulay
