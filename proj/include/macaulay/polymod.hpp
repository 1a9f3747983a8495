#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "macaulay/coeff.hpp"
#include "macaulay/grading.hpp"
#include "macaulay/monomial.hpp"

namespace macaulay {

// A sparse polynomial in k[x_1..x_d]. Terms are stored degrevlex descending with no zero
// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Scalar>;

  Polynomial(std::size_t nvars, Field field) : nvars_(nvars), field_(field) {}
  static Polynomial constant(std::size_t nvars, const Scalar& c);
  static Polynomial term(const Monomial& m, const Scalar& c);
  static Polynomial variable(std::size_t nvars, std::size_t index, Field field);
  // Merges equal monomials and drops zeros.
  static Polynomial from_terms(std::size_t nvars, Field field, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const Monomial& m) const;
  // -1 for the zero polynomial.
  std::int64_t total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);
  Polynomial times(const Monomial& m, const Scalar& c) const;
  Polynomial pow(std::uint32_t k) const;

  friend bool operator==(const Polynomial&, const Polynomial&);

 private:
  std::size_t nvars_;
  Field field_;
  std::vector<Term> terms_;
};

// An element of the free module R^n (the grading supplies the shifts). Terms are kept in
// storage order: component ascending, then degrevlex descending.
class ModuleElement {
 public:
  using Term = std::pair<ModuleMonomial, Scalar>;

  ModuleElement(std::size_t rank, std::size_t nvars, Field field) : rank_(rank), nvars_(nvars), field_(field) {}
  static ModuleElement from_terms(std::size_t rank, std::size_t nvars, Field field, std::vector<Term> terms);
  static ModuleElement from_components(const std::vector<Polynomial>& components);
  static ModuleElement from_polynomial(const Polynomial& p);
  static ModuleElement basis_vector(std::size_t rank, std::size_t nvars, Field field, std::size_t i);

  std::size_t rank() const { return rank_; }
  std::size_t nvars() const { return nvars_; }
  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const ModuleMonomial& m) const;
  Polynomial component(std::size_t i) const;
  std::vector<Polynomial> components() const;

  ModuleElement operator-() const;
  ModuleElement& operator+=(const ModuleElement& other);
  ModuleElement& operator-=(const ModuleElement& other);
  friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
  friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
  friend ModuleElement operator*(const Scalar& c, const ModuleElement& m);
  friend ModuleElement operator*(const Polynomial& r, const ModuleElement& m);
  ModuleElement times(const Monomial& m, const Scalar& c) const;

  // Multiplies so that the first stored term of the leading form has coefficient 1.
  ModuleElement normalized(const ModuleGrading& grading) const;

  friend bool operator==(const ModuleElement&, const ModuleElement&);

  std::uint64_t hash() const;

 private:
  void check_compatible(const ModuleElement& other) const;

  std::size_t rank_;
  std::size_t nvars_;
  Field field_;
  std::vector<Term> terms_;
};

// Canonical total order on elements of the same shape (term sequence, then coefficients).
int compare_terms(const ModuleElement& a, const ModuleElement& b);

// Sum_i coords[i] * elements[i].
ModuleElement combine(const std::vector<Polynomial>& coords, const std::vector<ModuleElement>& elements);

struct HomogeneousPart {
  Degree degree;
  ModuleElement element;
};

// Parts with pairwise distinct degrees, highest first. Empty for zero.
std::vector<HomogeneousPart> homogeneous_components(const ModuleElement& m, const ModuleGrading& grading);
// Throws UsageError for m = 0.
HomogeneousPart leading_form(const ModuleElement& m, const ModuleGrading& grading);
Degree degree(const ModuleElement& m, const ModuleGrading& grading);
bool is_homogeneous(const ModuleElement& m, const ModuleGrading& grading);

// Variable names and the field, for parsing and printing.
class RingContext {
 public:
  RingContext(Field field, std::vector<std::string> variables);

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  // -1 when unknown.
  int index_of(std::string_view name) const;

  // Errors carry the given line and a column counted from column_offset + 1.
  Polynomial parse_polynomial(std::string_view text, std::size_t line = 1, std::size_t column_offset = 0) const;
  // "[f1, ..., fn]", or a bare polynomial when rank is 1.
  ModuleElement parse_element(std::string_view text, std::size_t rank, std::size_t line = 1,
                              std::size_t column_offset = 0) const;

  std::string format(const Monomial& m) const;
  std::string format(const Polynomial& p) const;
  // A bare polynomial for rank 1, otherwise "[f1, ..., fn]".
  std::string format(const ModuleElement& m) const;

 private:
  Field field_;
  std::vector<std::string> variables_;
};

struct RandomElementOptions {
  std::size_t max_degree = 4;
  std::size_t max_terms = 4;
  std::int64_t coefficient_bound = 5;
};

Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, const Field& field,
                             const RandomElementOptions& options = {});
ModuleElement random_element(std::mt19937_64& rng, std::size_t rank, std::size_t nvars, const Field& field,
                             const RandomElementOptions& options = {});

}  // namespace macaulay
