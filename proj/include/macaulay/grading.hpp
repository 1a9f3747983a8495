#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "macaulay/monomial.hpp"

namespace macaulay {

using DegreeVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

// A degree in a module grading: a ring degree plus, for gradings that separate
// free-module components, the component tag (-1 when components are not separated).
struct Degree {
  DegreeVector value;
  int component = -1;

  friend auto operator<=>(const Degree&, const Degree&) = default;
  friend bool operator==(const Degree&, const Degree&) = default;
};

std::string to_string(const Degree& degree);

enum class RingGradingKind { TotalDegree, MatrixOrder, Elimination };

// A grading of k[x_1..x_d] by a submonoid of Z^e: deg x^alpha = G alpha, where G is a
// nonnegative e x d integer matrix, ordered by comparing O v lexicographically.
//
//   total degree:  G = (1 ... 1), O = (1); grades by N.
//   matrix order:  G = I, O = W; every component is one-dimensional.
//   elimination:   G has rows (kept indicator, dropped indicator); O compares the dropped
//                  weight first, so any positive dropped weight dominates.
class RingGrading {
 public:
  static RingGrading total_degree(std::size_t nvars);
  static RingGrading matrix_order(IntMatrix weights);
  static RingGrading degrevlex(std::size_t nvars);
  static RingGrading lex(std::size_t nvars);
  static RingGrading elimination(std::vector<bool> kept);

  RingGradingKind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  // e, the length of a degree vector.
  std::size_t dimension() const { return map_.size(); }
  const IntMatrix& degree_map() const { return map_; }
  const IntMatrix& order_matrix() const { return order_; }
  const std::vector<bool>& kept() const { return kept_; }

  DegreeVector degree(const Monomial& m) const;
  DegreeVector variable_degree(std::size_t i) const;
  DegreeVector zero() const { return DegreeVector(dimension(), 0); }

  // Sign of (a - b) under the order.
  int compare(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;

  // All monomials of the given degree, degrevlex descending. Empty when unreachable.
  std::vector<Monomial> monomials_of_degree(std::span<const std::int64_t> degree) const;

  // True when distinct monomials always get distinct degrees.
  bool separates_monomials() const { return kind_ == RingGradingKind::MatrixOrder; }

  friend bool operator==(const RingGrading&, const RingGrading&) = default;

 private:
  RingGrading(RingGradingKind kind, std::size_t nvars, IntMatrix map, IntMatrix order,
              std::vector<bool> kept = {});

  RingGradingKind kind_;
  std::size_t nvars_;
  IntMatrix map_;
  IntMatrix order_;
  std::vector<bool> kept_;
};

enum class TieOrder { None, PositionOverTerm, TermOverPosition };

// A grading of a free module R^n: the generator e_i sits in degree b_i, and x^alpha e_i
// has degree deg(x^alpha) . b_i. This covers shifted free modules N = (+) R(-a_i)
// (b_i = (a_i, i or -1)) and the grading of R^n induced by homogeneous elements of degrees
// b_1..b_n, under which syzygy modules are graded.
class ModuleGrading {
 public:
  ModuleGrading(RingGrading ring, std::vector<Degree> generator_degrees, TieOrder tie);

  // Shifts default to zero. With a tie order the component tag of e_i is i.
  static ModuleGrading free_module(RingGrading ring, std::size_t rank,
                                   std::vector<DegreeVector> shifts = {},
                                   TieOrder tie = TieOrder::None);
  // Grading of R^n in which e_i has degree base_degrees[i].
  static ModuleGrading syzygy(const ModuleGrading& base, std::vector<Degree> base_degrees);

  const RingGrading& ring() const { return ring_; }
  std::size_t rank() const { return generators_.size(); }
  std::size_t nvars() const { return ring_.nvars(); }
  TieOrder tie() const { return tie_; }
  const Degree& generator_degree(std::size_t i) const { return generators_[i]; }
  const std::vector<Degree>& generator_degrees() const { return generators_; }

  Degree degree(const ModuleMonomial& m) const;
  // Sign of (a - b). Under a tie order, a lower component tag ranks higher.
  int compare(const Degree& a, const Degree& b) const;
  bool less(const Degree& a, const Degree& b) const { return compare(a, b) < 0; }
  // The monoid action deg(r) . b.
  Degree act(std::span<const std::int64_t> ring_degree, const Degree& b) const;

  // Ring monomials r with deg(r) . source = target, degrevlex descending.
  std::vector<Monomial> multipliers(const Degree& source, const Degree& target) const;
  // Every module monomial of degree b, in storage order.
  std::vector<ModuleMonomial> component_monomials(const Degree& b) const;

  friend bool operator==(const ModuleGrading&, const ModuleGrading&) = default;

 private:
  RingGrading ring_;
  std::vector<Degree> generators_;
  TieOrder tie_;
};

// An order-preserving homomorphism from a fine grading onto a coarse one, given by an
// integer matrix F with F G_fine = G_coarse; component tags are kept or forgotten.
class RefinementMap {
 public:
  // Throws UsageError when `fine` does not refine `coarse`.
  static RefinementMap between(const RingGrading& fine, const RingGrading& coarse);
  static RefinementMap between(const ModuleGrading& fine, const ModuleGrading& coarse);

  DegreeVector apply(std::span<const std::int64_t> ring_degree) const;
  Degree apply(const Degree& degree) const;
  const IntMatrix& matrix() const { return matrix_; }

 private:
  RefinementMap(IntMatrix matrix, bool keep_component)
      : matrix_(std::move(matrix)), keep_component_(keep_component) {}
  IntMatrix matrix_;
  bool keep_component_;
};

struct OrderReport {
  bool zero_minimal = true;
  bool translation_invariant = true;
  bool structurally_valid = true;
  bool monotone_action = true;
  std::vector<std::string> failures;

  bool passed() const {
    return zero_minimal && translation_invariant && structurally_valid && monotone_action;
  }
};

// Checks that the order is a total monoid order: every variable has degree > 0,
// compare(a, b) = compare(a + c, b + c) on sampled triples, and (for matrix orders) the
// weight matrix is rationally invertible with lexicographically positive columns.
OrderReport verify_monoid_order(const RingGrading& grading, std::size_t samples, std::uint64_t seed = 1);
// Additionally checks that the action on module degrees is monotone in both arguments.
OrderReport verify_monoid_order(const ModuleGrading& grading, std::size_t samples, std::uint64_t seed = 1);

}  // namespace macaulay
