#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "macaulay/macbasis.hpp"

namespace macaulay {

// Grading of R^rank (zero shifts) by N^2: x_i has degree (1,0) when kept and (0,1) when
// eliminated, and any positive eliminated weight dominates.
ModuleGrading elimination_grading(const std::vector<bool>& kept, std::size_t rank);

struct EliminationResult {
  // Reduced Macaulay basis of M under the elimination grading.
  MacaulayBasis basis;
  // The elements of `basis` involving only kept variables: a Macaulay basis of M meet N-hat.
  std::vector<ModuleElement> kept;
};

EliminationResult eliminate(const std::vector<ModuleElement>& generators, const std::vector<bool>& kept,
                            const Field& field, const BuchbergerConfig& config = {});

bool uses_only(const ModuleElement& m, const std::vector<bool>& kept);

// Lifts the leading-form syzygy generators of a Macaulay basis X. The result is a Macaulay
// basis of Syz(X) for the syzygy grading; throws UsageError when X fails the criterion.
MacaulayBasis schreyer_syzygy_basis(const MacaulayBasis& basis);

struct HilbertTable {
  std::vector<Degree> degrees;
  std::vector<std::size_t> values;
};

// dim M_b for each coarse degree b, computed as the sum of dim W_b'(X) over the fine degrees
// b' above b, with X a Macaulay basis for the fine grading. Generators must be homogeneous
// for the coarse grading.
HilbertTable hilbert_function(const std::vector<ModuleElement>& generators, const ModuleGrading& coarse,
                              const ModuleGrading& fine, const Field& field, const std::vector<Degree>& degrees,
                              const BuchbergerConfig& config = {});

// The degrevlex grading refining a total-degree module grading (shift a becomes a * e_1).
ModuleGrading degrevlex_refinement(const ModuleGrading& total);

// Homogenization in R = k[x.., t] with N = (+) R(-a_i), standard N-grading.
class HomogenizationContext {
 public:
  HomogenizationContext(std::size_t nvars, std::size_t t_index, std::vector<std::int64_t> shifts);

  std::size_t nvars() const { return nvars_; }
  std::size_t t_index() const { return t_; }
  std::size_t rank() const { return shifts_.size(); }
  const std::vector<std::int64_t>& shifts() const { return shifts_; }
  // Total degree grading of N with the shifts.
  ModuleGrading grading() const;

  // t^(max a + deg m - a_i - |alpha|) on each term c x^alpha e_i. Requires m free of t.
  ModuleElement homogenize(const ModuleElement& m) const;
  ModuleElement dehomogenize(const ModuleElement& m) const;

 private:
  std::size_t nvars_;
  std::size_t t_;
  std::vector<std::int64_t> shifts_;
};

// Adds a trailing variable to every element (for homogenizing with a fresh t).
ModuleElement append_variable(const ModuleElement& m);

struct HomogenizationReport {
  // The generators are a Macaulay H-basis, equivalently their homogenizations generate M^H.
  bool h_basis = false;
  CriterionResult criterion;
};

HomogenizationReport verify_homogenization_equivalence(const std::vector<ModuleElement>& generators,
                                                       const HomogenizationContext& ctx, const Field& field);

}  // namespace macaulay
