#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "macaulay/error.hpp"
#include "macaulay/reduce.hpp"

namespace macaulay {

// Syzygies of (m_1..m_n) are elements of R^n; Sum_i s_i m_i.
ModuleElement apply_syzygy(const ModuleElement& s, const std::vector<ModuleElement>& elements);

// R^n graded so that e_i sits in degrees[i], with the tie order of `grading`.
ModuleGrading syzygy_grading(const ModuleGrading& grading, const std::vector<Degree>& degrees);

// Pairwise lcm relations among single-term elements lying in the same free-module component.
std::vector<ModuleElement> monomial_syzygy_generators(const std::vector<ModuleElement>& terms);

// Homogeneous generators of Syz(lf_1..lf_n) under the syzygy grading. Single-term inputs
// use the lcm relations; otherwise a degrevlex position-over-term basis of
// {(lf_i, e_i)} in N (+) R^n is computed and its elements with zero N-part are split
// into homogeneous components.
std::vector<ModuleElement> leading_syzygy_generators(const std::vector<ModuleElement>& leading_forms,
                                                     const ModuleGrading& grading, const Field& field);

struct CriterionResult {
  bool passed = true;
  std::size_t syzygies_checked = 0;
  // The first syzygy whose combination does not reduce to zero, and its remainder.
  std::optional<ModuleElement> witness;
  std::optional<ModuleElement> remainder;
};

CriterionResult buchberger_criterion(const std::vector<ModuleElement>& elements, const ModuleGrading& grading,
                                     const Field& field);

struct BuchbergerConfig {
  std::size_t max_iterations = 64;
  // Bound on the total degree of any new element's terms.
  std::optional<std::int64_t> degree_cap;
  ComplementPolicy policy = ComplementPolicy::Pivot;
  // Complement mode adds normal forms; span mode adds remainders that are only
  // span-irreducible, which keeps them free of lower-degree tails.
  ReductionMode reduction = ReductionMode::Complement;

  std::uint64_t hash() const;
};

struct MacaulayBasis {
  std::vector<ModuleElement> elements;
  ModuleGrading grading;
  Field field;
  bool reduced = false;
  std::vector<ModuleElement> generators;
  std::uint64_t config_hash = 0;
  std::size_t iterations = 0;
};

// Thrown when the iteration count or degree cap is exceeded; carries the partial basis.
class BuchbergerLimitError : public ResourceError {
 public:
  BuchbergerLimitError(const std::string& message, std::vector<ModuleElement> partial, std::size_t iterations)
      : ResourceError(message), partial_(std::move(partial)), iterations_(iterations) {}
  const std::vector<ModuleElement>& partial() const { return partial_; }
  std::size_t iterations() const { return iterations_; }

 private:
  std::vector<ModuleElement> partial_;
  std::size_t iterations_;
};

MacaulayBasis buchberger_algorithm(const std::vector<ModuleElement>& generators, const ModuleGrading& grading,
                                   const Field& field, const BuchbergerConfig& config = {});

// Replaces each element by its normal form modulo the others until nothing changes,
// drops zeros, normalizes and sorts.
MacaulayBasis interreduce(const MacaulayBasis& basis, ComplementPolicy policy);

// A syzygy t of X with lf t = s, for s a homogeneous syzygy of the leading forms.
ModuleElement lift_syzygy(const ModuleElement& s, const std::vector<ModuleElement>& elements,
                          const ModuleGrading& grading, const Field& field);

std::map<Degree, std::size_t> degree_profile(const std::vector<ModuleElement>& elements, const ModuleGrading& grading);

// Degree ascending, then canonical term order.
void sort_canonical(std::vector<ModuleElement>& elements, const ModuleGrading& grading);

}  // namespace macaulay
