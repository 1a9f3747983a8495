#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "macaulay/gradlin.hpp"
#include "macaulay/polymod.hpp"

namespace macaulay {

// The algebra endomorphism x_j -> images[j], extended to R^n componentwise.
class Substitution {
 public:
  explicit Substitution(std::vector<Polynomial> images);
  static Substitution identity(std::size_t nvars, const Field& field);
  // Column j of the matrix holds the coefficients of the image of x_j.
  // Throws UsageError when the matrix is not square or is singular.
  static Substitution from_matrix(const std::vector<std::vector<Scalar>>& matrix);

  std::size_t nvars() const { return images_.size(); }
  const Field& field() const { return images_.front().field(); }
  const std::vector<Polynomial>& images() const { return images_; }

  // Every image is a linear form.
  bool is_linear() const;
  bool is_invertible() const;
  // Every image is +-x_k and k runs over a permutation.
  bool is_signed_permutation() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Polynomial> images_;
};

Polynomial act(const Substitution& g, const Polynomial& p);
ModuleElement act(const Substitution& g, const ModuleElement& m);
// The substitution with act(compose(g, h), m) = act(g, act(h, m)).
Substitution compose(const Substitution& g, const Substitution& h);

// A finite group generated by invertible linear substitutions.
class GroupAction {
 public:
  // Enumerates the closure; throws UsageError if it exceeds `cap` elements or a generator
  // is not an invertible linear substitution.
  explicit GroupAction(std::vector<Substitution> generators, std::size_t cap = 1024);

  std::size_t nvars() const { return generators_.front().nvars(); }
  const std::vector<Substitution>& generators() const { return generators_; }
  const std::vector<Substitution>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  std::vector<Substitution> generators_;
  std::vector<Substitution> elements_;
};

// Every generator maps each variable to a homogeneous element of the variable's own degree.
bool is_homogeneous_action(const std::vector<Substitution>& generators, const RingGrading& grading);
bool is_homogeneous_action(const GroupAction& action, const RingGrading& grading);

struct InvarianceWitness {
  std::size_t generator;
  std::size_t element;
  bool solved;
  // g . m_element = sum_j coordinates[j] m_j when solved.
  std::vector<Scalar> coordinates;
  // Nonzero part left after reducing g . m_element against span(X) when not solved.
  std::optional<ModuleElement> residual;
};

struct InvarianceReport {
  bool invariant = true;
  std::vector<InvarianceWitness> witnesses;
};

InvarianceReport span_is_invariant(const std::vector<ModuleElement>& elements, const GroupAction& action);

struct EquivarianceCounterexample {
  ModuleElement sample;
  std::size_t generator;
  ModuleElement nf_of_image;
  ModuleElement image_of_nf;
};

struct EquivarianceReport {
  bool equivariant = true;
  std::size_t checked = 0;
  std::optional<EquivarianceCounterexample> counterexample;
};

// Checks nf(g m) = g nf(m) for every sample and generator. The hypotheses are verified first
// and a violated one raises UsageError: the action must be homogeneous, the module generated
// by X must be invariant, and the complement must be invariant (orthogonal complements need
// signed permutations; pivot complements are checked at every degree the reductions touch).
EquivarianceReport check_equivariant_normal_form(const std::vector<ModuleElement>& basis,
                                                 const ModuleGrading& grading, const Field& field,
                                                 const GroupAction& action, const std::vector<ModuleElement>& samples,
                                                 ComplementPolicy policy);

}  // namespace macaulay
