#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "macaulay/gradlin.hpp"
#include "macaulay/polymod.hpp"

namespace macaulay {

// Span: remove the highest component that lies in W_b(X).
// Complement: replace the highest component not in W_b(X)^c by its projection onto W_b(X)^c.
enum class ReductionMode { Span, Complement };

struct ReductionStep {
  Degree degree;
  std::vector<WTerm> terms;
  std::uint64_t remainder_hash;
};

struct ReductionTrace {
  // Offending degrees strictly decrease along the steps.
  std::vector<ReductionStep> steps;
  ModuleElement final;
  // input = final + sum_i representation[i] * X[i]
  std::vector<Polynomial> representation;
  // Every degree whose component was tested, in the order tested.
  std::vector<Degree> examined;
};

// Reduction against a fixed list X of nonzero elements. W_b(X) is built on demand and cached
// per degree; the cache is thread safe, so one Reducer can serve concurrent reductions.
class Reducer {
 public:
  Reducer(ModuleGrading grading, Field field, std::vector<ModuleElement> elements, ComplementPolicy policy);

  const ModuleGrading& grading() const { return grading_; }
  const Field& field() const { return field_; }
  ComplementPolicy policy() const { return policy_; }
  const std::vector<ModuleElement>& elements() const { return elements_; }
  const std::vector<ModuleElement>& leading_forms() const { return leading_forms_; }
  const std::vector<Degree>& degrees() const { return degrees_; }
  // Bumped whenever X changes; cached subspaces never outlive their version.
  std::uint64_t version() const { return version_; }

  void add(ModuleElement m);

  std::shared_ptr<const GradedSubspace> w_space(const Degree& b) const;

  // One step, or nullopt when m is already reduced for this mode.
  std::optional<ModuleElement> reduce_step(const ModuleElement& m, ReductionMode mode) const;
  // Reduces to a fixed point.
  ReductionTrace reduce(const ModuleElement& m, ReductionMode mode) const;
  ModuleElement normal_form(const ModuleElement& m) const;
  bool reduces_to_zero(const ModuleElement& m) const;
  // Every component of m lies in its complement.
  bool is_normal_form(const ModuleElement& m) const;

 private:
  struct Found {
    Degree degree;
    std::vector<WTerm> terms;
  };
  std::optional<Found> find_step(const ModuleElement& m, ReductionMode mode, const std::optional<Degree>& ceiling,
                                 std::vector<Degree>* examined = nullptr) const;
  ModuleElement apply(const ModuleElement& m, const std::vector<WTerm>& terms) const;

  struct Cache {
    std::mutex mutex;
    std::map<Degree, std::shared_ptr<const GradedSubspace>> spaces;
  };

  ModuleGrading grading_;
  Field field_;
  ComplementPolicy policy_;
  std::vector<ModuleElement> elements_;
  std::vector<ModuleElement> leading_forms_;
  std::vector<Degree> degrees_;
  std::uint64_t version_ = 0;
  std::unique_ptr<Cache> cache_;
};

}  // namespace macaulay
