#include "macaulay/reduce.hpp"

#include "macaulay/error.hpp"

namespace macaulay {

Reducer::Reducer(ModuleGrading grading, Field field, std::vector<ModuleElement> elements, ComplementPolicy policy)
    : grading_(std::move(grading)), field_(field), policy_(policy), cache_(std::make_unique<Cache>()) {
  check_policy(policy_, field_);
  for (auto& m : elements) add(std::move(m));
}

void Reducer::add(ModuleElement m) {
  if (m.is_zero()) throw UsageError("cannot reduce against the zero element");
  if (!(m.field() == field_)) throw UsageError("element over a different field");
  auto lf = leading_form(m, grading_);
  leading_forms_.push_back(std::move(lf.element));
  degrees_.push_back(std::move(lf.degree));
  elements_.push_back(std::move(m));
  ++version_;
  std::lock_guard lock(cache_->mutex);
  cache_->spaces.clear();
}

std::shared_ptr<const GradedSubspace> Reducer::w_space(const Degree& b) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->spaces.find(b);
    if (it != cache_->spaces.end()) return it->second;
  }
  auto space = std::make_shared<const GradedSubspace>(grading_, field_, leading_forms_, degrees_, b);
  std::lock_guard lock(cache_->mutex);
  return cache_->spaces.emplace(b, std::move(space)).first->second;
}

std::optional<Reducer::Found> Reducer::find_step(const ModuleElement& m, ReductionMode mode,
                                                 const std::optional<Degree>& ceiling,
                                                 std::vector<Degree>* examined) const {
  for (const auto& part : homogeneous_components(m, grading_)) {
    if (ceiling && grading_.compare(part.degree, *ceiling) >= 0) continue;
    if (examined) examined->push_back(part.degree);
    auto w = w_space(part.degree);
    if (mode == ReductionMode::Span) {
      if (w->dimension() > 0 && w->contains(part.element)) return Found{part.degree, w->decompose(part.element)};
    } else {
      auto projected = w->project_complement(part.element, policy_);
      if (!(projected == part.element)) return Found{part.degree, w->decompose(part.element - projected)};
    }
  }
  return std::nullopt;
}

ModuleElement Reducer::apply(const ModuleElement& m, const std::vector<WTerm>& terms) const {
  ModuleElement out = m;
  for (const auto& t : terms) out -= elements_[t.index].times(t.multiplier, t.coefficient);
  return out;
}

std::optional<ModuleElement> Reducer::reduce_step(const ModuleElement& m, ReductionMode mode) const {
  auto found = find_step(m, mode, std::nullopt);
  if (!found) return std::nullopt;
  return apply(m, found->terms);
}

ReductionTrace Reducer::reduce(const ModuleElement& m, ReductionMode mode) const {
  ReductionTrace trace{{}, m, std::vector<Polynomial>(elements_.size(), Polynomial(grading_.nvars(), field_)), {}};
  std::optional<Degree> ceiling;
  while (auto found = find_step(trace.final, mode, ceiling, &trace.examined)) {
    trace.final = apply(trace.final, found->terms);
    for (const auto& t : found->terms) {
      trace.representation[t.index] += Polynomial::term(t.multiplier, t.coefficient);
    }
    ceiling = found->degree;
    trace.steps.push_back(ReductionStep{found->degree, std::move(found->terms), trace.final.hash()});
  }
  return trace;
}

ModuleElement Reducer::normal_form(const ModuleElement& m) const {
  return reduce(m, ReductionMode::Complement).final;
}

bool Reducer::reduces_to_zero(const ModuleElement& m) const {
  return reduce(m, ReductionMode::Span).final.is_zero();
}

bool Reducer::is_normal_form(const ModuleElement& m) const {
  return !find_step(m, ReductionMode::Complement, std::nullopt).has_value();
}

}  // namespace macaulay
