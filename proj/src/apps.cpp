#include "macaulay/apps.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace macaulay {

ModuleGrading elimination_grading(const std::vector<bool>& kept, std::size_t rank) {
  auto ring = RingGrading::elimination(kept);
  return ModuleGrading::free_module(ring, rank);
}

bool uses_only(const ModuleElement& m, const std::vector<bool>& kept) {
  for (const auto& [mm, c] : m.terms()) {
    for (std::size_t i = 0; i < kept.size(); ++i) {
      if (!kept[i] && mm.monomial[i] != 0) return false;
    }
  }
  return true;
}

EliminationResult eliminate(const std::vector<ModuleElement>& generators, const std::vector<bool>& kept,
                            const Field& field, const BuchbergerConfig& config) {
  std::size_t rank = generators.empty() ? 1 : generators[0].rank();
  auto grading = elimination_grading(kept, rank);
  auto basis = interreduce(buchberger_algorithm(generators, grading, field, config), config.policy);
  std::vector<ModuleElement> inside;
  for (const auto& e : basis.elements) {
    if (uses_only(e, kept)) inside.push_back(e);
  }
  return EliminationResult{std::move(basis), std::move(inside)};
}

MacaulayBasis schreyer_syzygy_basis(const MacaulayBasis& basis) {
  const auto& xs = basis.elements;
  std::vector<ModuleElement> lfs;
  std::vector<Degree> degrees;
  for (const auto& x : xs) {
    auto lf = leading_form(x, basis.grading);
    lfs.push_back(std::move(lf.element));
    degrees.push_back(std::move(lf.degree));
  }
  auto syz = syzygy_grading(basis.grading, degrees);
  // Homogeneous generators of Syz(lf X) are already a Macaulay basis of it for the syzygy
  // grading itself, so no completion step is needed.
  auto leading = leading_syzygy_generators(lfs, basis.grading, basis.field);
  MacaulayBasis out{{}, syz, basis.field, false, leading, basis.config_hash, 0};
  for (const auto& s : leading) {
    if (!is_homogeneous(s, syz)) throw UsageError("leading syzygy generator is not homogeneous");
    auto t = lift_syzygy(s, xs, basis.grading, basis.field);
    if (!t.is_zero() && std::find(out.elements.begin(), out.elements.end(), t) == out.elements.end()) {
      out.elements.push_back(std::move(t));
    }
  }
  return out;
}

ModuleGrading degrevlex_refinement(const ModuleGrading& total) {
  if (total.ring().kind() != RingGradingKind::TotalDegree) {
    throw UsageError("degrevlex refinement needs a total degree grading");
  }
  std::size_t d = total.nvars();
  std::vector<DegreeVector> shifts;
  for (const auto& g : total.generator_degrees()) {
    DegreeVector v(d, 0);
    v[0] = g.value[0];
    shifts.push_back(std::move(v));
  }
  TieOrder tie = total.rank() > 1 ? TieOrder::TermOverPosition : TieOrder::None;
  if (total.tie() != TieOrder::None) tie = total.tie();
  return ModuleGrading::free_module(RingGrading::degrevlex(d), total.rank(), shifts, tie);
}

HilbertTable hilbert_function(const std::vector<ModuleElement>& generators, const ModuleGrading& coarse,
                              const ModuleGrading& fine, const Field& field, const std::vector<Degree>& degrees,
                              const BuchbergerConfig& config) {
  for (const auto& g : generators) {
    if (!is_homogeneous(g, coarse)) throw UsageError("generators must be homogeneous for the coarse grading");
  }
  auto map = RefinementMap::between(fine, coarse);
  HilbertTable table;
  auto basis = buchberger_algorithm(generators, fine, field, config);
  std::optional<Reducer> reducer;
  if (!basis.elements.empty()) reducer.emplace(fine, field, basis.elements, ComplementPolicy::Pivot);
  for (const auto& b : degrees) {
    std::set<Degree> fibre;
    for (const auto& m : coarse.component_monomials(b)) {
      Degree f = fine.degree(m);
      if (map.apply(f) != coarse.degree(m)) throw std::logic_error("refinement map disagrees with the gradings");
      fibre.insert(std::move(f));
    }
    std::size_t dim = 0;
    if (reducer) {
      for (const auto& f : fibre) dim += reducer->w_space(f)->dimension();
    }
    table.degrees.push_back(b);
    table.values.push_back(dim);
  }
  return table;
}

HomogenizationContext::HomogenizationContext(std::size_t nvars, std::size_t t_index, std::vector<std::int64_t> shifts)
    : nvars_(nvars), t_(t_index), shifts_(std::move(shifts)) {
  if (t_ >= nvars_) throw UsageError("homogenizing variable out of range");
  if (shifts_.empty()) throw UsageError("homogenization needs at least one module component");
  for (auto a : shifts_) {
    if (a < 0) throw UsageError("module shifts must be nonnegative");
  }
}

ModuleGrading HomogenizationContext::grading() const {
  std::vector<DegreeVector> shifts;
  for (auto a : shifts_) shifts.push_back(DegreeVector{a});
  return ModuleGrading::free_module(RingGrading::total_degree(nvars_), shifts_.size(), shifts);
}

ModuleElement HomogenizationContext::homogenize(const ModuleElement& m) const {
  if (m.nvars() != nvars_ || m.rank() != rank()) throw UsageError("element does not match the homogenization context");
  if (m.is_zero()) return m;
  std::int64_t top = *std::max_element(shifts_.begin(), shifts_.end());
  std::int64_t deg = 0;
  for (const auto& [mm, c] : m.terms()) {
    if (mm.monomial[t_] != 0) throw UsageError("element to homogenize already involves the homogenizing variable");
    deg = std::max(deg, static_cast<std::int64_t>(mm.monomial.total_degree()) + shifts_[mm.component]);
  }
  std::vector<ModuleElement::Term> terms;
  for (const auto& [mm, c] : m.terms()) {
    auto e = top + deg - shifts_[mm.component] - static_cast<std::int64_t>(mm.monomial.total_degree());
    Monomial mono = mm.monomial;
    mono[t_] = static_cast<std::uint32_t>(e);
    terms.emplace_back(ModuleMonomial{std::move(mono), mm.component}, c);
  }
  return ModuleElement::from_terms(m.rank(), nvars_, m.field(), std::move(terms));
}

ModuleElement HomogenizationContext::dehomogenize(const ModuleElement& m) const {
  if (m.nvars() != nvars_ || m.rank() != rank()) throw UsageError("element does not match the homogenization context");
  std::vector<ModuleElement::Term> terms;
  for (const auto& [mm, c] : m.terms()) {
    Monomial mono = mm.monomial;
    mono[t_] = 0;
    terms.emplace_back(ModuleMonomial{std::move(mono), mm.component}, c);
  }
  return ModuleElement::from_terms(m.rank(), nvars_, m.field(), std::move(terms));
}

ModuleElement append_variable(const ModuleElement& m) {
  std::vector<ModuleElement::Term> terms;
  for (const auto& [mm, c] : m.terms()) {
    std::vector<std::uint32_t> e(mm.monomial.exponents().begin(), mm.monomial.exponents().end());
    e.push_back(0);
    terms.emplace_back(ModuleMonomial{Monomial(std::move(e)), mm.component}, c);
  }
  return ModuleElement::from_terms(m.rank(), m.nvars() + 1, m.field(), std::move(terms));
}

HomogenizationReport verify_homogenization_equivalence(const std::vector<ModuleElement>& generators,
                                                       const HomogenizationContext& ctx, const Field& field) {
  std::vector<ModuleElement> nonzero;
  for (const auto& g : generators) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  HomogenizationReport report;
  report.criterion = buchberger_criterion(nonzero, ctx.grading(), field);
  report.h_basis = report.criterion.passed;
  return report;
}

}  // namespace macaulay
