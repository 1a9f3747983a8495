#include "macaulay/gradlin.hpp"

#include "macaulay/error.hpp"

namespace macaulay {

namespace {

std::vector<std::pair<std::size_t, Monomial>> enumerate_spanning(const ModuleGrading& grading,
                                                                 const std::vector<Degree>& degrees,
                                                                 const Degree& b) {
  std::vector<std::pair<std::size_t, Monomial>> out;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (grading.compare(degrees[i], b) > 0) continue;
    for (auto& r : grading.multipliers(degrees[i], b)) out.emplace_back(i, std::move(r));
  }
  return out;
}

std::vector<SparseVector> spanning_rows(const ComponentBasis& ambient, const std::vector<ModuleElement>& lfs,
                                        const std::vector<std::pair<std::size_t, Monomial>>& spanning,
                                        const Field& field) {
  std::vector<SparseVector> rows;
  rows.reserve(spanning.size());
  for (const auto& [i, r] : spanning) rows.push_back(ambient.coordinates(lfs[i].times(r, field.one())));
  return rows;
}

}  // namespace

std::string to_string(ComplementPolicy policy) {
  return policy == ComplementPolicy::Pivot ? "pivot" : "orthogonal";
}

ComplementPolicy parse_complement_policy(std::string_view text) {
  if (text == "pivot") return ComplementPolicy::Pivot;
  if (text == "orthogonal") return ComplementPolicy::Orthogonal;
  throw UsageError("unknown complement policy '" + std::string(text) + "' (expected pivot or orthogonal)");
}

ComplementPolicy default_policy(const Field& field) {
  return field.is_rational() ? ComplementPolicy::Orthogonal : ComplementPolicy::Pivot;
}

void check_policy(ComplementPolicy policy, const Field& field) {
  if (policy == ComplementPolicy::Orthogonal && !field.is_rational()) {
    throw UsageError("the orthogonal complement policy needs characteristic 0");
  }
}

ComponentBasis::ComponentBasis(const ModuleGrading& grading, Degree degree)
    : degree_(std::move(degree)), terms_(grading.component_monomials(degree_)) {
  std::sort(terms_.begin(), terms_.end(),
            [](const ModuleMonomial& a, const ModuleMonomial& b) { return compare_storage(a, b) < 0; });
  for (std::size_t i = 0; i < terms_.size(); ++i) index_.emplace(terms_[i], i);
}

std::optional<std::size_t> ComponentBasis::index_of(const ModuleMonomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVector ComponentBasis::coordinates(const ModuleElement& v) const {
  SparseVector out;
  out.reserve(v.size());
  for (const auto& [m, c] : v.terms()) {
    auto idx = index_of(m);
    if (!idx) throw UsageError("element is not homogeneous of degree " + to_string(degree_));
    out.emplace_back(*idx, c);
  }
  return out;
}

ModuleElement ComponentBasis::element(const std::vector<Scalar>& coords, std::size_t rank, std::size_t nvars,
                                      const Field& field) const {
  std::vector<ModuleElement::Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (!coords[i].is_zero()) terms.emplace_back(terms_[i], coords[i]);
  }
  return ModuleElement::from_terms(rank, nvars, field, std::move(terms));
}

GradedSubspace::GradedSubspace(const ModuleGrading& grading, const Field& field,
                               const std::vector<ModuleElement>& leading_forms, const std::vector<Degree>& degrees,
                               Degree b)
    : rank_(grading.rank()),
      nvars_(grading.nvars()),
      field_(field),
      ambient_(grading, std::move(b)),
      spanning_(enumerate_spanning(grading, degrees, ambient_.degree())),
      echelon_(field, ambient_.size(), spanning_rows(ambient_, leading_forms, spanning_, field), true) {}

std::vector<ModuleElement> GradedSubspace::basis() const {
  std::vector<ModuleElement> out;
  for (std::size_t k = 0; k < echelon_.rank(); ++k) out.push_back(ambient_.element(echelon_.row(k), rank_, nvars_, field_));
  return out;
}

bool GradedSubspace::contains(const ModuleElement& v) const { return echelon_.contains(ambient_.coordinates(v)); }

ModuleElement GradedSubspace::project_complement(const ModuleElement& v, ComplementPolicy policy) const {
  check_policy(policy, field_);
  auto coords = ambient_.coordinates(v);
  if (policy == ComplementPolicy::Pivot) {
    return ambient_.element(echelon_.reduce(coords).residual, rank_, nvars_, field_);
  }
  return ambient_.element(echelon_.orthogonal_residual(coords), rank_, nvars_, field_);
}

bool GradedSubspace::in_complement(const ModuleElement& v, ComplementPolicy policy) const {
  return project_complement(v, policy) == v;
}

std::vector<WTerm> GradedSubspace::decompose(const ModuleElement& v) const {
  auto r = echelon_.reduce(ambient_.coordinates(v));
  for (const auto& s : r.residual) {
    if (!s.is_zero()) throw MembershipError("element is not in W_" + to_string(degree()));
  }
  std::vector<WTerm> out;
  for (std::size_t j = 0; j < r.combination.size(); ++j) {
    if (!r.combination[j].is_zero()) out.push_back(WTerm{spanning_[j].first, spanning_[j].second, r.combination[j]});
  }
  return out;
}

}  // namespace macaulay
