#include "macaulay/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "macaulay/error.hpp"
#include "macaulay/linalg.hpp"
#include "macaulay/reduce.hpp"

namespace macaulay {

namespace {

std::vector<SparseVector> linear_part(const Substitution& g) {
  std::vector<SparseVector> columns;
  for (const auto& image : g.images()) {
    SparseVector col;
    for (const auto& [m, c] : image.terms()) {
      for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 1) col.emplace_back(i, c);
      }
    }
    columns.push_back(std::move(col));
  }
  return columns;
}

}  // namespace

Substitution::Substitution(std::vector<Polynomial> images) : images_(std::move(images)) {
  if (images_.empty()) throw UsageError("a substitution needs at least one variable");
  for (const auto& p : images_) {
    if (p.nvars() != images_.size()) throw UsageError("substitution images live in a ring of the wrong size");
  }
}

Substitution Substitution::identity(std::size_t nvars, const Field& field) {
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < nvars; ++j) images.push_back(Polynomial::variable(nvars, j, field));
  return Substitution(std::move(images));
}

Substitution Substitution::from_matrix(const std::vector<std::vector<Scalar>>& matrix) {
  std::size_t d = matrix.size();
  if (d == 0) throw UsageError("empty matrix");
  for (const auto& row : matrix) {
    if (row.size() != d) throw UsageError("group matrices must be square");
  }
  Field field = matrix[0][0].field();
  std::vector<Polynomial> images;
  for (std::size_t j = 0; j < d; ++j) {
    Polynomial image(d, field);
    for (std::size_t i = 0; i < d; ++i) image += Polynomial::term(Monomial::variable(d, i), matrix[i][j]);
    images.push_back(std::move(image));
  }
  Substitution g(std::move(images));
  if (!g.is_invertible()) throw UsageError("group matrix is singular");
  return g;
}

bool Substitution::is_linear() const {
  return std::all_of(images_.begin(), images_.end(), [](const Polynomial& p) {
    return std::all_of(p.terms().begin(), p.terms().end(),
                       [](const Polynomial::Term& t) { return t.first.total_degree() == 1; });
  });
}

bool Substitution::is_invertible() const {
  return is_linear() && rank_of(field(), nvars(), linear_part(*this)) == nvars();
}

bool Substitution::is_signed_permutation() const {
  std::set<std::size_t> targets;
  for (const auto& p : images_) {
    if (p.size() != 1 || p.terms()[0].first.total_degree() != 1) return false;
    const auto& c = p.terms()[0].second;
    if (!c.is_one() && !(-c).is_one()) return false;
    const auto& m = p.terms()[0].first;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 1) targets.insert(i);
    }
  }
  return targets.size() == images_.size();
}

Polynomial act(const Substitution& g, const Polynomial& p) {
  if (p.nvars() != g.nvars()) throw UsageError("substitution and polynomial over different rings");
  std::vector<std::map<std::uint32_t, Polynomial>> powers(g.nvars());
  auto power = [&](std::size_t j, std::uint32_t e) -> const Polynomial& {
    auto it = powers[j].find(e);
    if (it == powers[j].end()) it = powers[j].emplace(e, g.images()[j].pow(e)).first;
    return it->second;
  };
  Polynomial out(p.nvars(), p.field());
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(p.nvars(), c);
    for (std::size_t j = 0; j < m.nvars(); ++j) {
      if (m[j] > 0) term = term * power(j, m[j]);
    }
    out += term;
  }
  return out;
}

ModuleElement act(const Substitution& g, const ModuleElement& m) {
  if (m.is_zero()) return m;
  std::vector<Polynomial> parts;
  for (const auto& p : m.components()) parts.push_back(act(g, p));
  return ModuleElement::from_components(parts);
}

Substitution compose(const Substitution& g, const Substitution& h) {
  std::vector<Polynomial> images;
  for (const auto& image : h.images()) images.push_back(act(g, image));
  return Substitution(std::move(images));
}

GroupAction::GroupAction(std::vector<Substitution> generators, std::size_t cap) : generators_(std::move(generators)) {
  if (generators_.empty()) throw UsageError("a group needs at least one generator");
  for (const auto& g : generators_) {
    if (g.nvars() != generators_[0].nvars()) throw UsageError("group generators act on different rings");
    if (!g.is_invertible()) throw UsageError("group generators must be invertible linear substitutions");
  }
  elements_.push_back(Substitution::identity(nvars(), generators_[0].field()));
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    for (const auto& g : generators_) {
      auto next = compose(g, elements_[k]);
      if (std::find(elements_.begin(), elements_.end(), next) == elements_.end()) {
        if (elements_.size() >= cap) {
          throw UsageError("group closure exceeds " + std::to_string(cap) + " elements; is the group finite?");
        }
        elements_.push_back(std::move(next));
      }
    }
  }
}

bool is_homogeneous_action(const std::vector<Substitution>& generators, const RingGrading& grading) {
  for (const auto& g : generators) {
    if (g.nvars() != grading.nvars()) return false;
    for (std::size_t j = 0; j < g.nvars(); ++j) {
      auto target = grading.variable_degree(j);
      for (const auto& [m, c] : g.images()[j].terms()) {
        if (grading.degree(m) != target) return false;
      }
    }
  }
  return true;
}

bool is_homogeneous_action(const GroupAction& action, const RingGrading& grading) {
  return is_homogeneous_action(action.generators(), grading);
}

InvarianceReport span_is_invariant(const std::vector<ModuleElement>& elements, const GroupAction& action) {
  InvarianceReport report;
  if (elements.empty()) return report;
  const Field field = elements[0].field();
  std::map<ModuleMonomial, std::size_t> columns;
  auto index = [&](const ModuleMonomial& m) {
    return columns.emplace(m, columns.size()).first->second;
  };
  auto to_vector = [&](const ModuleElement& m) {
    SparseVector v;
    for (const auto& [mm, c] : m.terms()) v.emplace_back(index(mm), c);
    return v;
  };
  std::vector<std::vector<ModuleElement>> images(action.generators().size());
  for (std::size_t g = 0; g < images.size(); ++g) {
    for (const auto& m : elements) images[g].push_back(act(action.generators()[g], m));
  }
  std::vector<SparseVector> span;
  for (const auto& m : elements) span.push_back(to_vector(m));
  std::vector<std::vector<SparseVector>> targets(images.size());
  for (std::size_t g = 0; g < images.size(); ++g) {
    for (const auto& m : images[g]) targets[g].push_back(to_vector(m));
  }
  std::vector<ModuleMonomial> by_index(columns.size());
  for (const auto& [m, i] : columns) by_index[i] = m;
  Echelon echelon(field, columns.size(), span, true);
  for (std::size_t g = 0; g < images.size(); ++g) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      auto r = echelon.reduce(targets[g][i]);
      InvarianceWitness w{g, i, true, {}, std::nullopt};
      std::vector<ModuleElement::Term> residual;
      for (std::size_t c = 0; c < r.residual.size(); ++c) {
        if (!r.residual[c].is_zero()) residual.emplace_back(by_index[c], r.residual[c]);
      }
      if (residual.empty()) {
        w.coordinates = std::move(r.combination);
      } else {
        w.solved = false;
        report.invariant = false;
        w.residual = ModuleElement::from_terms(elements[0].rank(), elements[0].nvars(), field, std::move(residual));
      }
      report.witnesses.push_back(std::move(w));
    }
  }
  return report;
}

EquivarianceReport check_equivariant_normal_form(const std::vector<ModuleElement>& basis,
                                                 const ModuleGrading& grading, const Field& field,
                                                 const GroupAction& action, const std::vector<ModuleElement>& samples,
                                                 ComplementPolicy policy) {
  check_policy(policy, field);
  if (!is_homogeneous_action(action, grading.ring())) {
    throw UsageError("hypothesis failed: the action does not preserve the grading");
  }
  if (policy == ComplementPolicy::Orthogonal) {
    for (const auto& g : action.generators()) {
      if (!g.is_signed_permutation()) {
        throw UsageError("hypothesis failed: orthogonal complements are only invariant under signed permutations");
      }
    }
  }
  Reducer reducer(grading, field, basis, policy);
  const auto& gens = action.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (const auto& x : basis) {
      if (!reducer.reduces_to_zero(act(gens[g], x))) {
        throw UsageError("hypothesis failed: the module is not invariant under generator " + std::to_string(g + 1));
      }
    }
  }

  std::set<Degree> checked_degrees;
  auto check_pivot_complements = [&](const std::vector<Degree>& degrees) {
    if (policy != ComplementPolicy::Pivot) return;
    for (const auto& b : degrees) {
      if (!checked_degrees.insert(b).second) continue;
      auto w = reducer.w_space(b);
      std::set<std::size_t> pivots(w->pivots().begin(), w->pivots().end());
      const auto& terms = w->ambient().terms();
      for (std::size_t c = 0; c < terms.size(); ++c) {
        if (pivots.count(c)) continue;
        auto u = ModuleElement::from_terms(grading.rank(), grading.nvars(), field, {{terms[c], field.one()}});
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          for (const auto& [col, s] : w->ambient().coordinates(act(gens[gi], u))) {
            if (pivots.count(col)) {
              throw UsageError("hypothesis failed: the pivot complement in degree " + to_string(b) +
                               " is not invariant under generator " + std::to_string(gi + 1));
            }
          }
        }
      }
    }
  };

  EquivarianceReport report;
  for (const auto& m : samples) {
    auto base = reducer.reduce(m, ReductionMode::Complement);
    check_pivot_complements(base.examined);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto image = reducer.reduce(act(gens[g], m), ReductionMode::Complement);
      check_pivot_complements(image.examined);
      auto rhs = act(gens[g], base.final);
      ++report.checked;
      if (!(image.final == rhs)) {
        report.equivariant = false;
        if (!report.counterexample) report.counterexample = EquivarianceCounterexample{m, g, image.final, rhs};
      }
    }
  }
  return report;
}

}  // namespace macaulay
