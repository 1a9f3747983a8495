#include "macaulay/macbasis.hpp"

#include <algorithm>
#include <stdexcept>

namespace macaulay {

namespace {

void dedupe(std::vector<ModuleElement>& elements) {
  std::vector<ModuleElement> out;
  for (auto& e : elements) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(std::move(e));
  }
  elements = std::move(out);
}

std::vector<ModuleElement> extended_module_syzygies(const std::vector<ModuleElement>& lfs, const Field& field) {
  std::size_t rank = lfs[0].rank(), n = lfs.size(), nvars = lfs[0].nvars();
  auto ring = RingGrading::degrevlex(nvars);
  auto ext = ModuleGrading::free_module(ring, rank + n, {}, TieOrder::PositionOverTerm);
  std::vector<ModuleElement> gens;
  for (std::size_t i = 0; i < n; ++i) {
    auto terms = lfs[i].terms();
    terms.emplace_back(ModuleMonomial{Monomial(nvars), rank + i}, field.one());
    gens.push_back(ModuleElement::from_terms(rank + n, nvars, field, std::move(terms)));
  }
  BuchbergerConfig config;
  config.max_iterations = 256;
  auto basis = buchberger_algorithm(gens, ext, field, config);
  std::vector<ModuleElement> out;
  for (const auto& g : basis.elements) {
    bool touches_n = std::any_of(g.terms().begin(), g.terms().end(),
                                 [&](const ModuleElement::Term& t) { return t.first.component < rank; });
    if (touches_n) continue;
    std::vector<ModuleElement::Term> terms;
    for (const auto& [mm, c] : g.terms()) terms.emplace_back(ModuleMonomial{mm.monomial, mm.component - rank}, c);
    out.push_back(ModuleElement::from_terms(n, nvars, field, std::move(terms)));
  }
  return out;
}

}  // namespace

ModuleElement apply_syzygy(const ModuleElement& s, const std::vector<ModuleElement>& elements) {
  if (s.rank() != elements.size()) throw UsageError("syzygy length does not match the number of elements");
  return combine(s.components(), elements);
}

ModuleGrading syzygy_grading(const ModuleGrading& grading, const std::vector<Degree>& degrees) {
  return ModuleGrading::syzygy(grading, degrees);
}

std::vector<ModuleElement> monomial_syzygy_generators(const std::vector<ModuleElement>& terms) {
  std::size_t n = terms.size();
  std::vector<ModuleElement> out;
  for (const auto& t : terms) {
    if (t.size() != 1) throw UsageError("monomial syzygies need single-term elements");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& [mi, ci] = terms[i].terms()[0];
      const auto& [mj, cj] = terms[j].terms()[0];
      if (mi.component != mj.component) continue;
      Monomial l = Monomial::lcm(mi.monomial, mj.monomial);
      std::size_t nvars = l.nvars();
      std::vector<ModuleElement::Term> s;
      s.emplace_back(ModuleMonomial{l.quotient(mi.monomial), i}, ci.inverse());
      s.emplace_back(ModuleMonomial{l.quotient(mj.monomial), j}, -cj.inverse());
      out.push_back(ModuleElement::from_terms(n, nvars, ci.field(), std::move(s)));
    }
  }
  return out;
}

std::vector<ModuleElement> leading_syzygy_generators(const std::vector<ModuleElement>& leading_forms,
                                                     const ModuleGrading& grading, const Field& field) {
  if (leading_forms.size() < 2) return {};
  std::vector<Degree> degrees;
  for (const auto& lf : leading_forms) {
    if (lf.is_zero() || !is_homogeneous(lf, grading)) throw UsageError("leading forms must be nonzero and homogeneous");
    degrees.push_back(degree(lf, grading));
  }
  bool monomial = std::all_of(leading_forms.begin(), leading_forms.end(),
                              [](const ModuleElement& m) { return m.size() == 1; });
  if (monomial) return monomial_syzygy_generators(leading_forms);

  auto syz = syzygy_grading(grading, degrees);
  std::vector<ModuleElement> out;
  for (const auto& s : extended_module_syzygies(leading_forms, field)) {
    for (auto& part : homogeneous_components(s, syz)) out.push_back(part.element.normalized(syz));
  }
  dedupe(out);
  sort_canonical(out, syz);
  return out;
}

CriterionResult buchberger_criterion(const std::vector<ModuleElement>& elements, const ModuleGrading& grading,
                                     const Field& field) {
  CriterionResult result;
  if (elements.empty()) return result;
  Reducer reducer(grading, field, elements, ComplementPolicy::Pivot);
  for (const auto& s : leading_syzygy_generators(reducer.leading_forms(), grading, field)) {
    ++result.syzygies_checked;
    auto remainder = reducer.reduce(apply_syzygy(s, elements), ReductionMode::Span).final;
    if (!remainder.is_zero()) {
      result.passed = false;
      result.witness = s;
      result.remainder = std::move(remainder);
      return result;
    }
  }
  return result;
}

std::uint64_t BuchbergerConfig::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(max_iterations);
  mix(degree_cap ? static_cast<std::uint64_t>(*degree_cap) + 1 : 0);
  mix(static_cast<std::uint64_t>(policy));
  mix(static_cast<std::uint64_t>(reduction));
  return h;
}

MacaulayBasis buchberger_algorithm(const std::vector<ModuleElement>& generators, const ModuleGrading& grading,
                                   const Field& field, const BuchbergerConfig& config) {
  if (config.max_iterations < 1) throw UsageError("max iterations must be at least 1");
  MacaulayBasis basis{{}, grading, field, false, generators, config.hash(), 0};
  for (const auto& g : generators) {
    if (g.rank() != grading.rank() || g.nvars() != grading.nvars()) {
      throw UsageError("generator does not live in the graded module");
    }
    if (!g.is_zero()) basis.elements.push_back(g);
  }
  dedupe(basis.elements);
  if (basis.elements.empty()) return basis;

  while (true) {
    Reducer reducer(grading, field, basis.elements, config.policy);
    auto syzygies = leading_syzygy_generators(reducer.leading_forms(), grading, field);
    std::vector<ModuleElement> fresh;
    for (const auto& s : syzygies) {
      auto r = reducer.reduce(apply_syzygy(s, basis.elements), config.reduction).final;
      if (r.is_zero()) continue;
      r = r.normalized(grading);
      if (std::find(fresh.begin(), fresh.end(), r) == fresh.end()) fresh.push_back(std::move(r));
    }
    if (fresh.empty()) return basis;

    ++basis.iterations;
    for (const auto& r : fresh) {
      auto lf = leading_form(r, grading);
      // The leading-form module must grow strictly.
      if (reducer.w_space(lf.degree)->contains(lf.element)) {
        throw std::logic_error("normal form has a leading form inside W_b(X)");
      }
      if (config.degree_cap) {
        for (const auto& [mm, c] : r.terms()) {
          if (static_cast<std::int64_t>(mm.monomial.total_degree()) > *config.degree_cap) {
            auto partial = basis.elements;
            partial.insert(partial.end(), fresh.begin(), fresh.end());
            throw BuchbergerLimitError("degree cap " + std::to_string(*config.degree_cap) + " exceeded", partial,
                                       basis.iterations);
          }
        }
      }
    }
    basis.elements.insert(basis.elements.end(), fresh.begin(), fresh.end());
    if (basis.iterations >= config.max_iterations) {
      // One more pass decides whether the last iteration already completed the basis.
      Reducer check(grading, field, basis.elements, config.policy);
      bool done = true;
      for (const auto& s : leading_syzygy_generators(check.leading_forms(), grading, field)) {
        if (!check.reduces_to_zero(apply_syzygy(s, basis.elements))) {
          done = false;
          break;
        }
      }
      if (done) return basis;
      throw BuchbergerLimitError("iteration limit " + std::to_string(config.max_iterations) + " reached",
                                 basis.elements, basis.iterations);
    }
  }
}

MacaulayBasis interreduce(const MacaulayBasis& basis, ComplementPolicy policy) {
  MacaulayBasis out = basis;
  auto& xs = out.elements;
  dedupe(xs);
  bool changed = true;
  std::size_t rounds = 0;
  while (changed) {
    changed = false;
    if (++rounds > 1000) throw std::logic_error("interreduction did not stabilize");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::vector<ModuleElement> others;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j != i) others.push_back(xs[j]);
      }
      ModuleElement r = others.empty() ? xs[i] : Reducer(out.grading, out.field, others, policy).normal_form(xs[i]);
      if (r.is_zero()) {
        xs.erase(xs.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      r = r.normalized(out.grading);
      if (!(r == xs[i])) {
        xs[i] = std::move(r);
        changed = true;
      }
    }
  }
  sort_canonical(xs, out.grading);
  out.reduced = true;
  return out;
}

ModuleElement lift_syzygy(const ModuleElement& s, const std::vector<ModuleElement>& elements,
                          const ModuleGrading& grading, const Field& field) {
  if (s.is_zero()) return s;
  Reducer reducer(grading, field, elements, ComplementPolicy::Pivot);
  auto trace = reducer.reduce(apply_syzygy(s, elements), ReductionMode::Span);
  if (!trace.final.is_zero()) {
    throw UsageError("the elements fail the Buchberger criterion: a leading syzygy does not lift");
  }
  return s - ModuleElement::from_components(trace.representation);
}

std::map<Degree, std::size_t> degree_profile(const std::vector<ModuleElement>& elements, const ModuleGrading& grading) {
  std::map<Degree, std::size_t> profile;
  for (const auto& e : elements) ++profile[degree(e, grading)];
  return profile;
}

void sort_canonical(std::vector<ModuleElement>& elements, const ModuleGrading& grading) {
  std::vector<std::pair<Degree, ModuleElement>> keyed;
  for (auto& e : elements) keyed.emplace_back(e.is_zero() ? Degree{} : degree(e, grading), std::move(e));
  std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.second.is_zero() || b.second.is_zero()) return a.second.is_zero() && !b.second.is_zero();
    int c = grading.compare(a.first, b.first);
    if (c != 0) return c < 0;
    return compare_terms(a.second, b.second) < 0;
  });
  elements.clear();
  for (auto& [d, e] : keyed) elements.push_back(std::move(e));
}

}  // namespace macaulay
