#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "macaulay/grading.hpp"
#include "macaulay/linalg.hpp"
#include "macaulay/polymod.hpp"

namespace macaulay {

// How a subspace W of a graded component picks its complement W^c.
//   Pivot:      span of the monomials that are not pivots of the echelon form of W
//               (ambient monomials in storage order). Valid in every characteristic.
//   Orthogonal: orthogonal complement when monomials are an orthonormal basis.
//               Characteristic 0 only.
enum class ComplementPolicy { Pivot, Orthogonal };

std::string to_string(ComplementPolicy policy);
ComplementPolicy parse_complement_policy(std::string_view text);
// Orthogonal over Q, pivot over F_p.
ComplementPolicy default_policy(const Field& field);
void check_policy(ComplementPolicy policy, const Field& field);

// The monomial basis of one graded component N_b, in storage order.
class ComponentBasis {
 public:
  ComponentBasis(const ModuleGrading& grading, Degree degree);

  const Degree& degree() const { return degree_; }
  const std::vector<ModuleMonomial>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  std::optional<std::size_t> index_of(const ModuleMonomial& m) const;

  // Throws UsageError when v has a term outside the component.
  SparseVector coordinates(const ModuleElement& v) const;
  ModuleElement element(const std::vector<Scalar>& coords, std::size_t rank, std::size_t nvars,
                        const Field& field) const;

 private:
  Degree degree_;
  std::vector<ModuleMonomial> terms_;
  std::map<ModuleMonomial, std::size_t> index_;
};

// One summand c * r * lf(m_index) of an element of W_b(X).
struct WTerm {
  std::size_t index;
  Monomial multiplier;
  Scalar coefficient;
};

// W_b(X) = span{ r * lf(m_i) : deg(r m_i) = b } inside N_b, kept in reduced row echelon
// form with the spanning vectors tracked so members can be decomposed.
class GradedSubspace {
 public:
  GradedSubspace(const ModuleGrading& grading, const Field& field, const std::vector<ModuleElement>& leading_forms,
                 const std::vector<Degree>& degrees, Degree b);

  const Degree& degree() const { return ambient_.degree(); }
  const ComponentBasis& ambient() const { return ambient_; }
  std::size_t dimension() const { return echelon_.rank(); }
  const std::vector<std::size_t>& pivots() const { return echelon_.pivots(); }
  // The spanning products (index i, multiplier r) in enumeration order.
  const std::vector<std::pair<std::size_t, Monomial>>& spanning() const { return spanning_; }
  // Echelon rows as module elements.
  std::vector<ModuleElement> basis() const;

  bool contains(const ModuleElement& v) const;
  // The component of v in W^c along W; v minus the result lies in W.
  ModuleElement project_complement(const ModuleElement& v, ComplementPolicy policy) const;
  bool in_complement(const ModuleElement& v, ComplementPolicy policy) const;
  // v = sum c * r * lf(m_i). Throws MembershipError when v is not in W.
  std::vector<WTerm> decompose(const ModuleElement& v) const;

 private:
  std::size_t rank_;
  std::size_t nvars_;
  Field field_;
  ComponentBasis ambient_;
  std::vector<std::pair<std::size_t, Monomial>> spanning_;
  Echelon echelon_;
};

}  // namespace macaulay
