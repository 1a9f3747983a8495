#pragma once

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "macaulay/macbasis.hpp"
#include "macaulay/polymod.hpp"
#include "oracles.hpp"

namespace support {

using namespace macaulay;

inline std::string fixture(const std::string& name) { return std::string(MACAULAY_FIXTURES) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline RingContext ring2(Field f = Field::rationals()) { return RingContext(f, {"x1", "x2"}); }
inline RingContext ring3(Field f = Field::rationals()) { return RingContext(f, {"x1", "x2", "x3"}); }

inline std::vector<ModuleElement> parse_all(const RingContext& ring, const std::vector<std::string>& texts,
                                            std::size_t rank = 1) {
  std::vector<ModuleElement> out;
  for (const auto& t : texts) out.push_back(ring.parse_element(t, rank));
  return out;
}

inline ModuleGrading total(std::size_t n, std::size_t rank = 1) {
  return ModuleGrading::free_module(RingGrading::total_degree(n), rank);
}
inline ModuleGrading drl(std::size_t n, std::size_t rank = 1) {
  return ModuleGrading::free_module(RingGrading::degrevlex(n), rank, {},
                                    rank > 1 ? TieOrder::PositionOverTerm : TieOrder::None);
}

inline std::vector<ModuleElement> grobsym(Field f = Field::rationals()) {
  return parse_all(ring2(f), {"x1^2 + x2^2 - 1", "x1^2*x2^2 - 1"});
}
inline std::vector<ModuleElement> c4_generators(Field f = Field::rationals()) {
  return parse_all(ring2(f), {"x1^2 + x2^2 - 1", "x1^2*x2^2", "x1^3*x2 - x1*x2^3"});
}
inline std::vector<ModuleElement> c4_expected_basis(Field f = Field::rationals()) {
  return parse_all(ring2(f), {"x1^2 + x2^2 - 1", "x1^2*x2^2", "x1^3*x2 - x1*x2^3", "x1*x2^2", "x1^2*x2", "x1*x2"});
}

// Random element of the submodule generated by gens.
inline ModuleElement random_member(std::mt19937_64& rng, const std::vector<ModuleElement>& gens,
                                   std::size_t max_degree = 3) {
  RandomElementOptions o;
  o.max_degree = max_degree;
  o.max_terms = 3;
  std::vector<Polynomial> coeffs;
  for (const auto& g : gens) coeffs.push_back(random_polynomial(rng, g.nvars(), g.field(), o));
  return combine(coeffs, gens);
}

template <class K>
K convert(const Scalar& s) {
  if constexpr (std::is_same_v<K, mpq_class>) return s.rational();
  else return oracle::Zp(s.residue());
}

// Rank of a set of module elements, computed with the dense oracle.
template <class K>
std::size_t oracle_rank(const std::vector<ModuleElement>& xs) {
  std::map<ModuleMonomial, std::size_t> cols;
  for (const auto& x : xs) {
    for (const auto& [m, c] : x.terms()) cols.emplace(m, cols.size());
  }
  std::vector<std::vector<K>> rows;
  for (const auto& x : xs) {
    std::vector<K> row(cols.size(), K(0));
    for (const auto& [m, c] : x.terms()) row[cols.at(m)] = convert<K>(c);
    rows.push_back(std::move(row));
  }
  return oracle::rank(rows);
}

inline std::size_t rank_any(const std::vector<ModuleElement>& xs) {
  if (xs.empty()) return 0;
  if (xs[0].field().is_rational()) return oracle_rank<mpq_class>(xs);
  oracle::Zp::p = xs[0].field().characteristic();
  return oracle_rank<oracle::Zp>(xs);
}

inline bool same_span(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b) {
  auto all = a;
  all.insert(all.end(), b.begin(), b.end());
  auto r = rank_any(all);
  return r == rank_any(a) && r == rank_any(b);
}

// Span equality of the elements of each degree separately.
inline bool same_span_per_degree(const std::vector<ModuleElement>& a, const std::vector<ModuleElement>& b,
                                 const ModuleGrading& grading) {
  std::map<Degree, std::pair<std::vector<ModuleElement>, std::vector<ModuleElement>>> by;
  for (const auto& x : a) by[degree(x, grading)].first.push_back(x);
  for (const auto& x : b) by[degree(x, grading)].second.push_back(x);
  for (const auto& [d, pair] : by) {
    if (!same_span(pair.first, pair.second)) return false;
  }
  return true;
}

}  // namespace support
