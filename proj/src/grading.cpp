#include "macaulay/grading.hpp"

#include <algorithm>
#include <optional>
#include <random>

#include <gmpxx.h>

#include "macaulay/error.hpp"

namespace macaulay {

namespace {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// Row-reduces in place and returns the pivot columns.
std::vector<std::size_t> rational_rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t found = row;
    while (found < m.size() && m[found][col] == 0) ++found;
    if (found == m.size()) continue;
    std::swap(m[row], m[found]);
    mpq_class inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      mpq_class f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Solves A x = b over Q for A given as rows; nullopt when inconsistent.
std::optional<std::vector<mpq_class>> rational_solve(const IntMatrix& a, const DegreeVector& b) {
  std::size_t n = a.empty() ? 0 : a[0].size();
  RationalMatrix m;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<mpq_class> row;
    for (auto v : a[i]) row.emplace_back(static_cast<long>(v));
    row.emplace_back(static_cast<long>(b[i]));
    m.push_back(std::move(row));
  }
  auto pivots = rational_rref(m, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<mpq_class> x(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][n];
  return x;
}

void check_nonnegative_columns(const IntMatrix& map, std::size_t nvars) {
  for (std::size_t j = 0; j < nvars; ++j) {
    bool nonzero = false;
    for (const auto& row : map) {
      if (row[j] < 0) throw UsageError("degree map entries must be nonnegative");
      nonzero = nonzero || row[j] != 0;
    }
    if (!nonzero) throw UsageError("every variable needs a nonzero degree");
  }
}

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void enumerate(const IntMatrix& map, std::size_t var, DegreeVector& remaining,
               std::vector<std::uint32_t>& exps, std::vector<Monomial>& out) {
  std::size_t nvars = exps.size();
  if (var == nvars) {
    if (std::all_of(remaining.begin(), remaining.end(), [](auto v) { return v == 0; })) {
      out.emplace_back(exps);
    }
    return;
  }
  std::int64_t bound = -1;
  for (std::size_t r = 0; r < map.size(); ++r) {
    if (map[r][var] > 0) {
      std::int64_t b = remaining[r] / map[r][var];
      bound = bound < 0 ? b : std::min(bound, b);
    }
  }
  for (std::int64_t e = 0; e <= bound; ++e) {
    exps[var] = static_cast<std::uint32_t>(e);
    for (std::size_t r = 0; r < map.size(); ++r) remaining[r] -= e * map[r][var];
    enumerate(map, var + 1, remaining, exps, out);
    for (std::size_t r = 0; r < map.size(); ++r) remaining[r] += e * map[r][var];
  }
  exps[var] = 0;
}

int sign(std::int64_t v) { return (v > 0) - (v < 0); }

}  // namespace

std::string to_string(const Degree& degree) {
  std::string s;
  if (degree.value.size() == 1) {
    s = std::to_string(degree.value[0]);
  } else {
    s = "(";
    for (std::size_t i = 0; i < degree.value.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(degree.value[i]);
    }
    s += ")";
  }
  if (degree.component >= 0) s += "@e" + std::to_string(degree.component + 1);
  return s;
}

RingGrading::RingGrading(RingGradingKind kind, std::size_t nvars, IntMatrix map, IntMatrix order,
                         std::vector<bool> kept)
    : kind_(kind), nvars_(nvars), map_(std::move(map)), order_(std::move(order)), kept_(std::move(kept)) {
  for (const auto& row : map_) {
    if (row.size() != nvars_) throw UsageError("degree map has wrong width");
  }
  for (const auto& row : order_) {
    if (row.size() != map_.size()) throw UsageError("order matrix has wrong width");
  }
  check_nonnegative_columns(map_, nvars_);
}

RingGrading RingGrading::total_degree(std::size_t nvars) {
  return RingGrading(RingGradingKind::TotalDegree, nvars, IntMatrix{std::vector<std::int64_t>(nvars, 1)},
                     IntMatrix{{1}});
}

RingGrading RingGrading::matrix_order(IntMatrix weights) {
  std::size_t d = weights.size();
  for (const auto& row : weights) {
    if (row.size() != d) throw UsageError("weight matrix must be square");
  }
  if (d == 0) throw UsageError("weight matrix must be nonempty");
  return RingGrading(RingGradingKind::MatrixOrder, d, identity(d), std::move(weights));
}

RingGrading RingGrading::degrevlex(std::size_t nvars) {
  IntMatrix w;
  w.emplace_back(nvars, 1);
  for (std::size_t i = nvars; i-- > 1;) {
    std::vector<std::int64_t> row(nvars, 0);
    row[i] = -1;
    w.push_back(std::move(row));
  }
  return matrix_order(std::move(w));
}

RingGrading RingGrading::lex(std::size_t nvars) { return matrix_order(identity(nvars)); }

RingGrading RingGrading::elimination(std::vector<bool> kept) {
  std::size_t d = kept.size();
  IntMatrix map(2, std::vector<std::int64_t>(d, 0));
  for (std::size_t j = 0; j < d; ++j) map[kept[j] ? 0 : 1][j] = 1;
  // Positive dropped weight dominates: compare the second coordinate first.
  IntMatrix order{{0, 1}, {1, 0}};
  return RingGrading(RingGradingKind::Elimination, d, std::move(map), std::move(order), std::move(kept));
}

DegreeVector RingGrading::degree(const Monomial& m) const {
  DegreeVector v(map_.size(), 0);
  for (std::size_t r = 0; r < map_.size(); ++r) {
    for (std::size_t j = 0; j < nvars_; ++j) v[r] += map_[r][j] * static_cast<std::int64_t>(m[j]);
  }
  return v;
}

DegreeVector RingGrading::variable_degree(std::size_t i) const {
  return degree(Monomial::variable(nvars_, i));
}

int RingGrading::compare(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const {
  for (const auto& row : order_) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * (a[k] - b[k]);
    if (s != 0) return sign(s);
  }
  return 0;
}

std::vector<Monomial> RingGrading::monomials_of_degree(std::span<const std::int64_t> degree) const {
  if (degree.size() != dimension()) throw UsageError("degree has wrong shape for this grading");
  std::vector<Monomial> out;
  if (std::any_of(degree.begin(), degree.end(), [](auto v) { return v < 0; })) return out;
  if (kind_ == RingGradingKind::MatrixOrder) {
    std::vector<std::uint32_t> exps(degree.begin(), degree.end());
    out.emplace_back(std::move(exps));
    return out;
  }
  DegreeVector remaining(degree.begin(), degree.end());
  std::vector<std::uint32_t> exps(nvars_, 0);
  enumerate(map_, 0, remaining, exps, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_degrevlex(a, b) > 0; });
  return out;
}

ModuleGrading::ModuleGrading(RingGrading ring, std::vector<Degree> generator_degrees, TieOrder tie)
    : ring_(std::move(ring)), generators_(std::move(generator_degrees)), tie_(tie) {
  for (auto& g : generators_) {
    if (g.value.size() != ring_.dimension()) throw UsageError("module shift has wrong shape for the ring grading");
    if (tie_ == TieOrder::None) g.component = -1;
    else if (g.component < 0) throw UsageError("a tie order needs component tags");
  }
}

ModuleGrading ModuleGrading::free_module(RingGrading ring, std::size_t rank, std::vector<DegreeVector> shifts,
                                         TieOrder tie) {
  if (shifts.empty()) shifts.assign(rank, ring.zero());
  if (shifts.size() != rank) throw UsageError("number of shifts does not match the module rank");
  std::vector<Degree> gens;
  for (std::size_t i = 0; i < rank; ++i) {
    gens.push_back(Degree{shifts[i], tie == TieOrder::None ? -1 : static_cast<int>(i)});
  }
  return ModuleGrading(std::move(ring), std::move(gens), tie);
}

ModuleGrading ModuleGrading::syzygy(const ModuleGrading& base, std::vector<Degree> base_degrees) {
  return ModuleGrading(base.ring(), std::move(base_degrees), base.tie());
}

Degree ModuleGrading::degree(const ModuleMonomial& m) const {
  const Degree& g = generators_.at(m.component);
  return act(ring_.degree(m.monomial), g);
}

int ModuleGrading::compare(const Degree& a, const Degree& b) const {
  int by_term = ring_.compare(a.value, b.value);
  int by_position = a.component == b.component ? 0 : (a.component < b.component ? 1 : -1);
  switch (tie_) {
    case TieOrder::None:
      return by_term;
    case TieOrder::TermOverPosition:
      return by_term != 0 ? by_term : by_position;
    case TieOrder::PositionOverTerm:
      return by_position != 0 ? by_position : by_term;
  }
  return by_term;
}

Degree ModuleGrading::act(std::span<const std::int64_t> ring_degree, const Degree& b) const {
  Degree out = b;
  for (std::size_t i = 0; i < out.value.size(); ++i) out.value[i] += ring_degree[i];
  return out;
}

std::vector<Monomial> ModuleGrading::multipliers(const Degree& source, const Degree& target) const {
  if (tie_ != TieOrder::None && source.component != target.component) return {};
  DegreeVector diff(target.value.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = target.value[i] - source.value[i];
  return ring_.monomials_of_degree(diff);
}

std::vector<ModuleMonomial> ModuleGrading::component_monomials(const Degree& b) const {
  std::vector<ModuleMonomial> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (tie_ != TieOrder::None && generators_[i].component != b.component) continue;
    for (auto& m : multipliers(generators_[i], b)) out.push_back(ModuleMonomial{std::move(m), i});
  }
  return out;
}

RefinementMap RefinementMap::between(const RingGrading& fine, const RingGrading& coarse) {
  if (fine.nvars() != coarse.nvars()) throw UsageError("refinement between rings of different dimension");
  // Solve F G_fine = G_coarse one coarse row at a time: G_fine^T f = g^T.
  const auto& gf = fine.degree_map();
  IntMatrix transposed(fine.nvars(), std::vector<std::int64_t>(gf.size()));
  for (std::size_t r = 0; r < gf.size(); ++r)
    for (std::size_t j = 0; j < fine.nvars(); ++j) transposed[j][r] = gf[r][j];
  IntMatrix f;
  for (const auto& row : coarse.degree_map()) {
    auto x = rational_solve(transposed, row);
    if (!x) throw UsageError("coarse degrees are not a function of fine degrees");
    std::vector<std::int64_t> frow;
    for (const auto& q : *x) {
      if (q.get_den() != 1) throw UsageError("refinement map is not integral");
      frow.push_back(q.get_num().get_si());
    }
    f.push_back(std::move(frow));
  }
  // Monotonicity on the degrees of all monomials of small total degree.
  std::size_t max_deg = fine.nvars() > 6 ? 2 : 3;
  std::vector<DegreeVector> samples;
  auto total = RingGrading::total_degree(fine.nvars());
  for (std::size_t k = 0; k <= max_deg; ++k) {
    for (const auto& m : total.monomials_of_degree(DegreeVector{static_cast<std::int64_t>(k)})) {
      samples.push_back(fine.degree(m));
    }
  }
  RefinementMap map(std::move(f), false);
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      if (fine.compare(a, b) <= 0 && coarse.compare(map.apply(a), map.apply(b)) > 0) {
        throw UsageError("refinement map is not order preserving");
      }
    }
  }
  return map;
}

RefinementMap RefinementMap::between(const ModuleGrading& fine, const ModuleGrading& coarse) {
  RefinementMap map = between(fine.ring(), coarse.ring());
  if (fine.rank() != coarse.rank()) throw UsageError("refinement between modules of different rank");
  map.keep_component_ = coarse.tie() != TieOrder::None;
  if (map.keep_component_ && fine.tie() == TieOrder::None) {
    throw UsageError("a grading without component tags cannot refine one with tags");
  }
  for (std::size_t i = 0; i < fine.rank(); ++i) {
    if (map.apply(fine.generator_degree(i)) != coarse.generator_degree(i)) {
      throw UsageError("generator degrees are incompatible with the refinement map");
    }
  }
  return map;
}

DegreeVector RefinementMap::apply(std::span<const std::int64_t> ring_degree) const {
  DegreeVector out(matrix_.size(), 0);
  for (std::size_t r = 0; r < matrix_.size(); ++r)
    for (std::size_t k = 0; k < ring_degree.size(); ++k) out[r] += matrix_[r][k] * ring_degree[k];
  return out;
}

Degree RefinementMap::apply(const Degree& degree) const {
  return Degree{apply(degree.value), keep_component_ ? degree.component : -1};
}

OrderReport verify_monoid_order(const RingGrading& grading, std::size_t samples, std::uint64_t seed) {
  OrderReport report;
  auto zero = grading.zero();
  for (std::size_t i = 0; i < grading.nvars(); ++i) {
    if (grading.compare(grading.variable_degree(i), zero) <= 0) {
      report.zero_minimal = false;
      report.failures.push_back("x" + std::to_string(i + 1) + " does not have positive degree");
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> expo(0, 6);
  auto random_degree = [&] {
    std::vector<std::uint32_t> e(grading.nvars());
    for (auto& x : e) x = expo(rng);
    return grading.degree(Monomial(e));
  };
  for (std::size_t s = 0; s < samples && report.translation_invariant; ++s) {
    auto a = random_degree(), b = random_degree(), c = random_degree();
    auto ac = a, bc = b;
    for (std::size_t k = 0; k < a.size(); ++k) {
      ac[k] += c[k];
      bc[k] += c[k];
    }
    if (grading.compare(a, b) != grading.compare(ac, bc)) {
      report.translation_invariant = false;
      report.failures.push_back("order is not translation invariant");
    }
    // Antisymmetry on the same sample.
    if (grading.compare(a, b) != -grading.compare(b, a)) {
      report.translation_invariant = false;
      report.failures.push_back("order is not antisymmetric");
    }
  }
  if (grading.kind() == RingGradingKind::MatrixOrder) {
    const auto& w = grading.order_matrix();
    RationalMatrix m;
    for (const auto& row : w) {
      std::vector<mpq_class> r;
      for (auto v : row) r.emplace_back(static_cast<long>(v));
      m.push_back(std::move(r));
    }
    if (rational_rref(m, w.size()).size() != w.size()) {
      report.structurally_valid = false;
      report.failures.push_back("weight matrix is singular");
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
      for (const auto& row : w) {
        if (row[j] == 0) continue;
        if (row[j] < 0) {
          report.structurally_valid = false;
          report.failures.push_back("column " + std::to_string(j + 1) + " of the weight matrix is not lexicographically positive");
        }
        break;
      }
    }
  }
  return report;
}

OrderReport verify_monoid_order(const ModuleGrading& grading, std::size_t samples, std::uint64_t seed) {
  OrderReport report = verify_monoid_order(grading.ring(), samples, seed);
  const auto& ring = grading.ring();
  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<std::uint32_t> expo(0, 5);
  auto random_ring_degree = [&] {
    std::vector<std::uint32_t> e(ring.nvars());
    for (auto& x : e) x = expo(rng);
    return ring.degree(Monomial(e));
  };
  std::uniform_int_distribution<std::size_t> comp(0, grading.rank() == 0 ? 0 : grading.rank() - 1);
  for (std::size_t s = 0; s < samples && grading.rank() > 0 && report.monotone_action; ++s) {
    auto a = random_ring_degree(), a2 = random_ring_degree();
    Degree b = grading.act(random_ring_degree(), grading.generator_degree(comp(rng)));
    Degree b2 = grading.act(random_ring_degree(), grading.generator_degree(comp(rng)));
    if (ring.compare(a, a2) <= 0 && grading.compare(grading.act(a, b), grading.act(a2, b)) > 0) {
      report.monotone_action = false;
      report.failures.push_back("action is not monotone in the ring degree");
    }
    if (grading.compare(b, b2) <= 0 && grading.compare(grading.act(a, b), grading.act(a, b2)) > 0) {
      report.monotone_action = false;
      report.failures.push_back("action is not monotone in the module degree");
    }
  }
  return report;
}

}  // namespace macaulay
