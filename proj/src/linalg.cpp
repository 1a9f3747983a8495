#include "macaulay/linalg.hpp"

#include <algorithm>
#include <variant>

#include <gmpxx.h>

#include "macaulay/error.hpp"
#include "macaulay/simd/fp_kernels.hpp"

namespace macaulay {

namespace {

struct RationalOps {
  using T = mpq_class;
  T zero() const { return 0; }
  T one() const { return 1; }
  T from(const Scalar& s) const { return s.rational(); }
  Scalar to(const T& v) const { return Scalar(v); }
  bool is_zero(const T& v) const { return sgn(v) == 0; }
  T inverse(const T& v) const { return 1 / v; }
  T neg(const T& v) const { return -v; }
  void submul(std::vector<T>& dst, const std::vector<T>& src, const T& c) const {
    for (std::size_t i = 0; i < dst.size(); ++i) {
      if (sgn(src[i]) != 0) dst[i] -= c * src[i];
    }
  }
  void scale(std::vector<T>& dst, const T& c) const {
    for (auto& x : dst) x *= c;
  }
};

struct ModularOps {
  using T = std::uint32_t;
  std::uint32_t p;
  T zero() const { return 0; }
  T one() const { return 1; }
  T from(const Scalar& s) const { return s.residue(); }
  Scalar to(T v) const { return Scalar(Residue{v, p}); }
  bool is_zero(T v) const { return v == 0; }
  T inverse(T v) const { return Scalar(Residue{v, p}).inverse().residue(); }
  T neg(T v) const { return v == 0 ? 0 : p - v; }
  void submul(std::vector<T>& dst, const std::vector<T>& src, T c) const {
    simd::active().submul(dst.data(), src.data(), dst.size(), c, p);
  }
  void scale(std::vector<T>& dst, T c) const { simd::active().scale(dst.data(), dst.size(), c, p); }
};

template <typename Ops>
struct Store {
  using T = typename Ops::T;
  Ops ops;
  std::size_t columns = 0;
  std::size_t width = 0;  // columns plus tracking columns
  std::vector<std::vector<T>> rows;

  std::vector<T> dense(const SparseVector& v, std::size_t tracked_index, bool track) const {
    std::vector<T> out(width, ops.zero());
    for (const auto& [col, s] : v) {
      if (col >= columns) throw UsageError("vector entry outside the ambient space");
      out[col] = ops.from(s);
    }
    if (track) out[columns + tracked_index] = ops.one();
    return out;
  }

  // Dependent vectors are dropped.
  void insert(std::vector<T> v, std::vector<std::size_t>& pivots) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      T c = v[pivots[k]];
      if (!ops.is_zero(c)) ops.submul(v, rows[k], c);
    }
    std::size_t col = 0;
    while (col < columns && ops.is_zero(v[col])) ++col;
    if (col == columns) return;
    ops.scale(v, ops.inverse(v[col]));
    for (auto& row : rows) {
      T c = row[col];
      if (!ops.is_zero(c)) ops.submul(row, v, c);
    }
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < col) ++pos;
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), col);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
  }

  std::vector<T> reduce(std::vector<T> v, const std::vector<std::size_t>& pivots) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      T c = v[pivots[k]];
      if (!ops.is_zero(c)) ops.submul(v, rows[k], c);
    }
    return v;
  }
};

}  // namespace

struct Echelon::Impl {
  std::variant<Store<RationalOps>, Store<ModularOps>> store;
  bool track = false;
  std::size_t inputs = 0;
};

Echelon::Echelon(Field field, std::size_t columns, const std::vector<SparseVector>& rows, bool track)
    : field_(field), columns_(columns), impl_(std::make_unique<Impl>()) {
  impl_->track = track;
  impl_->inputs = rows.size();
  std::size_t width = columns + (track ? rows.size() : 0);
  auto build = [&](auto ops) {
    Store<decltype(ops)> store;
    store.ops = ops;
    store.columns = columns;
    store.width = width;
    for (std::size_t i = 0; i < rows.size(); ++i) store.insert(store.dense(rows[i], i, track), pivots_);
    impl_->store = std::move(store);
  };
  if (field.is_rational()) build(RationalOps{});
  else build(ModularOps{field.characteristic()});
}

Echelon::~Echelon() = default;
Echelon::Echelon(Echelon&&) noexcept = default;
Echelon& Echelon::operator=(Echelon&&) noexcept = default;

std::vector<Scalar> Echelon::row(std::size_t k) const {
  return std::visit(
      [&](const auto& store) {
        std::vector<Scalar> out;
        for (std::size_t c = 0; c < columns_; ++c) out.push_back(store.ops.to(store.rows.at(k)[c]));
        return out;
      },
      impl_->store);
}

Echelon::Reduction Echelon::reduce(const SparseVector& v) const {
  return std::visit(
      [&](const auto& store) {
        Reduction out;
        auto dense = store.dense(v, 0, false);
        auto reduced = store.reduce(std::move(dense), pivots_);
        for (std::size_t c = 0; c < columns_; ++c) out.residual.push_back(store.ops.to(reduced[c]));
        if (impl_->track) {
          for (std::size_t j = 0; j < impl_->inputs; ++j) {
            out.combination.push_back(store.ops.to(store.ops.neg(reduced[columns_ + j])));
          }
        }
        return out;
      },
      impl_->store);
}

bool Echelon::contains(const SparseVector& v) const {
  auto r = reduce(v);
  for (const auto& s : r.residual) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::vector<Scalar> Echelon::orthogonal_residual(const SparseVector& v) const {
  if (!field_.is_rational()) throw UsageError("orthogonal complements need characteristic 0");
  const auto& store = std::get<Store<RationalOps>>(impl_->store);
  std::size_t r = store.rows.size();
  std::vector<mpq_class> x(columns_, 0);
  for (const auto& [col, s] : v) x[col] = s.rational();
  // Solve (R R^T) z = R x for z, then residual = x - R^T z.
  std::vector<std::vector<mpq_class>> gram(r, std::vector<mpq_class>(r + 1, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      mpq_class s = 0;
      for (std::size_t c = 0; c < columns_; ++c) s += store.rows[i][c] * store.rows[j][c];
      gram[i][j] = s;
    }
    mpq_class s = 0;
    for (std::size_t c = 0; c < columns_; ++c) s += store.rows[i][c] * x[c];
    gram[i][r] = s;
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (sgn(gram[piv][col]) == 0) ++piv;  // Gram matrix of independent rows is invertible
    std::swap(gram[piv], gram[col]);
    mpq_class inv = 1 / gram[col][col];
    for (auto& e : gram[col]) e *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || sgn(gram[i][col]) == 0) continue;
      mpq_class f = gram[i][col];
      for (std::size_t j = col; j <= r; ++j) gram[i][j] -= f * gram[col][j];
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t c = 0; c < columns_; ++c) x[c] -= gram[i][r] * store.rows[i][c];
  }
  std::vector<Scalar> out;
  out.reserve(columns_);
  for (auto& e : x) out.emplace_back(e);
  return out;
}

SpanSolution solve_in_span(const Field& field, std::size_t columns, const std::vector<SparseVector>& vectors,
                           const SparseVector& v) {
  Echelon e(field, columns, vectors, true);
  auto r = e.reduce(v);
  SpanSolution out;
  out.ok = std::all_of(r.residual.begin(), r.residual.end(), [](const Scalar& s) { return s.is_zero(); });
  out.coordinates = std::move(r.combination);
  out.residual = std::move(r.residual);
  return out;
}

std::size_t rank_of(const Field& field, std::size_t columns, const std::vector<SparseVector>& vectors) {
  return Echelon(field, columns, vectors, false).rank();
}

}  // namespace macaulay
