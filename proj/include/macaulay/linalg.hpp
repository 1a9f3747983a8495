#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "macaulay/coeff.hpp"

namespace macaulay {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// The reduced row echelon form of a list of vectors. Rows over Q use GMP rationals;
// rows over F_p are dense residue arrays reduced with the active SIMD kernels.
class Echelon {
 public:
  // With `track`, every echelon row also records its expression in the input rows.
  Echelon(Field field, std::size_t columns, const std::vector<SparseVector>& rows, bool track);
  ~Echelon();
  Echelon(Echelon&&) noexcept;
  Echelon& operator=(Echelon&&) noexcept;

  const Field& field() const { return field_; }
  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return pivots_.size(); }
  // Strictly increasing.
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Scalar> row(std::size_t k) const;

  struct Reduction {
    // v minus its combination of the rows; zero on every pivot column.
    std::vector<Scalar> residual;
    // Coefficients c_j with v - residual = sum_j c_j * input_j (only when tracking).
    std::vector<Scalar> combination;
  };
  Reduction reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;

  // v minus its orthogonal projection onto the row space under the standard inner
  // product. Characteristic 0 only.
  std::vector<Scalar> orthogonal_residual(const SparseVector& v) const;

 private:
  struct Impl;
  Field field_;
  std::size_t columns_;
  std::vector<std::size_t> pivots_;
  std::unique_ptr<Impl> impl_;
};

// Solves for the coordinates of v in span(vectors); nullopt-like empty result flagged by ok.
struct SpanSolution {
  bool ok = false;
  std::vector<Scalar> coordinates;
  std::vector<Scalar> residual;
};
SpanSolution solve_in_span(const Field& field, std::size_t columns, const std::vector<SparseVector>& vectors,
                           const SparseVector& v);

std::size_t rank_of(const Field& field, std::size_t columns, const std::vector<SparseVector>& vectors);

}  // namespace macaulay
