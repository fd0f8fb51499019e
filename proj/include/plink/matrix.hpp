#pragma once

#include <cstddef>
#include <vector>

#include "plink/numbers.hpp"

namespace plink {

/// Dense integer matrix with exact (fraction-free) algorithms.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix negated() const;

  /// Principal submatrix on the given row/column index set (in the given order).
  IntMatrix principal_submatrix(const std::vector<std::size_t>& idx) const;

  bool operator==(const IntMatrix& other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// Exact determinant via fraction-free Bareiss elimination with row pivoting.
Int det(const IntMatrix& m);

/// True iff the symmetric matrix is positive definite (all leading principal
/// minors positive; they are exactly the Bareiss pivots when no row swap is
/// needed). Negative definiteness of M is tested as positive definiteness
/// of -M by the callers.
bool is_positive_definite(const IntMatrix& m);

/// Invariant factors d_1 | d_2 | ... of the Smith normal form, all
/// non-negative, length min(rows, cols). Zeros appear for rank deficiency;
/// the product of the nonzero factors equals |det| for nonsingular square
/// input.
std::vector<Int> smith_normal_form(const IntMatrix& m);

/// Exact solution of m * x = b. Throws validation_error on singular m.
std::vector<Rational> solve_rational(const IntMatrix& m, const std::vector<Rational>& b);

}  // namespace plink
