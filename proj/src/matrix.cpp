#include "plink/matrix.hpp"

#include <algorithm>
#include <utility>

namespace plink {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = -data_[i];
  return m;
}

IntMatrix IntMatrix::principal_submatrix(const std::vector<std::size_t>& idx) const {
  IntMatrix m(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(idx[i], idx[j]);
  return m;
}

Int det(const IntMatrix& m) {
  if (!m.square()) throw validation_error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

bool is_positive_definite(const IntMatrix& m) {
  if (!m.square()) throw validation_error("definiteness of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Int prev = 1;
  // Without row swaps the Bareiss pivots are the leading principal minors.
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return true;
}

namespace {

// Position of a nonzero entry of minimal absolute value in the trailing
// submatrix starting at (t, t), or nullopt-like {false, ...}.
struct PivotPos {
  bool found = false;
  std::size_t i = 0, j = 0;
};

PivotPos find_pivot(const IntMatrix& a, std::size_t t) {
  PivotPos best;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!best.found || abs(a(i, j)) < abs(a(best.i, best.j))) best = {true, i, j};
    }
  return best;
}

}  // namespace

std::vector<Int> smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rank_bound = std::min(a.rows(), a.cols());
  std::vector<Int> factors;

  for (std::size_t t = 0; t < rank_bound; ++t) {
    PivotPos p = find_pivot(a, t);
    if (!p.found) break;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(t, j), a(p.i, j));
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, t), a(i, p.j));

    bool settled = false;
    while (!settled) {
      settled = true;
      // Clear column t. If a remainder survives, the row swap brings a
      // strictly smaller pivot candidate, so this terminates.
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) {
          for (std::size_t j = t; j < a.cols(); ++j) std::swap(a(t, j), a(i, j));
          settled = false;
        }
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) {
          for (std::size_t i = t; i < a.rows(); ++i) std::swap(a(i, t), a(i, j));
          settled = false;
        }
      }
      if (!settled) continue;
      // Divisibility fix-up: the pivot must divide every trailing entry.
      for (std::size_t i = t + 1; i < a.rows() && settled; ++i)
        for (std::size_t j = t + 1; j < a.cols() && settled; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t c = t; c < a.cols(); ++c) a(t, c) += a(i, c);
            settled = false;
          }
    }
    factors.push_back(abs(a(t, t)));
  }

  factors.resize(rank_bound, Int(0));
  return factors;
}

std::vector<Rational> solve_rational(const IntMatrix& m, const std::vector<Rational>& b) {
  if (!m.square()) throw validation_error("solve: non-square matrix");
  const std::size_t n = m.rows();
  if (b.size() != n) throw validation_error("solve: dimension mismatch");

  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m(i, j));
    a[i][n] = b[i];
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw validation_error("solve: singular matrix");
    std::swap(a[k], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j <= n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace plink
