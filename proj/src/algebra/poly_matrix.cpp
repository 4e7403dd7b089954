#include "algebra/poly_matrix.hpp"

#include <algorithm>
#include <limits>

#include "common/error.hpp"

namespace tanlift::algebra {

namespace {

void require_same_shape(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::InvalidArgument, "matrix shapes differ");
  }
}

struct Elimination {
  PolyMatrix work;
  Poly last_pivot;
  int swap_sign = 1;
  bool singular = false;
};

// Fraction-free Gauss-Jordan on the first `n` columns. Every division is
// exact: after step k each entry is a minor of the original matrix, divided
// by the previous pivot (itself a minor). On success the leading n x n block
// is last_pivot * I.
Elimination fraction_free_jordan(PolyMatrix work, std::size_t n) {
  Elimination out{std::move(work), Poly(Rational(1)), 1, false};
  PolyMatrix& m = out.work;
  Poly previous(Rational(1));
  for (std::size_t k = 0; k < n; ++k) {
    // Smallest nonzero candidate keeps intermediate growth down.
    std::size_t pivot_row = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (pivot_row == std::numeric_limits<std::size_t>::max() ||
          m(i, k).terms().size() < m(pivot_row, k).terms().size()) {
        pivot_row = i;
      }
    }
    if (pivot_row == std::numeric_limits<std::size_t>::max()) {
      out.singular = true;
      return out;
    }
    if (pivot_row != k) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(k, j), m(pivot_row, j));
      out.swap_sign = -out.swap_sign;
    }
    const Poly pivot = m(k, k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == k) continue;
      const Poly factor = m(i, k);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j == k) continue;
        Poly v = pivot * m(i, j) - factor * m(k, j);
        m(i, j) = previous.is_constant() && previous.constant_value() == 1
                      ? std::move(v)
                      : v.divide_exact(previous);
      }
      m(i, k) = Poly(m(i, k).vars());
    }
    previous = pivot;
  }
  out.last_pivot = previous;
  return out;
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarsPtr vars)
    : rows_(rows), cols_(cols), entries_(rows * cols, Poly(vars)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(ErrorCode::InvalidArgument, "entry count does not match matrix shape");
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n, VarsPtr vars) {
  PolyMatrix m(n, n, vars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(Rational(1), vars);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (rows_ == 0) return Poly(Rational(1));
  Elimination e = fraction_free_jordan(*this, rows_);
  if (e.singular) return Poly(entries_.front().vars());
  return e.swap_sign > 0 ? e.last_pivot : -e.last_pivot;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  require_same_shape(a, b);
  PolyMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shapes do not chain");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Poly sum;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Poly& x = a(i, k);
        const Poly& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        sum += x * y;
      }
      out(i, j) = std::move(sum);
    }
  }
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

PolyMatrix unimodular_inverse(const PolyMatrix& u) {
  if (u.rows() != u.cols()) throw Error(ErrorCode::NotUnimodular, "matrix is not square");
  const std::size_t n = u.rows();
  PolyMatrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = u(i, j);
    augmented(i, n + i) = Poly(Rational(1));
  }
  Elimination e = fraction_free_jordan(std::move(augmented), n);
  if (e.singular) throw Error(ErrorCode::NotUnimodular, "matrix is singular");
  if (!e.last_pivot.is_constant() || abs(e.last_pivot.constant_value()) != 1) {
    throw Error(ErrorCode::NotUnimodular,
                "determinant " + (e.swap_sign > 0 ? e.last_pivot : -e.last_pivot).str() +
                    " is not +1 or -1");
  }
  const Rational scale = 1 / e.last_pivot.constant_value();
  PolyMatrix inverse(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inverse(i, j) = e.work(i, n + j).scaled(scale);
  }
  return inverse;
}

PolyMatrix shear(std::size_t n, std::size_t row, std::size_t col, const Poly& p, VarsPtr vars) {
  if (row == col || row >= n || col >= n) {
    throw Error(ErrorCode::InvalidArgument, "shear needs distinct in-range indices");
  }
  PolyMatrix m = PolyMatrix::identity(n, std::move(vars));
  m(row, col) = p;
  return m;
}

}  // namespace tanlift::algebra
