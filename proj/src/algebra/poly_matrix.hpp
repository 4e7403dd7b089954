#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "algebra/poly.hpp"

namespace tanlift::algebra {

/// Dense row-major matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, VarsPtr vars = {});
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  static PolyMatrix identity(std::size_t n, VarsPtr vars = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Poly>& entries() const { return entries_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  bool is_zero() const;

  /// Fraction-free elimination; exact over polynomial entries.
  Poly determinant() const;

  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Poly> entries_;
};

/// Inverse of a square matrix whose determinant is the constant +1 or -1.
/// The result has polynomial entries (adjugate divided by the determinant).
/// Throws NotUnimodular otherwise.
PolyMatrix unimodular_inverse(const PolyMatrix& u);

/// I + p*E_{row,col}, row != col. Determinant 1 for every p.
PolyMatrix shear(std::size_t n, std::size_t row, std::size_t col, const Poly& p, VarsPtr vars = {});

}  // namespace tanlift::algebra
