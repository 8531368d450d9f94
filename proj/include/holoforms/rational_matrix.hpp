#pragma once

#include <optional>
#include <vector>

#include "holoforms/polynomial.hpp"

namespace holoforms {

/// Dense row-major matrix over ℚ.
class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[r * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_zero() const;
  int rank() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, RationalMatrix a);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  int rows_;
  int cols_;
  std::vector<Rational> data_;
};

/// Monic minimal polynomial of a square matrix, coefficients in increasing
/// degree (c₀, c₁, …, 1). Found as the first linear dependency among
/// I, A, A², … by exact elimination.
std::vector<Rational> minimal_polynomial(const RationalMatrix& a);

/// Rational roots of a polynomial given by coefficients in increasing
/// degree, each listed once, in increasing order.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

/// p(A) for coefficients in increasing degree.
RationalMatrix evaluate_at(const std::vector<Rational>& coeffs, const RationalMatrix& a);

}  // namespace holoforms
