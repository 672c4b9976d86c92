#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dimzero {

/// Field scalar: arbitrary-precision rational, always in canonical form.
using Rational = mpq_class;

/// Canonical text form `p/q` (denominator always written).
std::string to_fraction(const Rational& q);
/// Accepts `p/q` or `p`. Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_fraction(const std::string& text);

/// Dense matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_upper_triangular() const;
  std::vector<Rational> diagonal() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Product of the diagonal entries.
Rational diagonal_product(const RationalMatrix& a);

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Makes no use of any triangular structure in `a`.
Rational bareiss_determinant(const RationalMatrix& a);

/// One solution of a·v = rhs by exact Gauss-Jordan elimination (free
/// variables set to zero), or nullopt if the system is inconsistent.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> rhs);

}  // namespace dimzero
