#include "dimzero/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace dimzero {

std::string to_fraction(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = (allow_sign && !s.empty() && s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("malformed fraction '" + text + "'");
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

RationalMatrix RationalMatrix::identity(std::size_t m) {
  RationalMatrix id(m, m);
  for (std::size_t i = 0; i < m; ++i) id(i, i) = 1;
  return id;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool RationalMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if ((*this)(i, j) != 0) return false;
  return true;
}

std::vector<Rational> RationalMatrix::diagonal() const {
  std::vector<Rational> d;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) d.push_back((*this)(i, i));
  return d;
}

Rational diagonal_product(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Rational p = 1;
  for (std::size_t i = 0; i < a.rows(); ++i) p *= a(i, i);
  return p;
}

Rational bareiss_determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t m = a.rows();
  if (m == 0) return 1;
  RationalMatrix w = a;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (w(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < m && w(p, k) == 0) ++p;
      if (p == m) return 0;
      for (std::size_t j = 0; j < m; ++j) std::swap(w(k, j), w(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  Rational det = w(m - 1, m - 1);
  return sign < 0 ? Rational(-det) : det;
}

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> rhs) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  if (rhs.size() != rows) throw std::invalid_argument("right-hand side length mismatch");

  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      std::swap(rhs[p], rhs[r]);
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;

  std::vector<Rational> v(cols);
  for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = rhs[i];
  return v;
}

}  // namespace dimzero
