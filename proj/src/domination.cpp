#include "dimzero/domination.hpp"

#include <set>
#include <stdexcept>

namespace dimzero {

RationalMatrix MsMatrix::dense() const {
  RationalMatrix m(dim_, dim_);
  for (std::size_t f = 0; f < dim_; ++f)
    for (std::size_t g = 0; g < dim_; ++g)
      if (bit(f, g)) m(f, g) = 1;
  return m;
}

bool MsMatrix::is_row_functional() const {
  for (std::size_t f = 0; f < dim_; ++f) {
    std::size_t ones = 0;
    for (std::size_t g = 0; g < dim_; ++g) ones += bit(f, g);
    if (ones != 1) return false;
  }
  return true;
}

bool MsMatrix::is_upper_triangular() const {
  for (std::size_t f = 0; f < dim_; ++f)
    for (std::size_t g = 0; g < f; ++g)
      if (bit(f, g)) return false;
  return true;
}

MsMatrix ms_matrix(const Semiring& s, const Morphism& endo, const HomEnumeration& hom) {
  if (endo.src() != hom.x() || endo.dst() != hom.x()) {
    throw DimensionError("M-matrix needs an endomorphism of " + std::to_string(hom.x()) + ", got " +
                         std::to_string(endo.src()) + "x" + std::to_string(endo.dst()));
  }
  MsMatrix m(hom.size());
  for (std::size_t f = 0; f < hom.size(); ++f) m.set(f, hom.position(compose(s, hom[f], endo)), true);
  return m;
}

std::vector<Morphism> enumerate_hom_xyx(const Semiring& s, std::size_t x, std::size_t y,
                                        std::uint64_t pair_cap) {
  const std::size_t n = s.size();
  const auto left = checked_pow(n, static_cast<std::uint64_t>(x) * y);
  std::optional<std::uint64_t> pairs;
  if (left && (*left == 0 || *left <= UINT64_MAX / *left)) pairs = *left * *left;
  const std::string what = "Hom(" + std::to_string(x) + "," + std::to_string(y) + ") x Hom(" +
                           std::to_string(y) + "," + std::to_string(x) + ")";
  if (!pairs || *pairs > pair_cap) throw CapExceeded(what, pairs, pair_cap);

  std::set<std::uint64_t> seen;
  for (std::uint64_t ca = 0; ca < *left; ++ca) {
    const Morphism a = Morphism::from_code(ca, x, y, n);
    for (std::uint64_t cb = 0; cb < *left; ++cb) {
      seen.insert(compose(s, a, Morphism::from_code(cb, y, x, n)).code(n));
    }
  }
  std::vector<Morphism> out;
  out.reserve(seen.size());
  for (std::uint64_t c : seen) out.push_back(Morphism::from_code(c, x, x, n));
  return out;
}

std::optional<std::vector<Rational>> identity_in_span(std::span<const MsMatrix> mats, std::size_t dim) {
  for (const auto& m : mats)
    if (m.dim() != dim) throw DimensionError("M-matrices of different dimensions");
  if (mats.empty()) {
    if (dim == 0) return std::vector<Rational>{};
    return std::nullopt;
  }
  // One equation per matrix entry, one unknown per matrix.
  RationalMatrix system(dim * dim, mats.size());
  std::vector<Rational> rhs(dim * dim);
  for (std::size_t f = 0; f < dim; ++f)
    for (std::size_t g = 0; g < dim; ++g) {
      const std::size_t row = f * dim + g;
      for (std::size_t t = 0; t < mats.size(); ++t)
        if (mats[t].bit(f, g)) system(row, t) = 1;
      if (f == g) rhs[row] = 1;
    }
  return solve(std::move(system), std::move(rhs));
}

OracleResult leq_d_oracle(const Semiring& s, std::size_t d, std::size_t x, std::size_t y,
                          std::uint64_t hom_cap, std::uint64_t pair_cap) {
  const HomEnumeration hom = enumerate_hom(s, d, x, hom_cap);
  OracleResult r;
  r.hom_size = hom.size();
  r.composites = enumerate_hom_xyx(s, x, y, pair_cap);
  r.pairs = static_cast<std::size_t>(*checked_pow(s.size(), 2 * static_cast<std::uint64_t>(x) * y));

  std::vector<MsMatrix> mats;
  mats.reserve(r.composites.size());
  for (const auto& t : r.composites) mats.push_back(ms_matrix(s, t, hom));
  if (auto c = identity_in_span(mats, hom.size())) {
    r.holds = true;
    r.coefficients = std::move(*c);
  }
  return r;
}

std::vector<Rational> column_sum_coefficients(const BinaryTable& b) {
  const std::size_t m = b.dim;
  if (b.bits.size() != m * m) throw std::invalid_argument("coefficient table is not square");
  for (std::size_t i = 0; i < m; ++i)
    if (!b(i, i)) throw std::invalid_argument("coefficient table has a zero at diagonal position " + std::to_string(i));

  std::vector<Rational> a;
  a.reserve(m);
  // partial[k] = Σ_{i<step} b[i][k]·a_i
  std::vector<Rational> partial(m);
  for (std::size_t step = 0; step < m; ++step) {
    std::set<Rational> forbidden;
    for (std::size_t k = 0; k <= step; ++k) forbidden.insert(-partial[k]);
    Rational choice = 1;
    while (forbidden.count(choice)) ++choice;
    for (std::size_t k = 0; k < m; ++k)
      if (b(step, k)) partial[k] += choice;
    a.push_back(choice);
  }
  return a;
}

XAssembly assemble_x(std::span<const MsMatrix> mats, std::span<const Rational> coeffs) {
  if (mats.size() != coeffs.size()) throw DimensionError("coefficient count does not match matrix count");
  const std::size_t dim = mats.empty() ? 0 : mats.front().dim();
  for (const auto& m : mats)
    if (m.dim() != dim) throw DimensionError("M-matrices of different dimensions");

  XAssembly out;
  out.x = RationalMatrix(dim, dim);
  for (std::size_t t = 0; t < mats.size(); ++t) {
    if (coeffs[t] == 0) continue;
    for (std::size_t f = 0; f < dim; ++f)
      for (std::size_t g = 0; g < dim; ++g)
        if (mats[t].bit(f, g)) out.x(f, g) += coeffs[t];
  }
  out.upper_triangular = out.x.is_upper_triangular();
  out.diagonal_nonzero = true;
  for (std::size_t i = 0; i < dim; ++i)
    if (out.x(i, i) == 0) out.diagonal_nonzero = false;
  out.det_diagonal = diagonal_product(out.x);
  out.det_elimination = bareiss_determinant(out.x);
  return out;
}

}  // namespace dimzero
