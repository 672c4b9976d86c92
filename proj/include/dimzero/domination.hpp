#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dimzero/matcat.hpp"
#include "dimzero/rational_matrix.hpp"

namespace dimzero {

/// The 0/1 matrix of s ∈ Hom(x,x) acting on Hom(d,x) by f ↦ s∘f = f·s.
/// Rows and columns follow the HomEnumeration order.
class MsMatrix {
 public:
  MsMatrix() = default;
  explicit MsMatrix(std::size_t dim) : dim_(dim), bits_(dim * dim, 0) {}

  std::size_t dim() const { return dim_; }
  bool bit(std::size_t f, std::size_t g) const { return bits_[f * dim_ + g] != 0; }
  void set(std::size_t f, std::size_t g, bool v) { bits_[f * dim_ + g] = v ? 1 : 0; }
  Rational entry(std::size_t f, std::size_t g) const { return bit(f, g) ? 1 : 0; }

  RationalMatrix dense() const;

  /// Exactly one 1 in every row.
  bool is_row_functional() const;
  bool is_upper_triangular() const;

  bool operator==(const MsMatrix&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<unsigned char> bits_;
};

/// M[f][g] = 1 iff compose(f, s) = g.
MsMatrix ms_matrix(const Semiring& s, const Morphism& endo, const HomEnumeration& hom);

inline constexpr std::uint64_t kDefaultPairCap = 65536;

/// {a·b : a ∈ Hom(x,y), b ∈ Hom(y,x)}, deduplicated, ordered by entry code.
/// Throws CapExceeded when |Hom(x,y)|·|Hom(y,x)| > pair_cap.
std::vector<Morphism> enumerate_hom_xyx(const Semiring& s, std::size_t x, std::size_t y,
                                        std::uint64_t pair_cap = kDefaultPairCap);

/// Coefficients c with Σ c_i mats[i] = Id, or nullopt if the identity is not
/// in the rational span. All matrices must share one dimension `dim`.
std::optional<std::vector<Rational>> identity_in_span(std::span<const MsMatrix> mats, std::size_t dim);

struct OracleResult {
  bool holds = false;
  std::size_t hom_size = 0;
  std::size_t pairs = 0;
  std::vector<Morphism> composites;
  /// Aligned with `composites`; empty when !holds.
  std::vector<Rational> coefficients;
};

/// Decides x ≤_d y by brute force: every t ∈ Hom(x,y,x), its M_t over
/// Hom(d,x), and an exact span solve for the identity.
OracleResult leq_d_oracle(const Semiring& s, std::size_t d, std::size_t x, std::size_t y,
                          std::uint64_t hom_cap = kDefaultHomCap,
                          std::uint64_t pair_cap = kDefaultPairCap);

/// Square 0/1 table, row-major.
struct BinaryTable {
  std::size_t dim = 0;
  std::vector<unsigned char> bits;
  bool operator()(std::size_t i, std::size_t j) const { return bits[i * dim + j] != 0; }
};

/// Given b with unit diagonal, returns positive integers a_1..a_m such that
/// every column sum Σ_i b[i][g]·a_i is nonzero. Built inductively: at step k
/// the forbidden values are S_j = -Σ_{i<k} b[i][j]·a_i for j ≤ k, and a_k is
/// the least positive integer outside that set. Throws std::invalid_argument
/// if some diagonal entry is 0.
std::vector<Rational> column_sum_coefficients(const BinaryTable& b);

struct XAssembly {
  RationalMatrix x;
  bool upper_triangular = false;
  bool diagonal_nonzero = false;
  Rational det_diagonal;
  Rational det_elimination;

  bool invertible() const {
    return upper_triangular && diagonal_nonzero && det_diagonal == det_elimination && det_diagonal != 0;
  }
};

/// X = Σ coeffs[i]·mats[i] with its triangularity and determinant by two
/// independent routes.
XAssembly assemble_x(std::span<const MsMatrix> mats, std::span<const Rational> coeffs);

}  // namespace dimzero
