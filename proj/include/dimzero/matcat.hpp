#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimzero/semiring.hpp"

namespace dimzero {

/// Signatures disagree (composition, dominance, or M-matrix construction).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured cap.
class CapExceeded : public std::length_error {
 public:
  /// `requested` is empty when the true size overflows 64 bits.
  CapExceeded(const std::string& what, std::optional<std::uint64_t> requested, std::uint64_t cap);

  std::optional<std::uint64_t> requested() const { return requested_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::optional<std::uint64_t> requested_;
  std::uint64_t cap_;
};

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp);

/// An arrow x → y of the matrix category: an x×y matrix of element indices,
/// stored row-major. Composition is diagrammatic: for A: x→y and B: y→z the
/// composite B∘A is the matrix product A·B.
class Morphism {
 public:
  Morphism() = default;
  /// All entries set to `fill`.
  Morphism(std::size_t src, std::size_t dst, Element fill);
  /// Throws DimensionError if entries.size() != src*dst.
  Morphism(std::size_t src, std::size_t dst, std::vector<Element> entries);
  Morphism(std::initializer_list<std::initializer_list<Element>> rows);

  std::size_t src() const { return src_; }
  std::size_t dst() const { return dst_; }
  Element operator()(std::size_t i, std::size_t j) const { return entries_[i * dst_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * dst_ + j]; }
  std::span<const Element> entries() const { return entries_; }

  /// True when every entry indexes an element of `s`.
  bool valid_for(const Semiring& s) const;

  /// Mixed-radix code of the row-major entry vector, base n = |R|.
  std::uint64_t code(std::size_t n) const;
  static Morphism from_code(std::uint64_t code, std::size_t src, std::size_t dst, std::size_t n);

  auto operator<=>(const Morphism&) const = default;

 private:
  std::size_t src_ = 0;
  std::size_t dst_ = 0;
  std::vector<Element> entries_;
};

/// Renders as bracketed rows of element labels, e.g. [[1,0],[0,1]].
std::string render(const Semiring& s, const Morphism& m);

/// Matrix product a·b over the semiring, i.e. the categorical composite b∘a.
Morphism compose(const Semiring& s, const Morphism& a, const Morphism& b);

Morphism identity(const Semiring& s, std::size_t x);
Morphism zero_morphism(const Semiring& s, std::size_t x, std::size_t y);

/// f ⪯ g: the natural order holds entrywise.
bool dominates(const Semiring& s, const Morphism& f, const Morphism& g);

/// Sort key realizing a linear extension of ⪯.
struct OrderKey {
  std::uint64_t height_sum = 0;
  std::vector<Element> entries;
  auto operator<=>(const OrderKey&) const = default;
};

OrderKey order_key(const NaturalOrder& order, const Morphism& m);

/// Every morphism of Hom(d, x), sorted by (height sum, entries
/// lexicographically). Strict entrywise dominance strictly raises the height
/// sum, so the list order extends ⪯.
class HomEnumeration {
 public:
  std::size_t d() const { return d_; }
  std::size_t x() const { return x_; }
  std::size_t size() const { return morphisms_.size(); }
  const Morphism& operator[](std::size_t i) const { return morphisms_[i]; }
  const std::vector<Morphism>& morphisms() const { return morphisms_; }
  const std::vector<OrderKey>& keys() const { return keys_; }

  /// List position of a morphism of signature (d, x).
  std::size_t position(const Morphism& m) const;

 private:
  friend HomEnumeration enumerate_hom(const Semiring&, std::size_t, std::size_t, std::uint64_t);

  std::size_t d_ = 0;
  std::size_t x_ = 0;
  std::size_t radix_ = 0;
  std::vector<Morphism> morphisms_;
  std::vector<OrderKey> keys_;
  std::vector<std::uint32_t> position_by_code_;
};

inline constexpr std::uint64_t kDefaultHomCap = 4096;

/// Throws CapExceeded when n^(d·x) > cap.
HomEnumeration enumerate_hom(const Semiring& s, std::size_t d, std::size_t x,
                             std::uint64_t cap = kDefaultHomCap);

}  // namespace dimzero
