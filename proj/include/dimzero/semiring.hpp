#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dimzero {

/// Dense index of a semiring element, in [0, size()).
using Element = std::uint32_t;

/// Row-major n×n operation table.
using Table = std::vector<std::vector<Element>>;

/// Raised when tables have the wrong shape or hold out-of-range indices.
/// Axioms are never checked on a structure that fails this stage.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite semiring given by explicit addition and multiplication tables.
///
/// The zero and one are stored rather than searched for; verify_axioms()
/// confirms that they behave as claimed. Immutable once constructed.
class Semiring {
 public:
  /// Throws StructuralError if the tables are not n×n, any index is out of
  /// range, or labels.size() != n.
  Semiring(std::vector<std::string> labels, Element zero, Element one,
           const Table& add_table, const Table& mul_table);

  std::size_t size() const { return n_; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  const std::string& label(Element a) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// Throws std::out_of_range on an invalid index.
  Element add(Element a, Element b) const {
    check(a, b);
    return add_[a * n_ + b];
  }
  Element mul(Element a, Element b) const {
    check(a, b);
    return mul_[a * n_ + b];
  }

  /// Natural order: a ⊆ b iff a + b = b.
  bool natural_leq(Element a, Element b) const { return add(a, b) == b; }

  /// Label lookup; throws std::out_of_range if absent.
  Element element(std::string_view label) const;

  Table add_table() const;
  Table mul_table() const;

  /// Stable 64-bit FNV-1a digest of size, zero, one and both tables.
  /// Labels do not participate.
  std::uint64_t fingerprint() const;

  friend bool operator==(const Semiring& a, const Semiring& b);

 private:
  void check(Element a, Element b) const {
    if (a >= n_ || b >= n_) throw std::out_of_range("semiring element index out of range");
  }

  std::size_t n_;
  std::vector<std::string> labels_;
  Element zero_;
  Element one_;
  std::vector<Element> add_;
  std::vector<Element> mul_;
};

/// Lowercase hex, 16 digits.
std::string fingerprint_hex(const Semiring& s);

// ---------------------------------------------------------------------------
// Axioms

enum class Axiom {
  AdditionCommutative,
  AdditionAssociative,
  AdditionIdempotent,
  AdditiveIdentity,
  MultiplicationAssociative,
  MultiplicativeIdentity,
  LeftDistributive,
  RightDistributive,
  ZeroAnnihilates,
};

std::string_view axiom_name(Axiom a);

struct Violation {
  Axiom axiom;
  std::vector<Element> witness;
  std::string message;
};

struct AxiomOptions {
  std::size_t max_size = 64;
  /// Stop after this many violations per axiom (0 = unlimited).
  std::size_t max_per_axiom = 1;
};

/// Raised when a semiring exceeds AxiomOptions::max_size.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exhaustive check of every semiring axiom over all 1-, 2- and 3-tuples.
/// Empty result means the semiring is a finite idempotent semiring.
std::vector<Violation> verify_axioms(const Semiring& s, const AxiomOptions& opts = {});

// ---------------------------------------------------------------------------
// Natural order

/// The relation a ⊆ b ⇔ a + b = b, with per-element heights.
struct NaturalOrder {
  std::size_t n = 0;
  std::vector<bool> leq;  // n*n, leq[a*n+b]
  /// Length of the longest strict ⊆-chain ending at the element.
  std::vector<std::uint32_t> height;

  bool operator()(Element a, Element b) const { return leq[a * n + b]; }
};

/// Throws std::logic_error if ⊆ has a strict cycle (not antisymmetric), which
/// cannot happen for a semiring that passed verify_axioms.
NaturalOrder natural_order(const Semiring& s);

struct LemmaProperty {
  std::string name;
  bool holds = true;
  std::size_t checked = 0;
  std::vector<Element> counterexample;
};

struct LemmaReport {
  LemmaProperty partial_order;   // reflexive, antisymmetric, transitive, zero minimal
  LemmaProperty absorbs_sum;     // a ⊆ a + b
  LemmaProperty least_upper;     // a, b ⊆ c ⟹ a + b ⊆ c
  bool all_hold() const {
    return partial_order.holds && absorbs_sum.holds && least_upper.holds;
  }
};

/// Exhaustive check of the order properties of ⊆.
LemmaReport verify_order_lemma(const Semiring& s);

// ---------------------------------------------------------------------------
// Built-in instances

/// ({0,1}, OR, AND).
Semiring boolean_semiring();

/// Truncated tropical semiring on {0,1,…,cap,∞}: ⊕ = min with ∞ greatest,
/// ⊗ = min(x+y, cap) with ∞ absorbing. Index i < cap+1 is the number i;
/// index cap+1 is ∞ (the zero). The one is index 0.
Semiring tropical_semiring(std::uint32_t cap);

}  // namespace dimzero
