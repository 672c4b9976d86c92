#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dimzero/domination.hpp"
#include "dimzero/matcat.hpp"
#include "dimzero/rational_matrix.hpp"

namespace dimzero {

/// A factorization M = D·E of an endomorphism of x through y.
///
/// D is x×y but only its first v columns can be nonzero; E is y×x with only
/// its first v rows nonzero. The heads are stored and the y - v zero
/// columns/rows are implicit.
struct Factorization {
  std::uint64_t through = 0;
  Morphism d_head;  // x × v
  Morphism e_head;  // v × x

  std::size_t v() const { return d_head.dst(); }
  std::uint64_t zero_columns() const { return through - v(); }

  /// D·E computed from the heads; the zero blocks contribute nothing.
  Morphism product(const Semiring& s) const;
  /// Full x×y and y×x matrices. Only sensible for small y.
  Morphism full_d(const Semiring& s) const;
  Morphism full_e(const Semiring& s) const;

  bool operator==(const Factorization&) const = default;
};

/// The v distinct columns of M (in first-occurrence order) exceed y.
class FactorizationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// m_{i,j} = one iff column i of f lies entrywise below column j under ⊆.
Morphism s_of_f(const Semiring& s, const Morphism& f);

/// D holds the distinct columns of M; E selects, for each column j of M, the
/// column of D equal to it. Throws FactorizationError when v > y.
Factorization factor_through(const Semiring& s, const Morphism& m, std::uint64_t y);

/// D = [Id_x | 0], E = [Id_x ; 0]. Throws FactorizationError when y < x.
Factorization pad_identity(const Semiring& s, std::size_t x, std::uint64_t y);

struct SPropertyReport {
  std::size_t fixed_point_checks = 0;
  std::size_t domination_checks = 0;
  bool fixed_points_hold = true;
  bool domination_holds = true;
  std::string counterexample;

  bool ok() const { return fixed_points_hold && domination_holds; }
};

/// Checks s(f)∘f = f for every f and h ⪯ s(f)∘h for every pair, where
/// s_map[i] is s(hom[i]). Stops at the first counterexample.
SPropertyReport verify_s_properties(const Semiring& s, const HomEnumeration& hom,
                                    std::span<const Morphism> s_map);

enum class Branch { Pad, Construct };

std::string_view branch_name(Branch b);

struct CertificateTerm {
  Morphism endo;  // s(f), or Id_x on the pad branch
  Factorization factor;
  Rational coefficient;

  bool operator==(const CertificateTerm&) const = default;
};

struct NamedCheck {
  std::string name;
  bool passed = false;

  bool operator==(const NamedCheck&) const = default;
};

/// Witness that x ≤_d n^d.
///
/// Construct branch: terms[i] belongs to order[i]. Pad branch: one term, the
/// identity of x factored through y.
struct Certificate {
  std::size_t semiring_size = 0;
  std::uint64_t fingerprint = 0;
  std::size_t d = 0;
  std::size_t x = 0;
  std::uint64_t y = 0;
  Branch branch = Branch::Pad;
  std::vector<Morphism> order;
  std::vector<CertificateTerm> terms;
  std::vector<Rational> x_diagonal;
  Rational det_x;
  std::vector<NamedCheck> checks;

  bool operator==(const Certificate&) const = default;
};

struct Caps {
  std::uint64_t hom = kDefaultHomCap;
  std::uint64_t pairs = kDefaultPairCap;
  std::uint64_t columns = 4096;
};

/// A step of certification that the construction guarantees has failed.
class InternalCheckFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Builds the certificate for x ≤_d n^d with n = |R|. Throws CapExceeded
/// when |Hom(d,x)| or n^d exceed their caps, and InternalCheckFailure if any
/// recorded check fails.
Certificate certify_leq_nd(const Semiring& s, std::size_t d, std::size_t x, const Caps& caps = {});

class FingerprintMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct VerificationReport {
  std::vector<NamedCheck> checks;
  bool ok() const;
  /// Names of failed checks, comma separated.
  std::string failures() const;
};

/// Recomputes every claim of the certificate from its raw data. Throws
/// FingerprintMismatch if the certificate was made for another semiring.
VerificationReport verify_certificate(const Semiring& s, const Certificate& cert);

}  // namespace dimzero
