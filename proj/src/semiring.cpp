#include "dimzero/semiring.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace dimzero {

namespace {

std::vector<Element> flatten(const Table& t, std::size_t n, const char* name) {
  if (t.size() != n) {
    std::ostringstream os;
    os << name << " table has " << t.size() << " rows, expected " << n;
    throw StructuralError(os.str());
  }
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r].size() != n) {
      std::ostringstream os;
      os << name << " table row " << r << " has " << t[r].size() << " entries, expected " << n;
      throw StructuralError(os.str());
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (t[r][c] >= n) {
        std::ostringstream os;
        os << name << " table entry (" << r << "," << c << ") = " << t[r][c]
           << " is out of range [0," << n << ")";
        throw StructuralError(os.str());
      }
      flat.push_back(t[r][c]);
    }
  }
  return flat;
}

Table unflatten(const std::vector<Element>& flat, std::size_t n) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) t[r][c] = flat[r * n + c];
  return t;
}

}  // namespace

Semiring::Semiring(std::vector<std::string> labels, Element zero, Element one,
                   const Table& add_table, const Table& mul_table)
    : n_(labels.size()), labels_(std::move(labels)), zero_(zero), one_(one) {
  if (n_ == 0) throw StructuralError("semiring must have at least one element");
  if (zero_ >= n_) {
    throw StructuralError("zero index " + std::to_string(zero_) + " is out of range [0," +
                          std::to_string(n_) + ")");
  }
  if (one_ >= n_) {
    throw StructuralError("one index " + std::to_string(one_) + " is out of range [0," +
                          std::to_string(n_) + ")");
  }
  add_ = flatten(add_table, n_, "add");
  mul_ = flatten(mul_table, n_, "mul");
}

const std::string& Semiring::label(Element a) const {
  if (a >= n_) throw std::out_of_range("semiring element index out of range");
  return labels_[a];
}

Element Semiring::element(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("no element labelled '" + std::string(label) + "'");
  return static_cast<Element>(it - labels_.begin());
}

Table Semiring::add_table() const { return unflatten(add_, n_); }
Table Semiring::mul_table() const { return unflatten(mul_, n_); }

std::uint64_t Semiring::fingerprint() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(n_);
  mix(zero_);
  mix(one_);
  for (Element e : add_) mix(e);
  for (Element e : mul_) mix(e);
  return h;
}

bool operator==(const Semiring& a, const Semiring& b) {
  return a.n_ == b.n_ && a.labels_ == b.labels_ && a.zero_ == b.zero_ && a.one_ == b.one_ &&
         a.add_ == b.add_ && a.mul_ == b.mul_;
}

std::string fingerprint_hex(const Semiring& s) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(s.fingerprint()));
  return buf;
}

std::string_view axiom_name(Axiom a) {
  switch (a) {
    case Axiom::AdditionCommutative: return "addition commutative";
    case Axiom::AdditionAssociative: return "addition associative";
    case Axiom::AdditionIdempotent: return "addition idempotent";
    case Axiom::AdditiveIdentity: return "additive identity";
    case Axiom::MultiplicationAssociative: return "multiplication associative";
    case Axiom::MultiplicativeIdentity: return "multiplicative identity";
    case Axiom::LeftDistributive: return "left distributivity";
    case Axiom::RightDistributive: return "right distributivity";
    case Axiom::ZeroAnnihilates: return "zero annihilates";
  }
  return "unknown";
}

namespace {

class ViolationSink {
 public:
  ViolationSink(const Semiring& s, std::size_t limit) : s_(s), limit_(limit) {}

  // Returns false once the per-axiom limit has been reached.
  bool want(Axiom a) const { return limit_ == 0 || count_[static_cast<int>(a)] < limit_; }

  void report(Axiom a, std::vector<Element> witness, const std::string& what) {
    if (!want(a)) return;
    ++count_[static_cast<int>(a)];
    std::ostringstream os;
    os << what << " at ";
    static constexpr std::array<const char*, 3> names{"a", "b", "c"};
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) os << ", ";
      os << names[i] << "=" << s_.label(witness[i]);
    }
    out_.push_back({a, std::move(witness), os.str()});
  }

  std::vector<Violation> take() { return std::move(out_); }

 private:
  const Semiring& s_;
  std::size_t limit_;
  std::array<std::size_t, 9> count_{};
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> verify_axioms(const Semiring& s, const AxiomOptions& opts) {
  const std::size_t n = s.size();
  if (opts.max_size != 0 && n > opts.max_size) {
    throw SizeLimitError("semiring has " + std::to_string(n) + " elements; axiom check limit is " +
                         std::to_string(opts.max_size));
  }
  ViolationSink sink(s, opts.max_per_axiom);
  const Element zero = s.zero();
  const Element one = s.one();

  for (Element a = 0; a < n; ++a) {
    if (s.add(a, a) != a) sink.report(Axiom::AdditionIdempotent, {a}, "addition not idempotent");
    if (s.add(zero, a) != a || s.add(a, zero) != a)
      sink.report(Axiom::AdditiveIdentity, {a}, "zero is not an additive identity");
    if (s.mul(one, a) != a || s.mul(a, one) != a)
      sink.report(Axiom::MultiplicativeIdentity, {a}, "one is not a multiplicative identity");
    if (s.mul(zero, a) != zero || s.mul(a, zero) != zero)
      sink.report(Axiom::ZeroAnnihilates, {a}, "zero does not annihilate");
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (s.add(a, b) != s.add(b, a))
        sink.report(Axiom::AdditionCommutative, {a, b}, "addition not commutative");

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab_sum = s.add(a, b);
      const Element ab_prod = s.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (s.add(ab_sum, c) != s.add(a, s.add(b, c)))
          sink.report(Axiom::AdditionAssociative, {a, b, c}, "addition not associative");
        if (s.mul(ab_prod, c) != s.mul(a, s.mul(b, c)))
          sink.report(Axiom::MultiplicationAssociative, {a, b, c}, "multiplication not associative");
        if (s.mul(a, s.add(b, c)) != s.add(ab_prod, s.mul(a, c)))
          sink.report(Axiom::LeftDistributive, {a, b, c}, "a*(b+c) != a*b + a*c");
        if (s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c)))
          sink.report(Axiom::RightDistributive, {a, b, c}, "(a+b)*c != a*c + b*c");
      }
    }
  }
  return sink.take();
}

NaturalOrder natural_order(const Semiring& s) {
  const std::size_t n = s.size();
  NaturalOrder order;
  order.n = n;
  order.leq.assign(n * n, false);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) order.leq[a * n + b] = s.natural_leq(a, b);

  // Longest path in the strict relation; n relaxation rounds suffice on a DAG.
  order.height.assign(n, 0);
  for (std::size_t round = 0; round <= n; ++round) {
    bool changed = false;
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        if (a != b && order(a, b) && order.height[b] < order.height[a] + 1) {
          order.height[b] = order.height[a] + 1;
          changed = true;
        }
    if (!changed) return order;
  }
  throw std::logic_error("natural order has a strict cycle; addition is not a semilattice");
}

LemmaReport verify_order_lemma(const Semiring& s) {
  const std::size_t n = s.size();
  const Element zero = s.zero();
  LemmaReport r;
  r.partial_order.name = "partial order with minimal element zero";
  r.absorbs_sum.name = "a is below a + b";
  r.least_upper.name = "a, b below c implies a + b below c";

  auto fail = [](LemmaProperty& p, std::vector<Element> w) {
    if (p.holds) p.counterexample = std::move(w);
    p.holds = false;
  };

  for (Element a = 0; a < n; ++a) {
    ++r.partial_order.checked;
    if (!s.natural_leq(a, a)) fail(r.partial_order, {a});
    if (!s.natural_leq(zero, a)) fail(r.partial_order, {zero, a});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      ++r.partial_order.checked;
      if (a != b && s.natural_leq(a, b) && s.natural_leq(b, a)) fail(r.partial_order, {a, b});
      ++r.absorbs_sum.checked;
      if (!s.natural_leq(a, s.add(a, b))) fail(r.absorbs_sum, {a, b});
      for (Element c = 0; c < n; ++c) {
        ++r.partial_order.checked;
        if (s.natural_leq(a, b) && s.natural_leq(b, c) && !s.natural_leq(a, c))
          fail(r.partial_order, {a, b, c});
        ++r.least_upper.checked;
        if (s.natural_leq(a, c) && s.natural_leq(b, c) && !s.natural_leq(s.add(a, b), c))
          fail(r.least_upper, {a, b, c});
      }
    }
  }
  return r;
}

Semiring boolean_semiring() {
  return Semiring({"0", "1"}, 0, 1, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}});
}

Semiring tropical_semiring(std::uint32_t cap) {
  const Element inf = cap + 1;
  const std::size_t n = static_cast<std::size_t>(cap) + 2;
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i <= cap; ++i) labels.push_back(std::to_string(i));
  labels.emplace_back("inf");

  Table add(n, std::vector<Element>(n));
  Table mul(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      add[a][b] = std::min(a, b);  // ∞ carries the largest index
      mul[a][b] = (a == inf || b == inf) ? inf : std::min<Element>(a + b, cap);
    }
  }
  return Semiring(std::move(labels), inf, 0, add, mul);
}

}  // namespace dimzero
