#include "dimzero/matcat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dimzero {

CapExceeded::CapExceeded(const std::string& what, std::optional<std::uint64_t> requested,
                         std::uint64_t cap)
    : std::length_error(what + " has " +
                        (requested ? std::to_string(*requested) : std::string("more than 2^64")) +
                        " elements, cap is " + std::to_string(cap)),
      requested_(requested),
      cap_(cap) {}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
    r *= base;
  }
  return r;
}

Morphism::Morphism(std::size_t src, std::size_t dst, Element fill)
    : src_(src), dst_(dst), entries_(src * dst, fill) {}

Morphism::Morphism(std::size_t src, std::size_t dst, std::vector<Element> entries)
    : src_(src), dst_(dst), entries_(std::move(entries)) {
  if (entries_.size() != src * dst) {
    throw DimensionError("morphism " + std::to_string(src) + "x" + std::to_string(dst) + " given " +
                         std::to_string(entries_.size()) + " entries");
  }
}

Morphism::Morphism(std::initializer_list<std::initializer_list<Element>> rows)
    : src_(rows.size()), dst_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& row : rows) {
    if (row.size() != dst_) throw DimensionError("ragged morphism literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

bool Morphism::valid_for(const Semiring& s) const {
  return std::all_of(entries_.begin(), entries_.end(), [&](Element e) { return e < s.size(); });
}

std::uint64_t Morphism::code(std::size_t n) const {
  std::uint64_t c = 0;
  for (Element e : entries_) c = c * n + e;
  return c;
}

Morphism Morphism::from_code(std::uint64_t code, std::size_t src, std::size_t dst, std::size_t n) {
  std::vector<Element> e(src * dst);
  for (std::size_t i = e.size(); i-- > 0;) {
    e[i] = static_cast<Element>(code % n);
    code /= n;
  }
  return Morphism(src, dst, std::move(e));
}

std::string render(const Semiring& s, const Morphism& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.src(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.dst(); ++j) os << (j ? "," : "") << s.label(m(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

Morphism compose(const Semiring& s, const Morphism& a, const Morphism& b) {
  if (a.dst() != b.src()) {
    throw DimensionError("cannot compose " + std::to_string(a.src()) + "x" + std::to_string(a.dst()) +
                         " with " + std::to_string(b.src()) + "x" + std::to_string(b.dst()));
  }
  Morphism c(a.src(), b.dst(), s.zero());
  for (std::size_t i = 0; i < a.src(); ++i)
    for (std::size_t j = 0; j < b.dst(); ++j) {
      Element acc = s.zero();
      for (std::size_t k = 0; k < a.dst(); ++k) acc = s.add(acc, s.mul(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  return c;
}

Morphism identity(const Semiring& s, std::size_t x) {
  Morphism m(x, x, s.zero());
  for (std::size_t i = 0; i < x; ++i) m(i, i) = s.one();
  return m;
}

Morphism zero_morphism(const Semiring& s, std::size_t x, std::size_t y) {
  return Morphism(x, y, s.zero());
}

bool dominates(const Semiring& s, const Morphism& f, const Morphism& g) {
  if (f.src() != g.src() || f.dst() != g.dst()) throw DimensionError("dominance between different Hom-sets");
  auto fe = f.entries();
  auto ge = g.entries();
  for (std::size_t i = 0; i < fe.size(); ++i)
    if (!s.natural_leq(fe[i], ge[i])) return false;
  return true;
}

OrderKey order_key(const NaturalOrder& order, const Morphism& m) {
  OrderKey k;
  k.entries.assign(m.entries().begin(), m.entries().end());
  for (Element e : k.entries) k.height_sum += order.height[e];
  return k;
}

std::size_t HomEnumeration::position(const Morphism& m) const {
  if (m.src() != d_ || m.dst() != x_) throw DimensionError("morphism does not belong to this Hom-set");
  return position_by_code_[m.code(radix_)];
}

HomEnumeration enumerate_hom(const Semiring& s, std::size_t d, std::size_t x, std::uint64_t cap) {
  const auto count = checked_pow(s.size(), static_cast<std::uint64_t>(d) * x);
  if (!count || *count > cap) {
    throw CapExceeded("Hom(" + std::to_string(d) + "," + std::to_string(x) + ")", count, cap);
  }
  const NaturalOrder order = natural_order(s);

  std::vector<std::pair<OrderKey, std::uint64_t>> keyed;
  keyed.reserve(*count);
  for (std::uint64_t c = 0; c < *count; ++c)
    keyed.emplace_back(order_key(order, Morphism::from_code(c, d, x, s.size())), c);
  std::sort(keyed.begin(), keyed.end());

  HomEnumeration h;
  h.d_ = d;
  h.x_ = x;
  h.radix_ = s.size();
  h.position_by_code_.resize(*count);
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    h.morphisms_.emplace_back(d, x, keyed[i].first.entries);
    h.keys_.push_back(std::move(keyed[i].first));
    h.position_by_code_[keyed[i].second] = static_cast<std::uint32_t>(i);
  }
  return h;
}

}  // namespace dimzero
