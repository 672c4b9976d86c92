#include <doctest.h>

#include <algorithm>
#include <string>

#include "dimzero/semiring.hpp"
#include "support/oracles.hpp"

using namespace dimzero;

namespace {

bool names(const std::vector<Violation>& v, Axiom a) {
  return std::any_of(v.begin(), v.end(), [a](const Violation& x) { return x.axiom == a; });
}

Semiring with_tables(const Semiring& s, const Table& add, const Table& mul) {
  return Semiring(s.labels(), s.zero(), s.one(), add, mul);
}

}  // namespace

TEST_CASE("built-in semirings satisfy every axiom and the order lemma") {
  std::vector<Semiring> all{boolean_semiring()};
  for (std::uint32_t n = 0; n <= 6; ++n) all.push_back(tropical_semiring(n));
  for (const auto& s : all) {
    CAPTURE(s.size());
    CHECK(verify_axioms(s).empty());
    CHECK(verify_order_lemma(s).all_hold());
  }
}

TEST_CASE("table lookups") {
  const Semiring b = boolean_semiring();
  CHECK(b.add(1, 1) == 1);
  CHECK(b.mul(1, 0) == 0);
  CHECK_THROWS_AS(b.add(2, 0), std::out_of_range);
  CHECK_THROWS_AS(b.mul(0, 7), std::out_of_range);

  const Semiring t = tropical_semiring(2);
  CHECK(t.mul(1, 2) == 2);  // min(1+2, 2)
  CHECK(t.mul(2, 2) == 2);
  CHECK(t.mul(t.element("inf"), 1) == t.element("inf"));
  CHECK(t.add(1, t.element("inf")) == 1);
}

TEST_CASE("natural order") {
  const Semiring b = boolean_semiring();
  CHECK(b.natural_leq(0, 1));
  CHECK_FALSE(b.natural_leq(1, 0));

  const Semiring t = tropical_semiring(2);
  const Element inf = t.element("inf");
  for (Element a = 0; a < t.size(); ++a) CHECK(t.natural_leq(inf, a));
  // In min-plus, larger numbers sit lower: 2 ⊆ 1 ⊆ 0.
  CHECK(t.natural_leq(2, 1));
  CHECK(t.natural_leq(1, 0));
  CHECK_FALSE(t.natural_leq(0, 1));
}

TEST_CASE("tropical(2) identities follow the min / capped-sum formulas") {
  const Semiring t = tropical_semiring(2);
  REQUIRE(t.size() == 4);
  CHECK(t.label(t.zero()) == "inf");
  CHECK(t.zero() == 3);
  CHECK(t.one() == 0);
  for (Element a = 0; a < 4; ++a) {
    CHECK(t.add(a, t.zero()) == a);
    CHECK(t.mul(a, t.one()) == a);
  }
}

TEST_CASE("tropical(0) is the Boolean semiring relabelled") {
  const Semiring t = tropical_semiring(0);
  const Semiring b = boolean_semiring();
  REQUIRE(t.size() == 2);
  // 0 (the number) ↦ 1 (true), ∞ ↦ 0 (false)
  const Element to_bool[2] = {1, 0};
  CHECK(to_bool[t.zero()] == b.zero());
  CHECK(to_bool[t.one()] == b.one());
  for (Element a = 0; a < 2; ++a)
    for (Element c = 0; c < 2; ++c) {
      CHECK(to_bool[t.add(a, c)] == b.add(to_bool[a], to_bool[c]));
      CHECK(to_bool[t.mul(a, c)] == b.mul(to_bool[a], to_bool[c]));
    }
}

TEST_CASE("Boolean with 1+1 = 0 reports non-idempotent addition") {
  const Semiring b = boolean_semiring();
  Table add = b.add_table();
  add[1][1] = 0;
  const auto v = verify_axioms(with_tables(b, add, b.mul_table()));
  REQUIRE(names(v, Axiom::AdditionIdempotent));
  auto it = std::find_if(v.begin(), v.end(), [](const Violation& x) { return x.axiom == Axiom::AdditionIdempotent; });
  CHECK(it->message == "addition not idempotent at a=1");
  CHECK(it->witness == std::vector<Element>{1});
}

TEST_CASE("violations name the witnessing tuple") {
  const Semiring b = boolean_semiring();
  Table add = b.add_table();
  add[0][1] = 0;
  const auto v = verify_axioms(with_tables(b, add, b.mul_table()));
  auto it = std::find_if(v.begin(), v.end(), [](const Violation& x) { return x.axiom == Axiom::AdditionCommutative; });
  REQUIRE(it != v.end());
  CHECK(it->witness == std::vector<Element>{0, 1});
  CHECK(it->message == "addition not commutative at a=0, b=1");
}

TEST_CASE("single-entry mutations of built-in tables") {
  SUBCASE("Boolean and tropical(0): every mutation is rejected") {
    for (const Semiring& s : {boolean_semiring(), tropical_semiring(0)}) {
      for (int which = 0; which < 2; ++which)
        for (Element a = 0; a < s.size(); ++a)
          for (Element c = 0; c < s.size(); ++c) {
            Table add = s.add_table();
            Table mul = s.mul_table();
            Table& t = which ? mul : add;
            t[a][c] = 1 - t[a][c];
            CAPTURE(which);
            CAPTURE(a);
            CAPTURE(c);
            CHECK_FALSE(verify_axioms(with_tables(s, add, mul)).empty());
          }
    }
  }
  SUBCASE("larger tropical: the verifier agrees with a naive checker on every mutation") {
    for (std::uint32_t cap = 1; cap <= 4; ++cap) {
      const Semiring s = tropical_semiring(cap);
      std::size_t survivors = 0;
      for (int which = 0; which < 2; ++which)
        for (Element a = 0; a < s.size(); ++a)
          for (Element c = 0; c < s.size(); ++c)
            for (Element val = 0; val < s.size(); ++val) {
              Table add = s.add_table();
              Table mul = s.mul_table();
              Table& t = which ? mul : add;
              if (t[a][c] == val) continue;
              t[a][c] = val;
              const bool accepted = verify_axioms(with_tables(s, add, mul)).empty();
              CHECK(accepted == oracle::is_idempotent_semiring(add, mul, s.zero(), s.one()));
              if (accepted) {
                ++survivors;
                // Only products of the non-unit, non-zero numbers can move.
                CHECK(which == 1);
                CHECK(a == 1);
                CHECK(c == 1);
              }
            }
      // e.g. tropical(1) with 1*1 = inf is itself a valid semiring.
      CHECK(survivors >= 1);
    }
  }
}

TEST_CASE("the one-element semiring is accepted") {
  const Semiring one({"z"}, 0, 0, {{0}}, {{0}});
  CHECK(verify_axioms(one).empty());
  CHECK(verify_order_lemma(one).all_hold());
  CHECK(natural_order(one).height == std::vector<std::uint32_t>{0});
}

TEST_CASE("heights and order properties over all pairs") {
  std::vector<Semiring> all{boolean_semiring()};
  for (std::uint32_t n = 0; n <= 4; ++n) all.push_back(tropical_semiring(n));
  for (const auto& s : all) {
    const NaturalOrder o = natural_order(s);
    CHECK(o.height[s.zero()] == 0);
    for (Element a = 0; a < s.size(); ++a) {
      CHECK(o(a, a));
      CHECK(o(s.zero(), a));
      for (Element b = 0; b < s.size(); ++b) {
        if (o(a, b) && o(b, a)) CHECK(a == b);
        if (a != b && o(a, b)) CHECK(o.height[a] < o.height[b]);
      }
    }
  }
  // tropical(3): chain inf ⊊ 3 ⊊ 2 ⊊ 1 ⊊ 0
  const NaturalOrder t = natural_order(tropical_semiring(3));
  CHECK(t.height == std::vector<std::uint32_t>{4, 3, 2, 1, 0});
}

TEST_CASE("order lemma check counts") {
  const LemmaReport r = verify_order_lemma(tropical_semiring(3));
  CHECK(r.all_hold());
  CHECK(r.least_upper.checked == 125);
  CHECK(r.absorbs_sum.checked == 25);
}

TEST_CASE("natural order with a strict cycle is rejected") {
  // a + b = b makes every pair comparable both ways.
  const Semiring bad({"p", "q"}, 0, 0, {{0, 1}, {0, 1}}, {{0, 0}, {0, 0}});
  CHECK_FALSE(verify_axioms(bad).empty());
  CHECK_THROWS_AS(natural_order(bad), std::logic_error);
  CHECK_FALSE(verify_order_lemma(bad).all_hold());
}

TEST_CASE("structural errors precede axiom checking") {
  CHECK_THROWS_AS(Semiring({"0", "1"}, 0, 1, {{0, 1}, {1}}, {{0, 0}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(Semiring({"0", "1"}, 0, 1, {{0, 1}}, {{0, 0}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(Semiring({"0", "1"}, 0, 1, {{0, 1}, {1, 2}}, {{0, 0}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(Semiring({"0", "1"}, 2, 1, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}), StructuralError);
  CHECK_THROWS_AS(Semiring({}, 0, 0, {}, {}), StructuralError);
}

TEST_CASE("axiom checking refuses oversized semirings") {
  const Semiring t = tropical_semiring(10);  // 12 elements
  AxiomOptions opts;
  opts.max_size = 8;
  CHECK_THROWS_AS(verify_axioms(t, opts), SizeLimitError);
  opts.max_size = 12;
  CHECK(verify_axioms(t, opts).empty());
}

TEST_CASE("fingerprint ignores labels and sees tables") {
  const Semiring b = boolean_semiring();
  const Semiring relabelled({"F", "T"}, 0, 1, b.add_table(), b.mul_table());
  CHECK(b.fingerprint() == relabelled.fingerprint());
  CHECK(b.fingerprint() != tropical_semiring(0).fingerprint());
  CHECK(fingerprint_hex(b).size() == 16);
}
