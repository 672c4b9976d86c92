#include <doctest.h>

#include <string>

#include "dimzero/semiring_io.hpp"

using namespace dimzero;

namespace {

std::string data(const char* name) { return std::string(DIMZERO_TEST_DATA) + "/" + name; }

ParseError::Kind kind_of(const std::string& text) {
  try {
    parse_semiring(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseError::Kind::Syntax;
}

}  // namespace

TEST_CASE("well-formed Boolean file equals the built-in") {
  CHECK(load_semiring(data("boolean.sr")) == boolean_semiring());
}

TEST_CASE("tropical file equals the built-in") {
  CHECK(load_semiring(data("tropical1.sr")) == tropical_semiring(1));
}

TEST_CASE("text form round-trips") {
  for (const Semiring& s : {boolean_semiring(), tropical_semiring(0), tropical_semiring(3)})
    CHECK(parse_semiring(to_text(s)) == s);
}

TEST_CASE("a short or long table row is a dimension error naming the row") {
  try {
    load_semiring(data("bad_row.sr"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Dimension);
    CHECK(e.line() == 7);
    CHECK(std::string(e.what()).find("add row 1") != std::string::npos);
  }
}

TEST_CASE("zero index out of range") {
  try {
    load_semiring(data("bad_zero.sr"));
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Range);
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("zero index 2") != std::string::npos);
  }
}

TEST_CASE("syntax errors carry line numbers") {
  const std::string good = "semiring 1\nlabels a\nzero 0\none 0\nadd\n0\nmul\n0\n";
  CHECK(parse_semiring(good).size() == 1);

  CHECK(kind_of("semiring two\n") == ParseError::Kind::Syntax);
  CHECK(kind_of("semi 2\n") == ParseError::Kind::Syntax);
  CHECK(kind_of("semiring 0\n") == ParseError::Kind::Range);
  CHECK(kind_of("semiring 2\nlabels a\n") == ParseError::Kind::Dimension);
  CHECK(kind_of(good + "extra\n") == ParseError::Kind::Syntax);
  CHECK(kind_of("semiring 1\nlabels a\nzero 0\none 0\nadd\n0\n") == ParseError::Kind::Syntax);
  CHECK(kind_of("semiring 1\nlabels a\nzero 0\none 0\nadd\n1\nmul\n0\n") == ParseError::Kind::Range);
  CHECK(kind_of("semiring 1\nlabels a\nzero 0\none 0\nadd\n-1\nmul\n0\n") == ParseError::Kind::Syntax);

  try {
    parse_semiring("# header\n\nsemiring 1\nlabels a\nzero x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
}

TEST_CASE("parsing does not imply the axioms") {
  const Semiring s = load_semiring(data("broken_distributivity.sr"));
  CHECK(s.size() == 3);
  const auto v = verify_axioms(s);
  REQUIRE_FALSE(v.empty());
  for (const auto& violation : v) {
    const bool distributive =
        violation.axiom == Axiom::LeftDistributive || violation.axiom == Axiom::RightDistributive;
    CHECK(distributive);
    REQUIRE(violation.witness.size() == 3);
    const Element a = violation.witness[0], b = violation.witness[1], c = violation.witness[2];
    if (violation.axiom == Axiom::LeftDistributive)
      CHECK(s.mul(a, s.add(b, c)) != s.add(s.mul(a, b), s.mul(a, c)));
    else
      CHECK(s.mul(s.add(a, b), c) != s.add(s.mul(a, c), s.mul(b, c)));
  }
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(load_semiring(data("no_such_file.sr")), std::runtime_error);
}
