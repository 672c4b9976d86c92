#include "dimzero/certificate_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace dimzero {

namespace {

constexpr std::string_view kMagic = "dimzero-certificate";
constexpr int kVersion = 1;

void write_entries(std::ostream& os, std::span<const Element> e) {
  for (Element v : e) os << ' ' << v;
}

void write_morphism(std::ostream& os, const char* tag, const Morphism& m) {
  os << tag << ' ' << m.src() << ' ' << m.dst();
  write_entries(os, m.entries());
  os << '\n';
}

}  // namespace

std::string write_certificate(const Certificate& cert) {
  std::ostringstream os;
  os << kMagic << ' ' << kVersion << '\n';
  char fp[17];
  std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(cert.fingerprint));
  os << "semiring " << cert.semiring_size << ' ' << fp << '\n';
  os << "params " << cert.d << ' ' << cert.x << ' ' << cert.y << '\n';
  os << "branch " << branch_name(cert.branch) << '\n';
  os << "order " << cert.order.size() << '\n';
  for (const auto& f : cert.order) {
    os << 'f';
    write_entries(os, f.entries());
    os << '\n';
  }
  os << "terms " << cert.terms.size() << '\n';
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    const auto& t = cert.terms[i];
    os << "term " << i << '\n';
    write_morphism(os, "s", t.endo);
    write_morphism(os, "D", t.factor.d_head);
    write_morphism(os, "E", t.factor.e_head);
    os << "zero-columns " << t.factor.zero_columns() << '\n';
    os << "a " << to_fraction(t.coefficient) << '\n';
  }
  os << "x-diagonal " << cert.x_diagonal.size() << '\n';
  for (std::size_t i = 0; i < cert.x_diagonal.size(); ++i) os << (i ? " " : "") << to_fraction(cert.x_diagonal[i]);
  os << '\n';
  os << "det " << to_fraction(cert.det_x) << '\n';
  os << "checks " << cert.checks.size() << '\n';
  for (const auto& c : cert.checks) os << "check " << c.name << ' ' << (c.passed ? "pass" : "fail") << '\n';
  os << "end\n";
  return os.str();
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

class Cursor {
 public:
  explicit Cursor(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      ++number;
      std::istringstream in{std::string(text.substr(pos, end - pos))};
      Line l{number, {}};
      for (std::string t; in >> t;) l.tokens.push_back(t);
      lines_.push_back(std::move(l));
      pos = end + 1;
    }
  }

  const Line& next(std::string_view tag) {
    if (at_ >= lines_.size())
      throw ParseError(ParseError::Kind::Syntax, lines_.size(), "unexpected end of certificate, expected '" + std::string(tag) + "'");
    const Line& l = lines_[at_++];
    if (!tag.empty() && (l.tokens.empty() || l.tokens[0] != tag))
      throw ParseError(ParseError::Kind::Syntax, l.number,
                       "expected '" + std::string(tag) + "', got '" + (l.tokens.empty() ? "" : l.tokens[0]) + "'");
    return l;
  }

  void expect_done() const {
    for (std::size_t i = at_; i < lines_.size(); ++i)
      if (!lines_[i].tokens.empty())
        throw ParseError(ParseError::Kind::Syntax, lines_[i].number, "content after 'end'");
  }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

std::uint64_t number(const Line& l, std::size_t idx) {
  if (idx >= l.tokens.size()) throw ParseError(ParseError::Kind::Syntax, l.number, "missing field");
  const std::string& t = l.tokens[idx];
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size())
    throw ParseError(ParseError::Kind::Syntax, l.number, "expected a nonnegative integer, got '" + t + "'");
  return v;
}

void expect_arity(const Line& l, std::size_t n) {
  if (l.tokens.size() != n)
    throw ParseError(ParseError::Kind::Syntax, l.number,
                     "'" + l.tokens[0] + "' line has " + std::to_string(l.tokens.size()) + " fields, expected " +
                         std::to_string(n));
}

std::vector<Element> entries(const Line& l, std::size_t from, std::size_t count) {
  if (l.tokens.size() != from + count)
    throw ParseError(ParseError::Kind::Dimension, l.number,
                     "expected " + std::to_string(count) + " entries, got " +
                         std::to_string(l.tokens.size() >= from ? l.tokens.size() - from : 0));
  std::vector<Element> e;
  e.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t v = number(l, from + i);
    if (v > UINT32_MAX) throw ParseError(ParseError::Kind::Range, l.number, "entry index too large");
    e.push_back(static_cast<Element>(v));
  }
  return e;
}

Morphism morphism(Cursor& c, std::string_view tag) {
  const Line& l = c.next(tag);
  const std::uint64_t rows = number(l, 1);
  const std::uint64_t cols = number(l, 2);
  if (rows > (1U << 20) || cols > (1U << 20) || rows * cols > (1U << 24))
    throw ParseError(ParseError::Kind::Range, l.number, "morphism too large");
  return Morphism(rows, cols, entries(l, 3, rows * cols));
}

Rational fraction(const Line& l, std::size_t idx) {
  if (idx >= l.tokens.size()) throw ParseError(ParseError::Kind::Syntax, l.number, "missing fraction");
  try {
    return parse_fraction(l.tokens[idx]);
  } catch (const std::invalid_argument& e) {
    throw ParseError(ParseError::Kind::Syntax, l.number, e.what());
  }
}

std::size_t count_field(const Line& l, std::uint64_t limit) {
  expect_arity(l, 2);
  const std::uint64_t n = number(l, 1);
  if (n > limit) throw ParseError(ParseError::Kind::Range, l.number, "count too large");
  return static_cast<std::size_t>(n);
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  Cursor c(text);
  const Line& head = c.next(kMagic);
  expect_arity(head, 2);
  if (number(head, 1) != kVersion)
    throw ParseError(ParseError::Kind::Syntax, head.number, "unsupported certificate version");

  Certificate cert;
  const Line& sr = c.next("semiring");
  expect_arity(sr, 3);
  cert.semiring_size = number(sr, 1);
  {
    const std::string& hex = sr.tokens[2];
    auto [p, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), cert.fingerprint, 16);
    if (ec != std::errc() || p != hex.data() + hex.size())
      throw ParseError(ParseError::Kind::Syntax, sr.number, "malformed fingerprint '" + hex + "'");
  }

  const Line& params = c.next("params");
  expect_arity(params, 4);
  cert.d = number(params, 1);
  cert.x = number(params, 2);
  cert.y = number(params, 3);
  if (cert.d > (1U << 24) || cert.x > (1U << 24) || cert.d * cert.x > (1U << 24)) throw ParseError(ParseError::Kind::Range, params.number, "signature too large");

  const Line& br = c.next("branch");
  expect_arity(br, 2);
  if (br.tokens[1] == "pad") {
    cert.branch = Branch::Pad;
  } else if (br.tokens[1] == "construct") {
    cert.branch = Branch::Construct;
  } else {
    throw ParseError(ParseError::Kind::Syntax, br.number, "unknown branch '" + br.tokens[1] + "'");
  }

  constexpr std::uint64_t kMaxCount = 1U << 24;
  const std::size_t m = count_field(c.next("order"), kMaxCount);
  cert.order.reserve(m);
  for (std::size_t i = 0; i < m; ++i) cert.order.emplace_back(cert.d, cert.x, entries(c.next("f"), 1, cert.d * cert.x));

  const std::size_t k = count_field(c.next("terms"), kMaxCount);
  cert.terms.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Line& t = c.next("term");
    expect_arity(t, 2);
    if (number(t, 1) != i) throw ParseError(ParseError::Kind::Syntax, t.number, "terms out of sequence");
    CertificateTerm term;
    term.endo = morphism(c, "s");
    term.factor.d_head = morphism(c, "D");
    term.factor.e_head = morphism(c, "E");
    const Line& z = c.next("zero-columns");
    expect_arity(z, 2);
    term.factor.through = term.factor.v() + number(z, 1);
    const Line& a = c.next("a");
    expect_arity(a, 2);
    term.coefficient = fraction(a, 1);
    cert.terms.push_back(std::move(term));
  }

  const std::size_t diag = count_field(c.next("x-diagonal"), kMaxCount);
  const Line& dl = c.next("");
  if (dl.tokens.size() != diag)
    throw ParseError(ParseError::Kind::Dimension, dl.number,
                     "expected " + std::to_string(diag) + " diagonal entries, got " + std::to_string(dl.tokens.size()));
  for (std::size_t i = 0; i < diag; ++i) cert.x_diagonal.push_back(fraction(dl, i));

  const Line& det = c.next("det");
  expect_arity(det, 2);
  cert.det_x = fraction(det, 1);

  const std::size_t nchecks = count_field(c.next("checks"), 1024);
  for (std::size_t i = 0; i < nchecks; ++i) {
    const Line& l = c.next("check");
    expect_arity(l, 3);
    if (l.tokens[2] != "pass" && l.tokens[2] != "fail")
      throw ParseError(ParseError::Kind::Syntax, l.number, "check result must be pass or fail");
    cert.checks.push_back({l.tokens[1], l.tokens[2] == "pass"});
  }
  c.next("end");
  c.expect_done();
  return cert;
}

Certificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_certificate(buf.str());
}

}  // namespace dimzero
