#include "dimzero/semiring_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dimzero {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

std::uint64_t parse_index(const std::string& tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw ParseError(ParseError::Kind::Syntax, line, "expected a nonnegative integer, got '" + tok + "'");
  return v;
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const char* expecting) {
    if (at_ >= lines_.size())
      throw ParseError(ParseError::Kind::Syntax, last_line(), std::string("unexpected end of input, expected ") + expecting);
    return lines_[at_++];
  }

  const Line& keyword(const char* kw, std::size_t args) {
    const Line& l = next(kw);
    if (l.tokens[0] != kw)
      throw ParseError(ParseError::Kind::Syntax, l.number, std::string("expected '") + kw + "', got '" + l.tokens[0] + "'");
    if (args != static_cast<std::size_t>(-1) && l.tokens.size() != args + 1)
      throw ParseError(ParseError::Kind::Syntax, l.number,
                       std::string("'") + kw + "' takes " + std::to_string(args) + " argument(s)");
    return l;
  }

  bool done() const { return at_ >= lines_.size(); }
  const Line& peek() const { return lines_[at_]; }

 private:
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

Element checked_index(const std::string& tok, std::size_t n, std::size_t line, const std::string& what) {
  const std::uint64_t v = parse_index(tok, line);
  if (v >= n)
    throw ParseError(ParseError::Kind::Range, line,
                     what + " " + std::to_string(v) + " is out of range [0," + std::to_string(n) + ")");
  return static_cast<Element>(v);
}

Table read_table(Reader& r, const char* name, std::size_t n) {
  r.keyword(name, 0);
  Table t;
  for (std::size_t row = 0; row < n; ++row) {
    const Line& l = r.next((std::string(name) + " row").c_str());
    if (l.tokens.size() != n)
      throw ParseError(ParseError::Kind::Dimension, l.number,
                       std::string(name) + " row " + std::to_string(row) + " has " +
                           std::to_string(l.tokens.size()) + " entries, expected " + std::to_string(n));
    std::vector<Element> entries;
    for (const auto& tok : l.tokens)
      entries.push_back(checked_index(tok, n, l.number, std::string(name) + " entry"));
    t.push_back(std::move(entries));
  }
  return t;
}

}  // namespace

Semiring parse_semiring(std::string_view text) {
  Reader r(tokenize(text));
  const Line& head = r.keyword("semiring", 1);
  const std::uint64_t n64 = parse_index(head.tokens[1], head.number);
  if (n64 == 0 || n64 > (1U << 16))
    throw ParseError(ParseError::Kind::Range, head.number, "semiring size must be in [1, 65536]");
  const auto n = static_cast<std::size_t>(n64);

  const Line& lab = r.keyword("labels", static_cast<std::size_t>(-1));
  if (lab.tokens.size() != n + 1)
    throw ParseError(ParseError::Kind::Dimension, lab.number,
                     "expected " + std::to_string(n) + " labels, got " + std::to_string(lab.tokens.size() - 1));
  std::vector<std::string> labels(lab.tokens.begin() + 1, lab.tokens.end());

  const Line& z = r.keyword("zero", 1);
  const Element zero = checked_index(z.tokens[1], n, z.number, "zero index");
  const Line& o = r.keyword("one", 1);
  const Element one = checked_index(o.tokens[1], n, o.number, "one index");

  Table add = read_table(r, "add", n);
  Table mul = read_table(r, "mul", n);
  if (!r.done())
    throw ParseError(ParseError::Kind::Syntax, r.peek().number, "trailing content '" + r.peek().tokens[0] + "'");
  return Semiring(std::move(labels), zero, one, add, mul);
}

Semiring load_semiring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open semiring file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_semiring(buf.str());
}

std::string to_text(const Semiring& s) {
  std::ostringstream os;
  os << "semiring " << s.size() << "\nlabels";
  for (const auto& l : s.labels()) os << ' ' << l;
  os << "\nzero " << s.zero() << "\none " << s.one() << '\n';
  auto table = [&](const char* name, const Table& t) {
    os << name << '\n';
    for (const auto& row : t) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << row[c];
      os << '\n';
    }
  };
  table("add", s.add_table());
  table("mul", s.mul_table());
  return os.str();
}

}  // namespace dimzero
