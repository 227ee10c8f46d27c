#include "gmloci/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "gmloci/graded_algebra.hpp"

namespace gmloci {

namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

enum class Tok { Ident, Nat, Sym, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;  // 1-based
};

class Lexer {
 public:
  Lexer(std::string_view line, std::size_t line_no, std::size_t column_offset)
      : line_no_(line_no) {
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      std::size_t col = column_offset + i + 1;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < line.size() &&
               (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) {
          ++j;
        }
        tokens_.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
        tokens_.push_back({Tok::Nat, std::string(line.substr(i, j - i)), col});
        i = j;
      } else if (std::string_view("+-*^/(),:").find(c) != std::string_view::npos) {
        tokens_.push_back({Tok::Sym, std::string(1, c), col});
        ++i;
      } else {
        throw ParseError(line_no_, col, std::string("unexpected character '") + c + "'");
      }
    }
    tokens_.push_back({Tok::End, "", column_offset + line.size() + 1});
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at_sym(char c) const { return peek().kind == Tok::Sym && peek().text[0] == c; }
  bool accept(char c) {
    if (!at_sym(c)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    std::string msg = message;
    if (!expected.empty()) msg += " (expected " + join(expected, " or ") + ")";
    throw ParseError(line_no_, peek().column, msg, std::move(expected));
  }
  void expect(char c) {
    if (!accept(c)) fail("unexpected '" + describe(peek()) + "'", {std::string("'") + c + "'"});
  }
  static std::string describe(const Token& t) { return t.kind == Tok::End ? "end of line" : t.text; }
  std::size_t line_no() const { return line_no_; }

 private:
  std::size_t line_no_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

unsigned long parse_nat(Lexer& lx, const std::vector<std::string>& expected) {
  if (lx.peek().kind != Tok::Nat) lx.fail("unexpected '" + Lexer::describe(lx.peek()) + "'", expected);
  const Token& t = lx.next();
  if (t.text.size() > 18) throw ParseError(lx.line_no(), t.column, "number too large");
  return std::stoul(t.text);
}

class PolyParser {
 public:
  PolyParser(Lexer& lx, const RingPtr& ring) : lx_(lx), ring_(ring) {}

  Polynomial poly() {
    Polynomial acc(ring_);
    bool negate = false;
    if (lx_.accept('-')) {
      negate = true;
    } else {
      lx_.accept('+');
    }
    Polynomial first = term();
    acc = negate ? -first : first;
    while (lx_.at_sym('+') || lx_.at_sym('-')) {
      bool minus = lx_.next().text[0] == '-';
      Polynomial t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

 private:
  Polynomial term() {
    Polynomial acc = factor();
    while (lx_.accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (lx_.accept('^')) {
      unsigned long e = parse_nat(lx_, {"exponent"});
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    const Token& t = lx_.peek();
    if (t.kind == Tok::Ident) {
      auto idx = ring_->index_of(t.text);
      if (!idx) throw ParseError(lx_.line_no(), t.column, "unknown variable '" + t.text + "'");
      lx_.next();
      return Polynomial::variable(ring_, *idx);
    }
    if (lx_.accept('(')) {
      Polynomial p = poly();
      lx_.expect(')');
      return p;
    }
    bool negative = false;
    if (lx_.at_sym('-')) {
      lx_.next();
      negative = true;
    }
    if (lx_.peek().kind == Tok::Nat) {
      std::size_t col = lx_.peek().column;
      mpz_class num(lx_.next().text);
      mpz_class den(1);
      if (lx_.accept('/')) {
        if (lx_.peek().kind != Tok::Nat) lx_.fail("unexpected '" + Lexer::describe(lx_.peek()) + "'", {"denominator"});
        den = mpz_class(lx_.next().text);
        if (den == 0) throw ParseError(lx_.line_no(), col, "zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      if (negative) q = -q;
      Scalar c;
      try {
        c = Scalar::from_rational(ring_->field(), q);
      } catch (const Error& e) {
        throw ParseError(lx_.line_no(), col, e.what());
      }
      return Polynomial::constant(ring_, c);
    }
    lx_.fail("unexpected '" + Lexer::describe(lx_.peek()) + "'", {"number", "variable", "'('"});
  }

  Lexer& lx_;
  const RingPtr& ring_;
};

struct PendingIdeal {
  std::string text;
  std::size_t line_no;
  std::size_t column_offset;
};

bool valid_flag(std::string_view f) {
  if (f.empty() || !std::isalpha(static_cast<unsigned char>(f[0]))) return false;
  return std::all_of(f.begin(), f.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
  });
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message,
                       std::vector<std::string> expected)
    : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

bool ProblemFile::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

ProblemFile parse_problem(std::string_view text) {
  ProblemFile out;
  bool field_seen = false;
  std::optional<std::size_t> ring_line;
  std::vector<Variable> vars;
  std::vector<PendingIdeal> ideals;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::size_t line_start = start;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    // Keyword first, so flag lines can bypass the polynomial lexer.
    std::size_t k = 0;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    if (k == line.size()) continue;
    std::size_t kend = k;
    while (kend < line.size() && std::isalpha(static_cast<unsigned char>(line[kend]))) ++kend;
    std::string keyword(line.substr(k, kend - k));
    std::string_view rest = line.substr(kend);
    std::size_t rest_offset = kend;
    (void)line_start;

    if (keyword == "flag") {
      std::string body(rest);
      std::stringstream ss(body);
      std::string item;
      std::size_t col = rest_offset + 1;
      bool any = false;
      while (std::getline(ss, item, ',')) {
        std::string f = trim(item);
        if (!valid_flag(f)) throw ParseError(line_no, col, "malformed flag '" + f + "'", {"flag name"});
        if (!out.has_flag(f)) out.flags.push_back(f);
        col += item.size() + 1;
        any = true;
      }
      if (!any) throw ParseError(line_no, rest_offset + 1, "empty flag line", {"flag name"});
      continue;
    }

    if (keyword == "ideal") {
      ideals.push_back({std::string(rest), line_no, rest_offset});
      continue;
    }

    Lexer lx(rest, line_no, rest_offset);
    if (keyword == "field") {
      if (field_seen) throw ParseError(line_no, k + 1, "duplicate field declaration");
      field_seen = true;
      const Token& t = lx.peek();
      if (t.kind == Tok::Ident && t.text == "Q") {
        lx.next();
        out.field = Field::rationals();
      } else if (t.kind == Tok::Ident && t.text[0] == 'F') {
        std::size_t col = t.column;
        std::string digits = t.text.substr(1);
        lx.next();
        if (digits.empty()) {
          digits = std::to_string(parse_nat(lx, {"modulus"}));
        } else if (!std::all_of(digits.begin(), digits.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
          throw ParseError(line_no, col, "malformed field '" + t.text + "'", {"Q", "F<prime>"});
        }
        if (digits.size() > 12) throw ParseError(line_no, col, "modulus too large");
        try {
          out.field = Field::prime(std::stoull(digits));
        } catch (const ValidationError& e) {
          throw ParseError(line_no, col, e.what());
        }
      } else {
        lx.fail("unexpected '" + Lexer::describe(t) + "'", {"Q", "F<prime>"});
      }
      if (lx.peek().kind != Tok::End) lx.fail("trailing input", {"end of line"});
    } else if (keyword == "ring") {
      if (ring_line) throw ParseError(line_no, k + 1, "duplicate ring declaration");
      ring_line = line_no;
      do {
        const Token& name = lx.peek();
        if (name.kind != Tok::Ident) lx.fail("unexpected '" + Lexer::describe(name) + "'", {"variable"});
        std::string var = lx.next().text;
        for (const auto& v : vars) {
          if (v.name == var) throw ParseError(line_no, name.column, "duplicate variable '" + var + "'");
        }
        lx.expect(':');
        bool negative = lx.accept('-');
        auto w = static_cast<std::int64_t>(parse_nat(lx, {"weight"}));
        vars.push_back(Variable{var, negative ? -w : w});
      } while (lx.accept(','));
      if (lx.peek().kind != Tok::End) lx.fail("unexpected '" + Lexer::describe(lx.peek()) + "'", {"','", "end of line"});
    } else {
      throw ParseError(line_no, k + 1, "unknown declaration '" + keyword + "'",
                       {"field", "ring", "ideal", "flag"});
    }
  }

  if (!ring_line) throw ParseError(line_no, 1, "missing ring declaration", {"ring"});
  out.ring = make_ring(std::move(vars), out.field);

  for (const auto& pending : ideals) {
    Lexer lx(pending.text, pending.line_no, pending.column_offset);
    PolyParser pp(lx, out.ring);
    do {
      out.generators.push_back(pp.poly());
    } while (lx.accept(','));
    if (lx.peek().kind != Tok::End) {
      lx.fail("unexpected '" + Lexer::describe(lx.peek()) + "'", {"','", "'+'", "'-'", "'*'", "end of line"});
    }
  }

  require_homogeneous(out.generators, "generator");
  return out;
}

std::string print_problem(const ProblemFile& problem) {
  std::string out = "field " + problem.field.to_string() + "\n";
  out += "ring ";
  const auto& vars = problem.ring->variables();
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ", ";
    out += vars[i].name + ":" + std::to_string(vars[i].weight);
  }
  out += "\n";
  if (!problem.generators.empty()) {
    out += "ideal ";
    for (std::size_t i = 0; i < problem.generators.size(); ++i) {
      if (i) out += ", ";
      out += problem.generators[i].to_string(false);
    }
    out += "\n";
  }
  for (const auto& f : problem.flags) out += "flag " + f + "\n";
  return out;
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Lexer lx(text, 1, 0);
  PolyParser pp(lx, ring);
  Polynomial p = pp.poly();
  if (lx.peek().kind != Tok::End) lx.fail("unexpected '" + Lexer::describe(lx.peek()) + "'", {"end of input"});
  return p;
}

}  // namespace gmloci
