#include "schurkit/cli/expr.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace schurkit::cli {

namespace {

enum class Tok { ident, number, plus, minus, star, slash, caret, lparen, rparen, comma, end, bad };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

Expr node(Expr::Kind kind) {
  Expr x;
  x.kind = kind;
  return x;
}

Expr node(Expr::Kind kind, Expr child) {
  Expr x = node(kind);
  x.children.push_back(std::move(child));
  return x;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + std::string(t.text) + "'";
}

const std::vector<std::string> kAtomStart = {"e", "f", "h", "H1", "H2", "E(", "F(", "binom(", "integer", "("};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Expr parse_all() {
    Expr x = parse_expr();
    if (tok_.kind != Tok::end) fail(continuation(false));
    return x;
  }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) {
      tok_ = {Tok::end, start, {}};
      return;
    }
    const char ch = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_ = {Tok::ident, start, src_.substr(start, pos_ - start)};
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_ = {Tok::number, start, src_.substr(start, pos_ - start)};
      return;
    }
    ++pos_;
    Tok k = Tok::bad;
    switch (ch) {
      case '+': k = Tok::plus; break;
      case '-': k = Tok::minus; break;
      case '*': k = Tok::star; break;
      case '/': k = Tok::slash; break;
      case '^': k = Tok::caret; break;
      case '(': k = Tok::lparen; break;
      case ')': k = Tok::rparen; break;
      case ',': k = Tok::comma; break;
      default: break;
    }
    tok_ = {k, start, src_.substr(start, 1)};
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(tok_.offset, std::move(expected), describe(tok_));
  }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) fail({what});
    advance();
  }

  bool ident_is(std::string_view s) const { return tok_.kind == Tok::ident && tok_.text == s; }

  // Tokens that may follow a complete factor.
  std::vector<std::string> continuation(bool nested) const {
    std::vector<std::string> out;
    if (!last_had_power_) out.push_back("^");
    out.insert(out.end(), {"*", "+", "-"});
    out.push_back(nested ? ")" : "end of input");
    return out;
  }

  unsigned parse_nat() {
    if (tok_.kind == Tok::minus) throw ParseError(tok_.offset, {"natural number"}, "negative number '-'");
    if (tok_.kind != Tok::number) fail({"natural number"});
    unsigned long v = 0;
    for (char ch : tok_.text) {
      v = v * 10 + unsigned(ch - '0');
      if (v > 1000000) throw ParseError(tok_.offset, {"natural number <= 1000000"}, describe(tok_));
    }
    advance();
    return unsigned(v);
  }

  Expr parse_expr() {
    Expr sum = node(Expr::Kind::sum);
    bool negate = false;
    if (tok_.kind == Tok::minus) {
      negate = true;
      advance();
    }
    for (;;) {
      Expr t = parse_term();
      if (negate) t = node(Expr::Kind::neg, std::move(t));
      sum.children.push_back(std::move(t));
      if (tok_.kind == Tok::plus) {
        negate = false;
      } else if (tok_.kind == Tok::minus) {
        negate = true;
      } else {
        break;
      }
      advance();
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  Expr parse_term() {
    Expr prod = node(Expr::Kind::product);
    prod.children.push_back(parse_factor());
    while (tok_.kind == Tok::star) {
      advance();
      prod.children.push_back(parse_factor());
    }
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    last_had_power_ = false;
    if (tok_.kind != Tok::caret) return base;
    advance();
    const unsigned n = parse_nat();
    last_had_power_ = true;
    Expr p = node(Expr::Kind::power, std::move(base));
    p.n = n;
    return p;
  }

  Expr parse_atom() {
    if (tok_.kind == Tok::number) {
      Expr s = node(Expr::Kind::scalar);
      s.value = Rational(Integer(std::string(tok_.text)));
      advance();
      if (tok_.kind == Tok::slash) {
        advance();
        const std::size_t at = tok_.offset;
        if (tok_.kind != Tok::number) fail({"natural number"});
        const Integer den(std::string(tok_.text));
        if (den == 0) throw ParseError(at, {"nonzero denominator"}, "'0'");
        advance();
        s.value = make_rational(s.value.get_num(), den);
      }
      return s;
    }
    if (tok_.kind == Tok::lparen) {
      advance();
      Expr inner = parse_expr();
      if (tok_.kind != Tok::rparen) fail(continuation(true));
      advance();
      return inner;
    }
    if (tok_.kind != Tok::ident) fail(kAtomStart);

    auto gen = [this](Symbol s) {
      Expr g = node(Expr::Kind::generator);
      g.symbol = s;
      advance();
      return g;
    };
    if (ident_is("e")) return gen(Symbol::e);
    if (ident_is("f")) return gen(Symbol::f);
    if (ident_is("h")) return gen(Symbol::h);
    if (ident_is("H1")) return gen(Symbol::H1);
    if (ident_is("H2")) return gen(Symbol::H2);
    if (ident_is("E") || ident_is("F")) {
      Expr d = node(Expr::Kind::divided);
      d.letter = tok_.text == "E" ? Letter::e : Letter::f;
      advance();
      expect(Tok::lparen, "(");
      d.n = parse_nat();
      expect(Tok::rparen, ")");
      return d;
    }
    if (ident_is("binom")) {
      Expr b = node(Expr::Kind::binomial);
      advance();
      expect(Tok::lparen, "(");
      if (ident_is("H1")) {
        b.var = Var::H1;
      } else if (ident_is("H2")) {
        b.var = Var::H2;
      } else {
        fail({"H1", "H2"});
      }
      advance();
      expect(Tok::comma, ",");
      b.n = parse_nat();
      expect(Tok::rparen, ")");
      return b;
    }
    fail(kAtomStart);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{Tok::end, 0, {}};
  bool last_had_power_ = false;
};

void print(std::ostream& os, const Expr& x) {
  auto list = [&](const char* head) {
    os << head << '(';
    for (std::size_t i = 0; i < x.children.size(); ++i) {
      if (i) os << ',';
      print(os, x.children[i]);
    }
    os << ')';
  };
  switch (x.kind) {
    case Expr::Kind::sum: list("Sum"); break;
    case Expr::Kind::neg: list("Neg"); break;
    case Expr::Kind::product: list("Prod"); break;
    case Expr::Kind::power:
      os << "Pow(";
      print(os, x.children.front());
      os << ',' << x.n << ')';
      break;
    case Expr::Kind::scalar: os << schurkit::to_string(x.value); break;
    case Expr::Kind::generator:
      switch (x.symbol) {
        case Symbol::e: os << 'e'; break;
        case Symbol::f: os << 'f'; break;
        case Symbol::h: os << 'h'; break;
        case Symbol::H1: os << "H1"; break;
        case Symbol::H2: os << "H2"; break;
      }
      break;
    case Expr::Kind::divided: os << (x.letter == Letter::e ? 'E' : 'F') << '(' << x.n << ')'; break;
    case Expr::Kind::binomial: os << "binom(" << name(x.var) << ',' << x.n << ')'; break;
  }
}

template <class Mul>
Element lower_with(const Expr& x, Flavor flavor, const Mul& mul_fn) {
  switch (x.kind) {
    case Expr::Kind::sum: {
      Element out(flavor);
      for (const auto& c : x.children) out += lower_with(c, flavor, mul_fn);
      return out;
    }
    case Expr::Kind::neg: return -lower_with(x.children.front(), flavor, mul_fn);
    case Expr::Kind::product: {
      Element out = lower_with(x.children.front(), flavor, mul_fn);
      for (std::size_t i = 1; i < x.children.size(); ++i) out = mul_fn(out, lower_with(x.children[i], flavor, mul_fn));
      return out;
    }
    case Expr::Kind::power: {
      const Element base = lower_with(x.children.front(), flavor, mul_fn);
      Element out = mul_fn(Element::one(flavor), Element::one(flavor));
      for (unsigned i = 0; i < x.n; ++i) {
        out = mul_fn(out, base);
        if (out.is_zero()) break;
      }
      return out;
    }
    case Expr::Kind::scalar: return Element::scalar(flavor, x.value);
    case Expr::Kind::generator: return generator(flavor, x.symbol);
    case Expr::Kind::divided: return divided_power(flavor, x.letter, x.n);
    case Expr::Kind::binomial: return binomial(flavor, x.var, x.n);
  }
  return Element(flavor);
}

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i] == "end of input" || expected[i] == "integer" || expected[i].starts_with("natural")
               ? expected[i]
               : "'" + expected[i] + "'";
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : std::runtime_error("parse error at byte " + std::to_string(offset) + ": expected " +
                         (expected.size() > 1 ? "one of " : "") + join_expected(expected) + ", found " + found),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

std::string to_string(const Expr& x) {
  std::ostringstream os;
  print(os, x);
  return os.str();
}

Expr parse(std::string_view input) { return Parser(input).parse_all(); }

Element lower(const Expr& x, Flavor flavor) {
  return lower_with(x, flavor, [](const Element& a, const Element& b) { return mul(a, b); });
}

Element lower(const Expr& x, const SchurContext& ctx) {
  const Element raw = lower_with(x, ctx.flavor, [&ctx](const Element& a, const Element& b) { return mul_bd(a, b, ctx); });
  return normalize(raw, ctx);
}

}  // namespace schurkit::cli
