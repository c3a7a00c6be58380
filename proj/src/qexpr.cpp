#include "qps/qexpr.hpp"

#include <cctype>
#include <sstream>

namespace qps::qexpr {

namespace {

struct Token {
  enum class Kind { kInt, kIdent, kSym, kEnd };
  Kind kind;
  mpz_class value;     // kInt
  std::string text;    // kIdent / kSym
  size_t offset;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    tok_.offset = pos_;
    if (pos_ >= text_.size()) {
      tok_.kind = Token::Kind::kEnd;
      tok_.text = "<end>";
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      tok_.kind = Token::Kind::kInt;
      tok_.text = text_.substr(start, pos_ - start);
      tok_.value = mpz_class(tok_.text, 10);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      tok_.kind = Token::Kind::kIdent;
      tok_.text = text_.substr(start, pos_ - start);
      return;
    }
    static const std::string syms = "+-*/^();,";
    if (syms.find(c) != std::string::npos) {
      tok_.kind = Token::Kind::kSym;
      tok_.text = std::string(1, c);
      ++pos_;
      return;
    }
    throw SyntaxError(pos_, "a token ('+', '-', '*', '/', '^', '(', ')', ';', ',', integer or name)");
  }

  const std::string& text_;
  size_t pos_ = 0;
  Token tok_;
};

class Parser {
public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (lex_.peek().kind != Token::Kind::kEnd)
      throw SyntaxError(lex_.peek().offset, "end of input, '+', '-', '*', '/' or '^'");
    return e;
  }

private:
  bool at_sym(const char* s) const {
    return lex_.peek().kind == Token::Kind::kSym && lex_.peek().text == s;
  }

  void expect_sym(const char* s) {
    if (!at_sym(s)) throw SyntaxError(lex_.peek().offset, std::string("'") + s + "'");
    lex_.take();
  }

  int expect_small_int(bool allow_negative = false) {
    bool neg = false;
    if (allow_negative && at_sym("-")) {
      lex_.take();
      neg = true;
    }
    if (lex_.peek().kind != Token::Kind::kInt)
      throw SyntaxError(lex_.peek().offset, "an integer");
    Token t = lex_.take();
    if (!t.value.fits_sint_p())
      throw OverflowError("exponent out of range at offset " + std::to_string(t.offset));
    long v = t.value.get_si();
    if (v > (1 << 30))
      throw OverflowError("exponent out of range at offset " +
                          std::to_string(t.offset));
    return static_cast<int>(neg ? -v : v);
  }

  static ExprPtr node(Expr e) { return std::make_shared<Expr>(std::move(e)); }

  static ExprPtr binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    Expr e{k};
    e.lhs = std::move(a);
    e.rhs = std::move(b);
    return node(std::move(e));
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (at_sym("+") || at_sym("-")) {
      bool add = lex_.take().text == "+";
      e = binary(add ? Expr::Kind::kAdd : Expr::Kind::kSub, e, parse_term());
    }
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (at_sym("*") || at_sym("/")) {
      bool mul = lex_.take().text == "*";
      e = binary(mul ? Expr::Kind::kMul : Expr::Kind::kDiv, e, parse_factor());
    }
    return e;
  }

  ExprPtr parse_factor() {
    if (at_sym("-")) {
      lex_.take();
      Expr e{Expr::Kind::kNeg};
      e.lhs = parse_factor();
      return node(std::move(e));
    }
    ExprPtr base = parse_atom();
    if (at_sym("^")) {
      lex_.take();
      size_t exp_offset = lex_.peek().offset;
      int exp = expect_small_int(/*allow_negative=*/true);
      if (exp == -1) {
        Expr one{Expr::Kind::kInt};
        one.value = 1;
        return binary(Expr::Kind::kDiv, node(std::move(one)), base);
      }
      if (exp < 0)
        throw OverflowError(
            "only nonnegative exponents (or -1) are supported at offset " +
            std::to_string(exp_offset));
      Expr e{Expr::Kind::kPow};
      e.lhs = base;
      e.exponent = exp;
      return node(std::move(e));
    }
    return base;
  }

  ExprPtr parse_atom() {
    const Token& t = lex_.peek();
    if (t.kind == Token::Kind::kInt) {
      Expr e{Expr::Kind::kInt};
      e.value = lex_.take().value;
      return node(std::move(e));
    }
    if (at_sym("(")) {
      lex_.take();
      ExprPtr e = parse_expr();
      expect_sym(")");
      return e;
    }
    if (t.kind == Token::Kind::kIdent) {
      std::string name = lex_.take().text;
      if (name == "q") return node(Expr{Expr::Kind::kVarQ});
      if (name == "z") return node(Expr{Expr::Kind::kVarZ});
      if (name == "poch") return parse_poch();
      if (name == "qbin") return parse_qbin();
      Expr e{Expr::Kind::kNamed};
      e.name = name;
      if (at_sym("(")) {
        lex_.take();
        if (!at_sym(")")) {
          e.args.push_back(parse_named_arg());
          while (at_sym(",")) {
            lex_.take();
            e.args.push_back(parse_named_arg());
          }
        }
        expect_sym(")");
      }
      return node(std::move(e));
    }
    throw SyntaxError(t.offset, "an integer, 'q', 'z', '(', 'poch', 'qbin' or a name");
  }

  // geo's arguments are monomials z^a / q^b; other builtins take integers.
  int parse_named_arg() {
    if (lex_.peek().kind == Token::Kind::kIdent &&
        (lex_.peek().text == "z" || lex_.peek().text == "q")) {
      lex_.take();
      if (at_sym("^")) {
        lex_.take();
        return expect_small_int();
      }
      return 1;
    }
    return expect_small_int();
  }

  // poch '(' mono ';' 'q' ('^' int)? ';' (int | 'inf') ')'
  ExprPtr parse_poch() {
    expect_sym("(");
    Expr e{Expr::Kind::kPoch};
    e.poch = parse_mono();
    expect_sym(";");
    if (lex_.peek().kind != Token::Kind::kIdent || lex_.peek().text != "q")
      throw SyntaxError(lex_.peek().offset, "'q'");
    lex_.take();
    e.poch.step_qpow = 1;
    if (at_sym("^")) {
      lex_.take();
      e.poch.step_qpow = expect_small_int();
      if (e.poch.step_qpow < 1)
        throw SyntaxError(lex_.peek().offset, "a q-step >= 1");
    }
    expect_sym(";");
    if (lex_.peek().kind == Token::Kind::kIdent && lex_.peek().text == "inf") {
      lex_.take();
      e.poch.count = PochSpec::kInfinite;
    } else {
      e.poch.count = expect_small_int();
      if (e.poch.count < 0)
        throw SyntaxError(lex_.peek().offset, "a factor count >= 0 or 'inf'");
    }
    expect_sym(")");
    if (e.poch.count == PochSpec::kInfinite && e.poch.a_qpow < 1)
      throw SyntaxError(lex_.peek().offset,
                        "a monomial with q-power >= 1 (required for infinite products)");
    return node(std::move(e));
  }

  // mono := ('-')? ('z' ('^' int)?)? ('q' ('^' int)?)? | int
  PochSpec parse_mono() {
    PochSpec spec;
    spec.sign = 1;
    spec.z_exp = 0;
    spec.a_qpow = 0;
    if (at_sym("-")) {
      lex_.take();
      spec.sign = -1;
    }
    if (lex_.peek().kind == Token::Kind::kInt) {
      Token t = lex_.take();
      if (t.value != 1)
        throw SyntaxError(t.offset, "the monomial constant 1");
      return spec;
    }
    bool saw = false;
    if (lex_.peek().kind == Token::Kind::kIdent && lex_.peek().text == "z") {
      lex_.take();
      saw = true;
      spec.z_exp = 1;
      if (at_sym("^")) {
        lex_.take();
        spec.z_exp = expect_small_int();
      }
    }
    if (lex_.peek().kind == Token::Kind::kIdent && lex_.peek().text == "q") {
      lex_.take();
      saw = true;
      spec.a_qpow = 1;
      if (at_sym("^")) {
        lex_.take();
        spec.a_qpow = expect_small_int();
      }
    }
    if (!saw)
      throw SyntaxError(lex_.peek().offset, "a monomial (z and/or q powers, or 1)");
    return spec;
  }

  // qbin '(' int ',' int ')'
  ExprPtr parse_qbin() {
    expect_sym("(");
    Expr e{Expr::Kind::kQBin};
    e.qbin_n = expect_small_int();
    expect_sym(",");
    e.qbin_k = expect_small_int();
    expect_sym(")");
    return node(std::move(e));
  }

  Lexer lex_;
};

void print_rec(std::ostream& os, const Expr& e) {
  auto paren = [&](const ExprPtr& c) {
    os << '(';
    print_rec(os, *c);
    os << ')';
  };
  switch (e.kind) {
    case Expr::Kind::kInt: os << e.value.get_str(); break;
    case Expr::Kind::kVarQ: os << 'q'; break;
    case Expr::Kind::kVarZ: os << 'z'; break;
    case Expr::Kind::kAdd: paren(e.lhs); os << " + "; paren(e.rhs); break;
    case Expr::Kind::kSub: paren(e.lhs); os << " - "; paren(e.rhs); break;
    case Expr::Kind::kMul: paren(e.lhs); os << " * "; paren(e.rhs); break;
    case Expr::Kind::kDiv: paren(e.lhs); os << " / "; paren(e.rhs); break;
    case Expr::Kind::kNeg: os << '-'; paren(e.lhs); break;
    case Expr::Kind::kPow: paren(e.lhs); os << '^' << e.exponent; break;
    case Expr::Kind::kPoch: {
      os << "poch(";
      if (e.poch.sign < 0) os << '-';
      bool saw = false;
      if (e.poch.z_exp > 0) {
        os << 'z';
        if (e.poch.z_exp != 1) os << '^' << e.poch.z_exp;
        saw = true;
      }
      if (e.poch.a_qpow > 0) {
        os << 'q';
        if (e.poch.a_qpow != 1) os << '^' << e.poch.a_qpow;
        saw = true;
      }
      if (!saw) os << '1';
      os << "; q";
      if (e.poch.step_qpow != 1) os << '^' << e.poch.step_qpow;
      os << "; ";
      if (e.poch.count == PochSpec::kInfinite)
        os << "inf";
      else
        os << e.poch.count;
      os << ')';
      break;
    }
    case Expr::Kind::kQBin:
      os << "qbin(" << e.qbin_n << ", " << e.qbin_k << ')';
      break;
    case Expr::Kind::kNamed: {
      os << e.name;
      if (!e.args.empty() || e.name == "geo") {
        os << '(';
        if (e.name == "geo" && e.args.size() == 2) {
          os << "z^" << e.args[0] << ", q^" << e.args[1];
        } else {
          for (size_t i = 0; i < e.args.size(); ++i) {
            if (i) os << ", ";
            os << e.args[i];
          }
        }
        os << ')';
      }
      break;
    }
  }
}

Series eval_named(const Expr& e, int order) {
  if (e.name == "dsum" && e.args.empty()) return divisor_series(1, order);
  if (e.name == "dsum_ge" && e.args.size() == 1 && e.args[0] >= 1)
    return divisor_series(e.args[0], order);
  if (e.name == "pent" && e.args.empty())
    return theta(ThetaKind::kPentagonal, order);
  if (e.name == "sqtheta" && e.args.empty())
    return theta(ThetaKind::kSquare, order);
  if (e.name == "geo" && e.args.size() == 2)
    return geometric(e.args[0], e.args[1], order);
  throw UnknownName("unknown builtin or bad arity: " + e.name);
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string print_expr(const ExprPtr& e) {
  std::ostringstream os;
  print_rec(os, *e);
  return os.str();
}

Series eval(const ExprPtr& e, int order) {
  switch (e->kind) {
    case Expr::Kind::kInt: return Series::constant(order, ZPoly(e->value));
    case Expr::Kind::kVarQ: return Series::monomial(order, 1, 0, 1);
    case Expr::Kind::kVarZ: return Series::constant(order, ZPoly::monomial(1, 1));
    case Expr::Kind::kAdd: return eval(e->lhs, order) + eval(e->rhs, order);
    case Expr::Kind::kSub: return eval(e->lhs, order) - eval(e->rhs, order);
    case Expr::Kind::kMul: return eval(e->lhs, order) * eval(e->rhs, order);
    case Expr::Kind::kDiv: return eval(e->lhs, order) * invert(eval(e->rhs, order));
    case Expr::Kind::kNeg: return -eval(e->lhs, order);
    case Expr::Kind::kPow: {
      Series base = eval(e->lhs, order);
      Series acc = Series::one(order);
      for (int i = 0; i < e->exponent; ++i) acc = acc * base;
      return acc;
    }
    case Expr::Kind::kPoch: return pochhammer(e->poch, order);
    case Expr::Kind::kQBin: return q_binomial(e->qbin_n, e->qbin_k, order);
    case Expr::Kind::kNamed: return eval_named(*e, order);
  }
  throw std::logic_error("unreachable");
}

}  // namespace qps::qexpr
