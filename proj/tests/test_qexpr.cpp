#include "qps/qexpr.hpp"

#include "doctest.h"

#include <random>

using namespace qps;
using namespace qps::qexpr;

TEST_CASE("parse: pochhammer shapes") {
  auto e = parse("poch(q;q;inf)");
  REQUIRE(e->kind == Expr::Kind::kPoch);
  CHECK(e->poch.sign == 1);
  CHECK(e->poch.z_exp == 0);
  CHECK(e->poch.a_qpow == 1);
  CHECK(e->poch.step_qpow == 1);
  CHECK(e->poch.count == PochSpec::kInfinite);

  e = parse("poch(-z^2 q^3; q^2; 5)");
  CHECK(e->poch.sign == -1);
  CHECK(e->poch.z_exp == 2);
  CHECK(e->poch.a_qpow == 3);
  CHECK(e->poch.step_qpow == 2);
  CHECK(e->poch.count == 5);

  e = parse("poch(1; q; 4)");
  CHECK(e->poch.sign == 1);
  CHECK(e->poch.z_exp == 0);
  CHECK(e->poch.a_qpow == 0);
  CHECK(e->poch.count == 4);
}

TEST_CASE("parse: precedence and structure") {
  auto e = parse("qbin(4,2) * (1 - z*q)");
  REQUIRE(e->kind == Expr::Kind::kMul);
  CHECK(e->lhs->kind == Expr::Kind::kQBin);
  CHECK(e->lhs->qbin_n == 4);
  CHECK(e->lhs->qbin_k == 2);
  CHECK(e->rhs->kind == Expr::Kind::kSub);
  CHECK(e->rhs->rhs->kind == Expr::Kind::kMul);

  // ^ binds tighter than unary minus and *
  e = parse("-q^2 * z");
  REQUIRE(e->kind == Expr::Kind::kMul);
  CHECK(e->lhs->kind == Expr::Kind::kNeg);
  CHECK(e->lhs->lhs->kind == Expr::Kind::kPow);

  // left associativity
  e = parse("1 - 2 - 3");
  REQUIRE(e->kind == Expr::Kind::kSub);
  CHECK(e->lhs->kind == Expr::Kind::kSub);

  // x^-1 is sugar for 1/x
  e = parse("(1-q)^-1");
  REQUIRE(e->kind == Expr::Kind::kDiv);
  CHECK(e->lhs->kind == Expr::Kind::kInt);
}

TEST_CASE("parse: errors carry byte offsets") {
  CHECK_THROWS_AS(parse("poch(z;q;inf"), SyntaxError);
  try {
    parse("poch(z;q;inf");
  } catch (const SyntaxError& err) {
    CHECK(err.offset == 12);
  }
  try {
    parse("1 + + 2");
  } catch (const SyntaxError& err) {
    CHECK(err.offset == 4);
  }
  try {
    parse("qbin(4 2)");
  } catch (const SyntaxError& err) {
    CHECK(err.offset == 7);
    CHECK(err.expected == "','");
  }
  try {
    parse("q @ z");
  } catch (const SyntaxError& err) {
    CHECK(err.offset == 2);
  }
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("q q"), SyntaxError);
  CHECK_THROWS_AS(parse("q^99999999999999999999"), OverflowError);
  CHECK_THROWS_AS(parse("q^-2"), OverflowError);
}

TEST_CASE("eval: worked examples") {
  Series p = eval(parse("poch(q;q;inf)"), 8);
  Series expect(8);
  expect.set_coeff(0, ZPoly(1));
  expect.set_coeff(1, ZPoly(-1));
  expect.set_coeff(2, ZPoly(-1));
  expect.set_coeff(5, ZPoly(1));
  expect.set_coeff(7, ZPoly(1));
  CHECK(p == expect);

  CHECK(eval(parse("1/(1-q) * (1-q)"), 10) == Series::one(10));
  CHECK_THROWS_AS(eval(parse("1/(1-z)"), 5), NonUnitDivisor);
  CHECK_THROWS_AS(eval(parse("poch(q^0;q;inf)"), 5), SyntaxError);
}

TEST_CASE("eval: named builtins") {
  int N = 30;
  CHECK(eval(parse("dsum"), N) == divisor_series(1, N));
  CHECK(eval(parse("dsum_ge(3)"), N) == divisor_series(3, N));
  CHECK(eval(parse("pent"), N) == theta(ThetaKind::kPentagonal, N));
  CHECK(eval(parse("sqtheta"), N) == theta(ThetaKind::kSquare, N));
  CHECK(eval(parse("geo(z^2, q^3)"), N) == geometric(2, 3, N));
  CHECK(eval(parse("geo(z, q)"), N) == geometric(1, 1, N));
  CHECK_THROWS_AS(eval(parse("nosuch(3)"), N), UnknownName);
  CHECK_THROWS_AS(eval(parse("geo(z^2, q^0)"), N), ZeroQPower);
}

TEST_CASE("eval: qbin matches q_binomial for 0 <= k <= n <= 8") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      std::string t =
          "qbin(" + std::to_string(n) + "," + std::to_string(k) + ")";
      CHECK(eval(parse(t), 40) == q_binomial(n, k, 40));
    }
}

TEST_CASE("print: canonical round trip") {
  const char* cases[] = {
      "poch(q;q;inf)",
      "poch(-z^2 q^3; q^2; 5)",
      "poch(1;q;3)",
      "qbin(6,3) * (1 - z*q)^2",
      "1/(1-q) + dsum_ge(2) - pent * sqtheta",
      "geo(z^2, q^3) / (1 + q)",
      "-q^3 * z - 7",
      "(q + z)^4 / (1 - q^2*z)",
  };
  for (const char* t : cases) {
    auto e1 = parse(t);
    std::string printed = print_expr(e1);
    auto e2 = parse(printed);
    CHECK(print_expr(e2) == printed);
    CHECK(eval(e1, 20) == eval(e2, 20));
  }
}

namespace {

// random ASTs built from eval-safe atoms (division only by 1 - q)
ExprPtr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 3 : 7);
  switch (pick(rng)) {
    case 0: return parse("q");
    case 1: return parse("z");
    case 2: return parse(std::to_string(rng() % 7));
    case 3: return parse("poch(q;q;inf)");
    case 4:
    case 5: {
      auto a = random_expr(rng, depth - 1);
      auto b = random_expr(rng, depth - 1);
      auto e = std::make_shared<Expr>();
      e->kind = (pick(rng) % 2 == 0) ? Expr::Kind::kAdd : Expr::Kind::kMul;
      e->lhs = a;
      e->rhs = b;
      return e;
    }
    case 6: {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::kNeg;
      e->lhs = random_expr(rng, depth - 1);
      return e;
    }
    default: {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::kPow;
      e->lhs = random_expr(rng, depth - 1);
      e->exponent = static_cast<int>(rng() % 3);
      return e;
    }
  }
}

}  // namespace

TEST_CASE("eval is a homomorphism on random ASTs") {
  std::mt19937 rng(20260825);
  const int N = 12;
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_expr(rng, 5);
    auto b = random_expr(rng, 5);
    auto sum = std::make_shared<Expr>();
    sum->kind = Expr::Kind::kAdd;
    sum->lhs = a;
    sum->rhs = b;
    auto prod = std::make_shared<Expr>();
    prod->kind = Expr::Kind::kMul;
    prod->lhs = a;
    prod->rhs = b;
    CHECK(eval(sum, N) == eval(a, N) + eval(b, N));
    CHECK(eval(prod, N) == eval(a, N) * eval(b, N));
    // printing a random AST stays parseable and evaluates identically
    auto back = parse(print_expr(a));
    CHECK(eval(back, N) == eval(a, N));
  }
}
