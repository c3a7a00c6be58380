#pragma once

#include "qps/series.hpp"

#include <memory>
#include <string>
#include <vector>

namespace qps::qexpr {

struct SyntaxError : std::runtime_error {
  SyntaxError(size_t offset, const std::string& expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                           ": expected " + expected),
        offset(offset),
        expected(expected) {}
  size_t offset;
  std::string expected;
};

struct OverflowError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownName : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Div of a series whose constant term is not a unit.
using NonUnitDivisor = NonUnitConstantTerm;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind {
    kInt, kVarQ, kVarZ, kAdd, kSub, kMul, kDiv, kNeg, kPow, kPoch, kQBin, kNamed
  };
  Kind kind;
  mpz_class value;          // kInt
  ExprPtr lhs, rhs;         // binary nodes; kNeg/kPow use lhs
  int exponent = 0;         // kPow
  PochSpec poch;            // kPoch
  int qbin_n = 0, qbin_k = 0;
  std::string name;         // kNamed
  std::vector<int> args;    // kNamed
};

/// Parse the q-expression mini-language (see the grammar in the README).
ExprPtr parse(const std::string& text);

/// Canonical printer; parse(print_expr(parse(t))) == parse(t).
std::string print_expr(const ExprPtr& e);

/// Structural evaluation into a truncated series.
Series eval(const ExprPtr& e, int order);

}  // namespace qps::qexpr
