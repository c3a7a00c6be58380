#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qps {

/// Dense polynomial in one auxiliary variable (z or c) with arbitrary
/// precision integer coefficients. Canonical form: no trailing zero
/// coefficients; the empty coefficient vector is the zero polynomial.
class ZPoly {
public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }
  ZPoly(long value) { if (value != 0) c_.push_back(mpz_class(value)); }
  ZPoly(const mpz_class& value) { if (value != 0) c_.push_back(value); }

  /// c * z^deg
  static ZPoly monomial(mpz_class coeff, int deg);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& operator[](int deg) const;

  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// True if the polynomial is the constant +1 or -1.
  bool is_unit_constant() const {
    return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
  }

  ZPoly operator-() const;
  ZPoly operator+(const ZPoly& o) const;
  ZPoly operator-(const ZPoly& o) const;
  ZPoly operator*(const ZPoly& o) const;
  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);

  bool operator==(const ZPoly& o) const { return c_ == o.c_; }
  bool operator!=(const ZPoly& o) const { return c_ != o.c_; }

  ZPoly scaled(const mpz_class& f) const;
  /// Multiply by z^k.
  ZPoly shifted(int k) const;
  /// z d/dz: c z^m -> m c z^m.
  ZPoly z_ddz() const;
  /// Evaluate at an integer.
  mpz_class eval(const mpz_class& v) const;

  /// Exact quotient by (1 - z). Throws NotDivisible when eval(1) != 0.
  ZPoly div_one_minus_z() const;

  /// "[c0, c1, ...]" with decimal coefficients, "[]" for zero.
  std::string to_string() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<mpz_class> c_;
};

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qps
