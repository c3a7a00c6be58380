#pragma once

#include "qps/zpoly.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qps {

struct NonUnitConstantTerm : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidPochSpec : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroQPower : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated formal power series in q with ZPoly coefficients. A series of
/// order N carries exact coefficients of q^0 .. q^(N-1); binary operations
/// truncate to the smaller order.
class Series {
public:
  explicit Series(int order) : c_(check_order(order)) {}
  Series(int order, std::vector<ZPoly> coeffs);

  static Series zero(int order) { return Series(order); }
  static Series one(int order);
  static Series constant(int order, ZPoly value);
  /// c * z^zdeg * q^qdeg
  static Series monomial(int order, mpz_class c, int zdeg, int qdeg);

  int order() const { return static_cast<int>(c_.size()); }
  const ZPoly& operator[](int n) const { return c_[n]; }
  const std::vector<ZPoly>& coeffs() const { return c_; }
  bool is_zero() const;

  Series operator-() const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  bool operator==(const Series& o) const { return c_ == o.c_; }

  Series truncated(int order) const;
  Series scaled(const ZPoly& f) const;
  /// Multiply by q^k; k < 0 requires the low k coefficients to vanish
  /// (throws NotDivisible otherwise).
  Series q_shifted(int k) const;

  /// In-place multiply by the factor (1 - a z^zdeg q^qdeg), qdeg >= 1.
  void apply_factor(const mpz_class& a, int zdeg, int qdeg);
  /// In-place divide by the factor (1 - a z^zdeg q^qdeg), qdeg >= 1.
  void apply_inverse_factor(const mpz_class& a, int zdeg, int qdeg);

  void set_coeff(int n, ZPoly v) { c_[n] = std::move(v); }

private:
  static int check_order(int order);
  std::vector<ZPoly> c_;
};

/// Reciprocal; requires a[0] in {+1, -1}.
Series invert(const Series& a);

/// z d/dz applied coefficientwise.
Series dz(const Series& a);

/// Evaluate every coefficient at z = v.
Series subst_z(const Series& a, const mpz_class& v);

/// Coefficientwise exact quotient by (1 - z).
Series exact_div_one_minus_z(const Series& a);

/// Specification of a Pochhammer product: factors
/// (1 - sign z^z_exp q^(a_qpow + i step_qpow)), i = 0 .. count-1.
struct PochSpec {
  int sign = 1;        // +1 or -1
  int z_exp = 0;       // exponent of the auxiliary variable in a
  int a_qpow = 0;      // q-power of the first factor
  int step_qpow = 1;   // q-power step between factors
  static constexpr int kInfinite = -1;
  int count = kInfinite;

  static PochSpec finite(int a_qpow, int count, int step = 1, int sign = 1,
                         int z_exp = 0) {
    return {sign, z_exp, a_qpow, step, count};
  }
  static PochSpec infinite(int a_qpow, int step = 1, int sign = 1,
                           int z_exp = 0) {
    return {sign, z_exp, a_qpow, step, kInfinite};
  }
};

/// (a; q^step)_count truncated to the given order. Infinite products
/// require a_qpow >= 1.
Series pochhammer(const PochSpec& spec, int order);

/// Gaussian binomial coefficient as a truncated series; zero when n < k.
Series q_binomial(int n, int k, int order);

/// 1 / (1 - z^zpow q^qpow), qpow >= 1.
Series geometric(int zpow, int qpow, int order);

enum class ThetaKind { kPentagonal, kSquare };

/// kPentagonal: sum over j in Z of (-1)^j q^(j(3j+1)/2)  (= (q;q)_inf).
/// kSquare:     1 + 2 sum_{j>=1} (-1)^j q^(j^2)          (= (q;q)_inf/(-q;q)_inf).
Series theta(ThetaKind kind, int order);

/// Coefficient of q^n = number of divisors of n that are >= k_min.
Series divisor_series(int k_min, int order);

struct Mismatch {
  int n;
  ZPoly lhs;
  ZPoly rhs;
};

/// Smallest n in [n_lo, min(orders)) where the coefficients differ.
std::optional<Mismatch> first_mismatch(const Series& a, const Series& b,
                                       int n_lo = 0);

/// Sum of term(m) for m = m0, m0+1, ... while valuation(m) < order.
/// Valuation must be nondecreasing in m.
Series sum_terms(int order, int m0, const std::function<int(int)>& valuation,
                 const std::function<Series(int)>& term);

/// One line per q-power: "n: [c0, c1, ...]".
std::string to_lines(const Series& s);

}  // namespace qps
