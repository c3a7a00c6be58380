#include "qps/series.hpp"

#include <limits>
#include <sstream>

namespace qps {

int Series::check_order(int order) {
  if (order < 1) throw std::invalid_argument("series order must be >= 1");
  return order;
}

Series::Series(int order, std::vector<ZPoly> coeffs) : c_(std::move(coeffs)) {
  check_order(order);
  if (static_cast<int>(c_.size()) != order)
    throw std::invalid_argument("coefficient count does not match order");
}

Series Series::one(int order) {
  Series s(order);
  s.c_[0] = ZPoly(1);
  return s;
}

Series Series::constant(int order, ZPoly value) {
  Series s(order);
  s.c_[0] = std::move(value);
  return s;
}

Series Series::monomial(int order, mpz_class c, int zdeg, int qdeg) {
  Series s(order);
  if (qdeg < order) s.c_[qdeg] = ZPoly::monomial(std::move(c), zdeg);
  return s;
}

bool Series::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() < order()) c_.resize(o.order());
  for (int n = 0; n < order(); ++n) c_[n] += o.c_[n];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() < order()) c_.resize(o.order());
  for (int n = 0; n < order(); ++n) c_[n] -= o.c_[n];
  return *this;
}

Series Series::operator+(const Series& o) const {
  Series r = *this;
  r += o;
  return r;
}

Series Series::operator-(const Series& o) const {
  Series r = *this;
  r -= o;
  return r;
}

Series Series::operator*(const Series& o) const {
  int n = std::min(order(), o.order());
  Series r(n);
  for (int i = 0; i < n; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

Series Series::truncated(int order) const {
  check_order(order);
  if (order > this->order())
    throw std::invalid_argument("cannot extend a truncated series");
  Series r(order);
  for (int n = 0; n < order; ++n) r.c_[n] = c_[n];
  return r;
}

Series Series::scaled(const ZPoly& f) const {
  Series r(order());
  if (f.is_zero()) return r;
  for (int n = 0; n < order(); ++n)
    if (!c_[n].is_zero()) r.c_[n] = c_[n] * f;
  return r;
}

Series Series::q_shifted(int k) const {
  Series r(order());
  if (k >= 0) {
    for (int n = 0; n + k < order(); ++n) r.c_[n + k] = c_[n];
  } else {
    for (int n = 0; n < -k; ++n)
      if (!c_[n].is_zero())
        throw NotDivisible("negative q-shift of a series with nonzero low terms");
    for (int n = -k; n < order(); ++n) r.c_[n + k] = c_[n];
  }
  return r;
}

void Series::apply_factor(const mpz_class& a, int zdeg, int qdeg) {
  if (qdeg < 1) throw std::invalid_argument("factor q-power must be >= 1");
  for (int n = order() - 1; n >= qdeg; --n) {
    if (c_[n - qdeg].is_zero()) continue;
    c_[n] -= c_[n - qdeg].shifted(zdeg).scaled(a);
  }
}

void Series::apply_inverse_factor(const mpz_class& a, int zdeg, int qdeg) {
  if (qdeg < 1) throw std::invalid_argument("factor q-power must be >= 1");
  for (int n = qdeg; n < order(); ++n) {
    if (c_[n - qdeg].is_zero()) continue;
    c_[n] += c_[n - qdeg].shifted(zdeg).scaled(a);
  }
}

Series invert(const Series& a) {
  if (!a[0].is_unit_constant())
    throw NonUnitConstantTerm("constant term must be +1 or -1 to invert");
  const mpz_class u = a[0][0];  // self-inverse: u^2 = 1
  int order = a.order();
  Series b(order);
  b.set_coeff(0, ZPoly(u));
  for (int n = 1; n < order; ++n) {
    ZPoly acc;
    for (int j = 1; j <= n; ++j) {
      if (a[j].is_zero() || b[n - j].is_zero()) continue;
      acc += a[j] * b[n - j];
    }
    if (!acc.is_zero()) b.set_coeff(n, (-acc).scaled(u));
  }
  return b;
}

Series dz(const Series& a) {
  Series r(a.order());
  for (int n = 0; n < a.order(); ++n) r.set_coeff(n, a[n].z_ddz());
  return r;
}

Series subst_z(const Series& a, const mpz_class& v) {
  Series r(a.order());
  for (int n = 0; n < a.order(); ++n) r.set_coeff(n, ZPoly(a[n].eval(v)));
  return r;
}

Series exact_div_one_minus_z(const Series& a) {
  Series r(a.order());
  for (int n = 0; n < a.order(); ++n) r.set_coeff(n, a[n].div_one_minus_z());
  return r;
}

Series pochhammer(const PochSpec& spec, int order) {
  if (spec.sign != 1 && spec.sign != -1)
    throw InvalidPochSpec("pochhammer sign must be +1 or -1");
  if (spec.z_exp < 0 || spec.a_qpow < 0 || spec.step_qpow < 1)
    throw InvalidPochSpec("invalid pochhammer exponents");
  if (spec.count != PochSpec::kInfinite && spec.count < 0)
    throw InvalidPochSpec("negative pochhammer factor count");
  const bool infinite = spec.count == PochSpec::kInfinite;
  if (infinite && spec.a_qpow == 0)
    throw InvalidPochSpec("infinite pochhammer products require a_qpow >= 1");

  Series r = Series::one(order);
  mpz_class a = spec.sign;
  if (!infinite && spec.count > 0 && spec.a_qpow == 0) {
    // Leading factor (1 - a z^e) has q-power 0; fold it in directly.
    ZPoly f = ZPoly(1) - ZPoly::monomial(a, spec.z_exp);
    r = r.scaled(f);
  }
  int i0 = (!infinite && spec.a_qpow == 0) ? 1 : 0;
  long n_factors = infinite ? std::numeric_limits<long>::max() : spec.count;
  for (long i = i0; i < n_factors; ++i) {
    long p = spec.a_qpow + i * spec.step_qpow;
    if (p >= order) break;  // remaining factors are 1 mod q^order
    r.apply_factor(a, spec.z_exp, static_cast<int>(p));
  }
  return r;
}

Series q_binomial(int n, int k, int order) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_binomial needs n, k >= 0");
  if (n < k) return Series::zero(order);
  // [n, k]_q = [n, n-k]_q; use the smaller column.
  k = std::min(k, n - k);
  // Row recurrence [m, j] = [m-1, j] + q^(m-j) [m-1, j-1], truncated.
  std::vector<Series> row(k + 1, Series::zero(order));
  row[0] = Series::one(order);
  for (int m = 1; m <= n; ++m)
    for (int j = std::min(k, m); j >= 1; --j)
      row[j] += row[j - 1].q_shifted(m - j);
  return row[k];
}

Series geometric(int zpow, int qpow, int order) {
  if (zpow < 0) throw std::invalid_argument("geometric z-power must be >= 0");
  if (qpow < 1) throw ZeroQPower("geometric expansion requires qpow >= 1");
  Series r(order);
  for (long j = 0; j * qpow < order; ++j)
    r.set_coeff(static_cast<int>(j * qpow),
                ZPoly::monomial(1, static_cast<int>(j) * zpow));
  return r;
}

Series theta(ThetaKind kind, int order) {
  Series r(order);
  if (kind == ThetaKind::kPentagonal) {
    for (long j = 0;; ++j) {
      long e_pos = j * (3 * j + 1) / 2;   // the j < 0 branch of the bilateral sum
      long e_neg = j * (3 * j - 1) / 2;
      if (e_neg >= order && e_pos >= order) break;
      mpz_class s = (j % 2 == 0) ? 1 : -1;
      if (e_neg < order) {
        if (j == 0) {
          r.set_coeff(0, ZPoly(1));
        } else {
          r.set_coeff(static_cast<int>(e_neg), ZPoly(s));
        }
      }
      if (j > 0 && e_pos < order)
        r.set_coeff(static_cast<int>(e_pos), ZPoly(s));
    }
  } else {
    r.set_coeff(0, ZPoly(1));
    for (long j = 1; j * j < order; ++j)
      r.set_coeff(static_cast<int>(j * j), ZPoly((j % 2 == 0) ? 2 : -2));
  }
  return r;
}

Series divisor_series(int k_min, int order) {
  if (k_min < 1) throw std::invalid_argument("k_min must be >= 1");
  std::vector<long> count(order, 0);
  for (int d = k_min; d < order; ++d)
    for (int m = d; m < order; m += d) count[m] += 1;
  Series r(order);
  for (int n = 1; n < order; ++n)
    if (count[n]) r.set_coeff(n, ZPoly(count[n]));
  return r;
}

std::optional<Mismatch> first_mismatch(const Series& a, const Series& b,
                                       int n_lo) {
  int hi = std::min(a.order(), b.order());
  for (int n = std::max(n_lo, 0); n < hi; ++n)
    if (a[n] != b[n]) return Mismatch{n, a[n], b[n]};
  return std::nullopt;
}

Series sum_terms(int order, int m0, const std::function<int(int)>& valuation,
                 const std::function<Series(int)>& term) {
  Series acc(order);
  for (int m = m0; valuation(m) < order; ++m) acc += term(m);
  return acc;
}

std::string to_lines(const Series& s) {
  std::ostringstream os;
  for (int n = 0; n < s.order(); ++n)
    os << n << ": " << s[n].to_string() << '\n';
  return os.str();
}

}  // namespace qps
