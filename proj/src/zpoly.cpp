#include "qps/zpoly.hpp"

#include <sstream>

namespace qps {

namespace {
const mpz_class kZero = 0;
}

ZPoly ZPoly::monomial(mpz_class coeff, int deg) {
  ZPoly p;
  if (coeff != 0) {
    p.c_.assign(deg + 1, kZero);
    p.c_[deg] = std::move(coeff);
  }
  return p;
}

const mpz_class& ZPoly::operator[](int deg) const {
  if (deg < 0 || deg >= static_cast<int>(c_.size())) return kZero;
  return c_[deg];
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
  ZPoly r = *this;
  r += o;
  return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
  ZPoly r = *this;
  r -= o;
  return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  ZPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, kZero);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

ZPoly ZPoly::scaled(const mpz_class& f) const {
  if (f == 0) return {};
  ZPoly r = *this;
  for (auto& x : r.c_) x *= f;
  return r;
}

ZPoly ZPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  ZPoly r;
  r.c_.assign(c_.size() + k, kZero);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
  return r;
}

ZPoly ZPoly::z_ddz() const {
  ZPoly r = *this;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] *= static_cast<long>(i);
  r.trim();
  return r;
}

mpz_class ZPoly::eval(const mpz_class& v) const {
  mpz_class acc = 0;
  for (size_t i = c_.size(); i-- > 0;) {
    acc *= v;
    acc += c_[i];
  }
  return acc;
}

ZPoly ZPoly::div_one_minus_z() const {
  // q(z)(1 - z) = p(z)  <=>  q_i = sum_{j <= i} p_j, with p(1) = 0.
  if (is_zero()) return {};
  ZPoly r;
  r.c_.resize(c_.size());
  mpz_class acc = 0;
  for (size_t i = 0; i < c_.size(); ++i) {
    acc += c_[i];
    r.c_[i] = acc;
  }
  if (r.c_.back() != 0) throw NotDivisible("polynomial not divisible by (1 - z)");
  r.trim();
  return r;
}

std::string ZPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].get_str();
  }
  os << ']';
  return os.str();
}

}  // namespace qps
