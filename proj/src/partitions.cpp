#include "qps/partitions.hpp"

#include <cmath>

namespace qps {

namespace {

void enum_rec(int remaining, int min_part, DistinctPartition& acc,
              const std::function<void(const DistinctPartition&)>& f) {
  if (remaining == 0) {
    f(acc);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    int rest = remaining - p;
    if (rest != 0 && rest <= p) continue;  // next part must exceed p
    acc.push_back(p);
    enum_rec(rest, p + 1, acc, f);
    acc.pop_back();
  }
}

long isqrt_floor(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int parity_sign(size_t count, Sign s) {
  bool odd = (count % 2) == 1;
  if (s == Sign::kSharpMinusOne) odd = !odd;
  return odd ? -1 : 1;
}

}  // namespace

void for_each_distinct(int n,
                       const std::function<void(const DistinctPartition&)>& f) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  DistinctPartition acc;
  enum_rec(n, 1, acc, f);
}

std::vector<DistinctPartition> enum_distinct(int n) {
  std::vector<DistinctPartition> out;
  for_each_distinct(n, [&](const DistinctPartition& p) { out.push_back(p); });
  return out;
}

int s_k(const DistinctPartition& p, int k) {
  if (k <= 0 || k > static_cast<int>(p.size())) return 0;
  return p[k - 1];
}

ZPoly stat_poly(int n, const StatVariant& v) {
  ZPoly acc;
  for_each_distinct(n, [&](const DistinctPartition& p) {
    const size_t len = p.size();
    switch (v.tag) {
      case StatVariant::Tag::kFfwKz:
        acc += ZPoly::monomial(parity_sign(len, Sign::kSharp), s_k(p, v.k));
        break;
      case StatVariant::Tag::kAglZ: {
        int sign = parity_sign(len, Sign::kSharpMinusOne);
        std::vector<mpz_class> ones(s_k(p, 1), sign);
        acc += ZPoly(std::move(ones));
        break;
      }
      case StatVariant::Tag::kFfwC:
        // (-c)^# s(pi): coefficient (-1)^# s at degree #.
        acc += ZPoly::monomial(
            mpz_class(parity_sign(len, Sign::kSharp) * s_k(p, 1)),
            static_cast<int>(len));
        break;
      case StatVariant::Tag::kPower: {
        mpz_class w = parity_sign(len, Sign::kSharp);
        mpz_class s = s_k(p, 1);
        for (int i = 0; i < v.m; ++i) w *= s;
        acc += ZPoly::monomial(w, s_k(p, 1));
        break;
      }
      case StatVariant::Tag::kTails: {
        if (static_cast<int>(len) < v.k) break;
        int d = s_k(p, v.k) - s_k(p, v.k - 1);
        std::vector<mpz_class> ones(d, parity_sign(len, Sign::kSharp));
        acc += ZPoly(std::move(ones));
        break;
      }
      case StatVariant::Tag::kDiff: {
        if (static_cast<int>(len) < v.k) break;
        long d = s_k(p, v.k) - s_k(p, v.k - 1);
        acc += ZPoly(parity_sign(len, Sign::kSharp) * d);
        break;
      }
      case StatVariant::Tag::kParity: {
        int s = s_k(p, 1);
        bool odd = (s % 2) == 1;
        if (odd != (v.par == Parity::kOdd)) break;
        acc += ZPoly(parity_sign(len, v.sign));
        break;
      }
    }
  });
  return acc;
}

mpz_class ffw_k(int n, int k) {
  if (n == 0) return 0;
  return stat_poly(n, StatVariant::ffw_kz(k)).z_ddz().eval(1);
}

mpz_class closed_form(int n, ClosedForm which) {
  switch (which) {
    case ClosedForm::kFfw2: {
      auto d = divisor_table(n);
      mpz_class acc = 0;
      for (int j = 1; j < n; ++j) acc += d[j];
      return acc - d[n] + 1;
    }
    case ClosedForm::kFfw3: {
      auto d = divisor_table(n);
      mpz_class acc = 0;
      for (int i = 1; i < n; ++i)
        acc += mpz_class(((n - i - 1) / 2 - 1)) * d[i];
      return -acc - d[n] - n + ((n % 2 == 0) ? 3 : 2);
    }
    case ClosedForm::kThm14: {
      long j = isqrt_floor(n);
      bool square = j * j == n;
      auto pent = pentagonal_index(n);
      long r = 0;
      if (square && pent)
        r = ((*pent % 2 == 0) ? 1 : -1) - ((j % 2 == 0) ? 1 : -1);
      else if (square)
        r = (j % 2 == 0) ? -1 : 1;  // (-1)^(j-1)
      else if (pent)
        r = (*pent % 2 == 0) ? 1 : -1;
      return r;
    }
    case ClosedForm::kThm37: {
      long l = isqrt_floor(n);
      long r = (l % 2 == 0) ? -1 : 1;  // (-1)^(l-1)
      if (auto pent = pentagonal_index(n))
        r += (*pent % 2 == 0) ? 1 : -1;
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

std::optional<long> pentagonal_index(long n) {
  if (n < 1) return std::nullopt;
  long r = isqrt_floor(24 * n + 1);
  if (r * r != 24 * n + 1) return std::nullopt;
  // n = j(3j-1)/2  =>  j = (1 +- r)/6
  if ((1 + r) % 6 == 0) return (1 + r) / 6;
  if ((1 - r) % 6 == 0) return (1 - r) / 6;
  return std::nullopt;
}

long divisor_count(long n, long k_min) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  long count = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    if (d >= k_min) ++count;
    long e = n / d;
    if (e != d && e >= k_min) ++count;
  }
  return count;
}

std::vector<long> divisor_table(long n_max, long k_min) {
  std::vector<long> t(n_max + 1, 0);
  for (long d = std::max(k_min, 1L); d <= n_max; ++d)
    for (long m = d; m <= n_max; m += d) t[m] += 1;
  return t;
}

mpz_class parts_lt_count(int n, int k) {
  if (n < 0 || k < 2) throw std::invalid_argument("need n >= 0, k >= 2");
  std::vector<mpz_class> dp(n + 1, 0);
  dp[0] = 1;
  for (int part = 1; part < k; ++part)
    for (int m = part; m <= n; ++m) dp[m] += dp[m - part];
  return dp[n];
}

mpz_class largest_sum_fixed_len(int n, int len) {
  mpz_class acc = 0;
  for_each_distinct(n, [&](const DistinctPartition& p) {
    if (static_cast<int>(p.size()) == len) acc += p.back();
  });
  return acc;
}

std::vector<mpz_class> parity_sharp_table(int n_max, Parity par) {
  // g[r][m] = signed count sum over distinct partitions of r into parts
  // >= m of (-1)^#; empty partition counts +1.
  int w = n_max + 2;
  std::vector<mpz_class> g(static_cast<size_t>(n_max + 1) * w, 0);
  auto at = [&](int r, int m) -> mpz_class& {
    return g[static_cast<size_t>(r) * w + m];
  };
  for (int m = 0; m <= n_max + 1; ++m) at(0, m) = 1;
  for (int m = n_max; m >= 1; --m)
    for (int r = 1; r <= n_max; ++r) {
      at(r, m) = at(r, m + 1);
      if (m <= r) at(r, m) -= at(r - m, m + 1);
    }
  std::vector<mpz_class> out(n_max + 1, 0);
  int s0 = (par == Parity::kOdd) ? 1 : 2;
  for (int s = s0; s <= n_max; s += 2)
    for (int n = s; n <= n_max; ++n)
      out[n] -= at(n - s, s + 1);
  return out;
}

}  // namespace qps
