#include "qps/partitions.hpp"
#include "qps/verify.hpp"

#include <functional>

namespace qps::verify {

namespace {

// ---------------------------------------------------------------- helpers

Series qq_inf(int order) { return pochhammer(PochSpec::infinite(1), order); }

Series neg_q_inf(int order) { return pochhammer(PochSpec::infinite(1, 1, -1), order); }

/// 1/(q;q)_n truncated.
Series inv_qq(int n, int order) {
  Series s = Series::one(order);
  for (int j = 1; j <= n; ++j) s.apply_inverse_factor(1, 0, j);
  return s;
}

/// (q^(n+1); q)_inf (the tail of (q;q)_inf past the first n factors).
Series tail_from(int n_plus_1, int order) {
  if (n_plus_1 >= order) return Series::one(order);
  return pochhammer(PochSpec::infinite(n_plus_1), order);
}

/// (q^n; q)_inf - 1, valuation n.
Series tail_minus_one(int n, int order) {
  return tail_from(n, order) - Series::one(order);
}

/// q^m / (1 - q^m).
Series lambert(int m, int order) {
  return geometric(0, m, order).q_shifted(m);
}

/// [n, col]_q for n = 0..n_max as truncated series (iterated row recurrence).
std::vector<Series> qbin_prefix(int col, int n_max, int order) {
  std::vector<Series> cols(col + 1, Series::zero(order));
  cols[0] = Series::one(order);
  std::vector<Series> out;
  out.reserve(n_max + 1);
  out.push_back(col == 0 ? cols[0] : cols[col]);
  for (int m = 1; m <= n_max; ++m) {
    for (int j = std::min(col, m); j >= 1; --j)
      cols[j] += cols[j - 1].q_shifted(m - j);
    out.push_back(cols[col]);
  }
  return out;
}

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Series with coefficient f(n) at q^n for n = 1..order-1.
Series pointwise(int order, const std::function<ZPoly(int)>& f) {
  Series s(order);
  for (int n = 1; n < order; ++n) s.set_coeff(n, f(n));
  return s;
}

Series stat_series(int order, const StatVariant& v) {
  return pointwise(order, [v](int n) { return stat_poly(n, v); });
}

/// FFW_k(z, n) restricted to partitions with at least k parts: the
/// closed forms carry z-valuation k, so the z^0 contributions of shorter
/// partitions are excluded on the enumeration side.
Series stat_series_pos(int order, const StatVariant& v) {
  return pointwise(order, [v](int n) {
    ZPoly p = stat_poly(n, v);
    auto c = p.coeffs();
    if (!c.empty()) c[0] = 0;
    return ZPoly(std::move(c));
  });
}

/// Divisor-sum form of the FFW_k generating function:
/// -sum_{i=0}^{k-1} (-1)^i q^(i(i+1)/2)/(q;q)_i
///   (sum d(n)q^n - sum_{n=1}^{k-i-1} q^n/(1-q^n)).
Series ffw_divisor_form(int k, int order) {
  Series acc(order);
  Series d = divisor_series(1, order);
  for (int i = 0; i < k; ++i) {
    Series inner = d;
    for (int n = 1; n <= k - i - 1; ++n) inner -= lambert(n, order);
    inner = inner.q_shifted(i * (i + 1) / 2);
    for (int j = 1; j <= i; ++j) inner.apply_inverse_factor(1, 0, j);
    if (i % 2 == 0)
      acc -= inner;
    else
      acc += inner;
  }
  return acc;
}

/// q-binomial-weighted tail form of the FFW_k generating function.
Series ffw_tail_form(int k, int order) {
  auto qb = qbin_prefix(k - 1, order - 1, order);
  Series acc(order);
  for (int n = k; n < order; ++n)
    acc += (qb[n - 1] * tail_from(n + 1, order))
               .scaled(ZPoly(n))
               .q_shifted(n);
  acc = acc.q_shifted(k * (k - 1) / 2);
  return (k % 2 == 0) ? acc : -acc;
}

/// Sum-of-tails difference:
/// (-1)^(k-1) q^(k(k-1)/2) sum_{n>=k} [n-1, k-1]_q ((q^n;q)_inf - 1).
Series tails_diff_form(int k, int order) {
  auto qb = qbin_prefix(k - 1, order - 1, order);
  Series acc(order);
  for (int n = k; n < order; ++n) acc += qb[n - 1] * tail_minus_one(n, order);
  acc = acc.q_shifted(k * (k - 1) / 2);
  return (k % 2 == 1) ? acc : -acc;
}

/// Largest-part generating function for length k-1:
/// q^((k-1)(k-2)/2) sum_{n>=k-1} [n-1, k-2]_q n q^n.
Series largest_fixed_len_form(int k, int order) {
  auto qb = qbin_prefix(k - 2, order - 1, order);
  Series acc(order);
  for (int n = k - 1; n < order; ++n)
    acc += qb[n - 1].scaled(ZPoly(n)).q_shifted(n);
  return acc.q_shifted((k - 1) * (k - 2) / 2);
}

/// First series form of FFW_k(z, n): z^k sum_{n>=k} (-1)^n q^(n(n+1)/2) /
/// ((q;q)_(n-k) (z q^(n-k+1); q)_k).
Series gen1_form(int k, int order) {
  Series acc = sum_terms(
      order, k, [](int n) { return n * (n + 1) / 2; },
      [&](int n) {
        Series t = inv_qq(n - k, order).q_shifted(n * (n + 1) / 2);
        for (int j = 0; j < k; ++j) t.apply_inverse_factor(1, 1, n - k + 1 + j);
        return (n % 2 == 0) ? t : -t;
      });
  return acc.scaled(ZPoly::monomial(1, k));
}

/// Second series form of FFW_k(z, n), with the inner bracket expanded.
Series gen2_form(int k, int order) {
  Series acc(order);
  for (int i = 0; i < k; ++i) {
    Series bracket = invert(pochhammer(PochSpec::infinite(i + 1, 1, 1, 1), order));
    for (int j = 0; j < k; ++j) {
      Series t = inv_qq(j, order).q_shifted((i + 1) * j);
      bracket -= t.scaled(ZPoly::monomial(1, j));
    }
    Series term =
        (inv_qq(i, order) * inv_qq(k - i - 1, order) * bracket)
            .q_shifted((k - i) * (k - i - 1) / 2);
    if (i % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  acc = acc * qq_inf(order);
  return (k % 2 == 0) ? acc : -acc;
}

SideBuilder side(std::string label, std::function<Series(int)> f) {
  return SideBuilder{std::move(label), std::move(f)};
}

CheckCase one_case(std::vector<SideBuilder> sides) {
  return CheckCase{"", std::move(sides)};
}

// ------------------------------------------------------------- the catalogue

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> reg;
  auto add = [&](IdentityCheck c) { reg.push_back(std::move(c)); };

  // ---------------------------------------------------------- classical

  add({"euler_pent",
       "Euler's pentagonal number theorem: (q;q)_inf as a theta series",
       Suite::kClassical, Expectation::kPass, 1,
       {one_case({
           side("theta_pentagonal",
                [](int N) { return theta(ThetaKind::kPentagonal, N); }),
           side("product_(q;q)_inf", [](int N) { return qq_inf(N); }),
       })}});

  add({"gauss_sq",
       "Gauss: (q;q)_inf/(-q;q)_inf as the alternating square theta series",
       Suite::kClassical, Expectation::kPass, 1,
       {one_case({
           side("theta_square",
                [](int N) { return theta(ThetaKind::kSquare, N); }),
           side("(q;q)_inf/(-q;q)_inf",
                [](int N) { return qq_inf(N) * invert(neg_q_inf(N)); }),
       })}});

  add({"jtp_qq",
       "Jacobi triple product at a = b = q: sum (-1)^n q^(n^2) = (q;q^2)_inf^2 (q^2;q^2)_inf",
       Suite::kClassical, Expectation::kPass, 1,
       {one_case({
           side("theta_sum",
                [](int N) {
                  Series s(N);
                  s.set_coeff(0, ZPoly(1));
                  for (long n = 1; n * n < N; ++n)
                    s.set_coeff(static_cast<int>(n * n),
                                ZPoly(n % 2 == 0 ? 2 : -2));
                  return s;
                }),
           side("triple_product",
                [](int N) {
                  auto odd = pochhammer(PochSpec::infinite(1, 2), N);
                  auto even = pochhammer(PochSpec::infinite(2, 2), N);
                  return odd * odd * even;
                }),
       })}});

  add({"euler_zq",
       "Euler's expansion of (zq;q)_inf as sum (-z)^m q^(m(m+1)/2)/(q;q)_m",
       Suite::kClassical, Expectation::kPass, 1,
       {one_case({
           side("product",
                [](int N) {
                  return pochhammer(PochSpec::infinite(1, 1, 1, 1), N);
                }),
           side("sum",
                [](int N) {
                  return sum_terms(
                      N, 0, [](int m) { return m * (m + 1) / 2; },
                      [&](int m) {
                        Series t = inv_qq(m, N)
                                       .q_shifted(m * (m + 1) / 2)
                                       .scaled(ZPoly::monomial(
                                           (m % 2 == 0) ? 1 : -1, m));
                        return t;
                      });
                }),
       })}});

  {
    IdentityCheck c{"binom_337",
                    "q-binomial series sum_j [N+j-1, j]_q z^j = 1/(z;q)_N at z = q^(m+1)",
                    Suite::kClassical, Expectation::kPass, 1, {}};
    for (int N = 1; N <= 5; ++N)
      for (int m = 0; m <= 3; ++m)
        c.cases.push_back(CheckCase{
            "N=" + std::to_string(N) + ",m=" + std::to_string(m),
            {side("series_sum",
                  [N, m](int order) {
                    auto qb = qbin_prefix(N - 1, N + order, order);
                    Series acc(order);
                    for (int j = 0; j * (m + 1) < order; ++j)
                      acc += qb[N + j - 1].q_shifted(j * (m + 1));
                    return acc;
                  }),
             side("inverse_product", [N, m](int order) {
               return invert(pochhammer(PochSpec::finite(m + 1, N), order));
             })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"binom_diff",
                    "derivative of the q-binomial series at z = q^(m+1)",
                    Suite::kClassical, Expectation::kPass, 1, {}};
    for (int N = 1; N <= 5; ++N)
      for (int m = 0; m <= 3; ++m)
        c.cases.push_back(CheckCase{
            "N=" + std::to_string(N) + ",m=" + std::to_string(m),
            {side("series_sum",
                  [N, m](int order) {
                    auto qb = qbin_prefix(N - 1, N + order, order);
                    Series acc(order);
                    for (int j = 1; (j - 1) * (m + 1) < order; ++j)
                      acc += qb[N + j - 1]
                                 .scaled(ZPoly(j))
                                 .q_shifted((j - 1) * (m + 1));
                    return acc;
                  }),
             side("product_form", [N, m](int order) {
               Series tailsum(order);
               for (int j = 0; j < N; ++j)
                 tailsum += geometric(0, m + 1 + j, order).q_shifted(j);
               return invert(pochhammer(PochSpec::finite(m + 1, N), order)) *
                      tailsum;
             })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"zn_21",
                    "sum_n z^n/(q;q)_n = 1/(z;q)_inf at z = q^k",
                    Suite::kClassical, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("series_sum",
                [k](int order) {
                  return sum_terms(
                      order, 1, [k](int n) { return k * n; },
                      [&](int n) { return inv_qq(n, order).q_shifted(k * n); });
                }),
           side("inverse_product", [k](int order) {
             return invert(pochhammer(PochSpec::infinite(k), order));
           })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"zsum_22",
                    "derivative form sum_n n z^(n-1)/(q;q)_n at z = q^k",
                    Suite::kClassical, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("series_sum",
                [k](int order) {
                  return sum_terms(
                      order, 1, [k](int n) { return k * (n - 1); },
                      [&](int n) {
                        return inv_qq(n, order)
                            .scaled(ZPoly(n))
                            .q_shifted(k * (n - 1));
                      });
                }),
           side("product_form", [k](int order) {
             Series tailsum = sum_terms(
                 order, 0, [](int n) { return n; },
                 [&](int n) {
                   return geometric(0, n + k, order).q_shifted(n);
                 });
             return invert(pochhammer(PochSpec::infinite(k), order)) * tailsum;
           })}});
    add(std::move(c));
  }

  // ------------------------------------------------------------- lemmas

  {
    IdentityCheck c{"lemma21",
                    "nested sum over 0 < n_1 < ... < n_k <= n equals q^(k(k+1)/2) [n, k]_q",
                    Suite::kLemmas, Expectation::kPass, 1, {}};
    for (int n = 1; n <= 12; ++n)
      for (int k = 1; k <= 4; ++k)
        c.cases.push_back(CheckCase{
            "n=" + std::to_string(n) + ",k=" + std::to_string(k),
            {side("brute_force",
                  [n, k](int order) {
                    Series brute(order);
                    std::vector<int> pick;
                    std::function<void(int, int)> rec = [&](int next, int sum) {
                      if (static_cast<int>(pick.size()) == k) {
                        if (sum < order)
                          brute.set_coeff(sum, brute[sum] + ZPoly(1));
                        return;
                      }
                      for (int v = next; v <= n; ++v) {
                        pick.push_back(v);
                        rec(v + 1, sum + v);
                        pick.pop_back();
                      }
                    };
                    rec(1, 0);
                    return brute;
                  }),
             side("q_binomial", [n, k](int order) {
               return q_binomial(n, k, order).q_shifted(k * (k + 1) / 2);
             })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"lemma22",
                    "sum_n n q^(kn)/(q;q)_n = 1/(q^k;q)_inf sum d_{>=k}(n) q^n",
                    Suite::kLemmas, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("series_sum",
                [k](int order) {
                  return sum_terms(
                      order, 1, [k](int n) { return k * n; },
                      [&](int n) {
                        return inv_qq(n, order).scaled(ZPoly(n)).q_shifted(k * n);
                      });
                }),
           side("divisor_form", [k](int order) {
             return invert(pochhammer(PochSpec::infinite(k), order)) *
                    divisor_series(k, order);
           })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"lemma23",
                    "q-binomial-weighted sum as a signed divisor-series combination",
                    Suite::kLemmas, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("series_sum",
                [k](int order) {
                  auto qb = qbin_prefix(k - 1, order - 1, order);
                  Series acc(order);
                  for (int n = 1; n < order; ++n)
                    acc += (qb[n - 1] * inv_qq(n, order))
                               .scaled(ZPoly(n))
                               .q_shifted(n);
                  return acc;
                }),
           side("divisor_form", [k](int order) {
             // Individual i-terms carry negative powers of q that cancel;
             // work shifted by S = k(k-1)/2 and shift back at the end.
             const int S = k * (k - 1) / 2;
             int big = order + S;
             Series acc(big);
             for (int i = 1; i <= k; ++i) {
               int e = S + k + i * (i - 1) / 2 - k * i;  // >= 0
               Series t = (inv_qq(k - i, big) * divisor_series(i, big))
                              .q_shifted(e);
               if (i % 2 == 0)
                 acc += t;
               else
                 acc -= t;
             }
             acc = -acc * invert(qq_inf(big));
             return acc.q_shifted(-S).truncated(order);
           })}});
    add(std::move(c));
  }

  // --------------------------------------------------------------- core

  add({"uchimura",
       "Uchimura's three-way identity for the smallest-part statistic",
       Suite::kCore, Expectation::kPass, 1,
       {one_case({
           side("tail_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n; },
                      [&](int n) {
                        return tail_from(n + 1, N).scaled(ZPoly(n)).q_shifted(n);
                      });
                }),
           side("alternating_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t = inv_qq(n, N).q_shifted(n * (n + 1) / 2);
                        t.apply_inverse_factor(1, 0, n);
                        return (n % 2 == 1) ? t : -t;
                      });
                }),
           side("lambert", [](int N) { return divisor_series(1, N); }),
       })}});

  add({"ffw_eq_d",
       "FFW(n) = d(n): enumeration against the divisor sieve",
       Suite::kCore, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) { return ZPoly(-ffw_k(n, 1)); });
                }),
           side("divisor_sieve", [](int N) { return divisor_series(1, N); }),
       })}});

  add({"ramanujan_c",
       "Ramanujan's identity with symbolic c",
       Suite::kCore, Expectation::kPass, 1,
       {one_case({
           side("alternating_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t =
                            invert(pochhammer(PochSpec::finite(1, n, 1, 1, 1), N))
                                .q_shifted(n * (n + 1) / 2)
                                .scaled(ZPoly::monomial((n % 2 == 1) ? 1 : -1, n));
                        t.apply_inverse_factor(1, 0, n);
                        return t;
                      });
                }),
           side("lambert",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n; },
                      [&](int n) {
                        return geometric(0, n, N)
                            .q_shifted(n)
                            .scaled(ZPoly::monomial(1, n));
                      });
                }),
       })}});

  add({"agl",
       "Andrews-Garvan-Liang FFW(z, n): enumeration and three series forms",
       Suite::kCore, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) { return stat_series(N, StatVariant::agl_z()); }),
           side("tail_sum",
                [](int N) {
                  // the sum must start at n = 0 (z^0 picks up 1 - (q;q)_inf)
                  return sum_terms(
                      N, 0, [](int n) { return n + 1; },
                      [&](int n) {
                        return (Series::one(N) - tail_from(n + 1, N))
                            .scaled(ZPoly::monomial(1, n));
                      });
                }),
           side("alternating_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t = inv_qq(n, N).q_shifted(n * (n + 1) / 2);
                        t.apply_inverse_factor(1, 1, n);
                        return (n % 2 == 1) ? t : -t;
                      });
                }),
           side("closed_form",
                [](int N) {
                  Series u = Series::one(N) -
                             qq_inf(N) *
                                 invert(pochhammer(
                                     PochSpec::infinite(1, 1, 1, 1), N));
                  return exact_div_one_minus_z(u);
                }),
       })}});

  add({"gup_c",
       "FFW_c(n): enumeration, alternating sum, and the (-c;q)_n Lambert form",
       Suite::kCore, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) { return stat_series(N, StatVariant::ffw_c()); }),
           side("alternating_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t = inv_qq(n, N)
                                       .q_shifted(n * (n + 1) / 2)
                                       .scaled(ZPoly::monomial(
                                           (n % 2 == 0) ? 1 : -1, n));
                        t.apply_inverse_factor(1, 0, n);
                        return t;
                      });
                }),
           side("lambert_form",
                [](int N) {
                  Series acc = sum_terms(
                      N, 1, [](int n) { return n; },
                      [&](int n) {
                        Series t =
                            pochhammer(PochSpec::finite(0, n, 1, 1, 1), N)
                                .q_shifted(n);
                        t.apply_inverse_factor(1, 0, n);
                        return t;
                      });
                  return acc - divisor_series(1, N);
                }),
       })}});

  {
    IdentityCheck c{"dilcher",
                    "Dilcher's binomial sum-of-tails identity, three forms",
                    Suite::kCore, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("binomial_tail_sum",
                [k](int order) {
                  return sum_terms(
                      order, k, [](int n) { return n; },
                      [&](int n) {
                        return tail_from(n + 1, order)
                            .scaled(ZPoly(binom(n, k)))
                            .q_shifted(n);
                      });
                }),
           side("alternating_sum",
                [k](int order) {
                  Series acc = sum_terms(
                      order, 1,
                      [k](int m) {
                        return (m + k) * (m + k - 1) / 2 - k * (k - 1) / 2;
                      },
                      [&](int m) {
                        // the printed prefactor q^(k(k-1)/2) must be read as
                        // q^(-k(k-1)/2) for the triangular exponents to line up
                        Series t = inv_qq(m, order).q_shifted(
                            (m + k) * (m + k - 1) / 2 - k * (k - 1) / 2);
                        for (int i = 0; i < k; ++i)
                          t.apply_inverse_factor(1, 0, m);
                        return (m % 2 == 1) ? t : -t;
                      });
                  return acc;
                }),
           side("nested_lambert",
                [k](int order) {
                  // A_r(j) = sum_{i <= j} t(i) A_(r-1)(i), t(i) = q^i/(1-q^i)
                  std::vector<Series> prev(order, Series::one(order));
                  for (int r = 1; r <= k; ++r) {
                    std::vector<Series> cur;
                    cur.reserve(order);
                    Series run(order);
                    cur.push_back(run);  // j = 0
                    for (int j = 1; j < order; ++j) {
                      run += lambert(j, order) * prev[j];
                      cur.push_back(run);
                    }
                    prev = std::move(cur);
                  }
                  return prev[order - 1];
                })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"thm11",
                    "FFW_k generating function: both displayed forms vs enumeration",
                    Suite::kCore, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 5; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return pointwise(order,
                                   [k](int n) { return ZPoly(ffw_k(n, k)); });
                }),
           side("tail_form",
                [k](int order) { return ffw_tail_form(k, order); }),
           side("divisor_form",
                [k](int order) { return ffw_divisor_form(k, order); })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"thm11_proof_range",
                    "the proof's final display with index range i = 1..k (as printed)",
                    Suite::kCore, Expectation::kFailAsPrinted, 1, {}};
    for (int k = 1; k <= 3; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return pointwise(order,
                                   [k](int n) { return ZPoly(ffw_k(n, k)); });
                }),
           side("printed_range", [k](int order) {
             Series acc(order);
             Series d = divisor_series(1, order);
             for (int i = 1; i <= k; ++i) {
               Series inner = d;
               for (int n = 1; n <= k - i - 1; ++n) inner -= lambert(n, order);
               inner = inner.q_shifted(i * (i + 1) / 2);
               for (int j = 1; j <= i; ++j) inner.apply_inverse_factor(1, 0, j);
               if (i % 2 == 0)
                 acc -= inner;
               else
                 acc += inner;
             }
             return acc;
           })}});
    add(std::move(c));
  }

  add({"cor12_ffw2",
       "FFW_2(n) = sum_{j<n} d(j) - d(n) + 1",
       Suite::kCore, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) { return ZPoly(ffw_k(n, 2)); });
                }),
           side("closed_form",
                [](int N) {
                  return pointwise(N, [](int n) {
                    return ZPoly(closed_form(n, ClosedForm::kFfw2));
                  });
                }),
       })}});

  add({"cor12_ffw3",
       "FFW_3(n) closed form with the floor-weighted divisor sum",
       Suite::kCore, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) { return ZPoly(ffw_k(n, 3)); });
                }),
           side("closed_form",
                [](int N) {
                  return pointwise(N, [](int n) {
                    return ZPoly(closed_form(n, ClosedForm::kFfw3));
                  });
                }),
       })}});

  {
    IdentityCheck c{"thm13",
                    "FFW_k as the double alternating sum over (m, j)",
                    Suite::kCore, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 5; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return pointwise(order,
                                   [k](int n) { return ZPoly(ffw_k(n, k)); });
                }),
           side("double_sum", [k](int order) {
             Series acc(order);
             for (int j = 0; j < k; ++j)
               acc += sum_terms(
                   order, k, [](int m) { return m * (m + 1) / 2; },
                   [&](int m) {
                     Series t = inv_qq(m, order).q_shifted(m * (m + 1) / 2);
                     t.apply_inverse_factor(1, 0, m - j);
                     return (m % 2 == 0) ? t : -t;
                   });
             return acc;
           })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"remark",
                    "the combined chain: double sum = divisor form = enumeration",
                    Suite::kCore, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return pointwise(order,
                                   [k](int n) { return ZPoly(ffw_k(n, k)); });
                }),
           side("double_sum",
                [k](int order) {
                  Series acc(order);
                  for (int j = 0; j < k; ++j)
                    acc += sum_terms(
                        order, k, [](int m) { return m * (m + 1) / 2; },
                        [&](int m) {
                          Series t =
                              inv_qq(m, order).q_shifted(m * (m + 1) / 2);
                          t.apply_inverse_factor(1, 0, m - j);
                          return (m % 2 == 0) ? t : -t;
                        });
                  return acc;
                }),
           side("divisor_form",
                [k](int order) { return ffw_divisor_form(k, order); })}});
    add(std::move(c));
  }

  // ------------------------------------------------------------ general

  {
    IdentityCheck c{"gen1",
                    "FFW_k(z, n) generating function (single alternating sum)",
                    Suite::kGeneral, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return stat_series_pos(order, StatVariant::ffw_kz(k));
                }),
           side("formula",
                [k](int order) { return gen1_form(k, order); })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"gen2",
                    "FFW_k(z, n) generating function (finite i-sum form)",
                    Suite::kGeneral, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return stat_series_pos(order, StatVariant::ffw_kz(k));
                }),
           side("formula",
                [k](int order) { return gen2_form(k, order); })}});
    add(std::move(c));
  }

  add({"coro1",
       "z = -1, k = 1 specialization: the even/odd smallest-part difference",
       Suite::kGeneral, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) {
                    return ZPoly(
                        stat_poly(n, StatVariant::ffw_kz(1)).eval(-1));
                  });
                }),
           side("alternating_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t = inv_qq(n - 1, N).q_shifted(n * (n + 1) / 2);
                        t.apply_inverse_factor(-1, 0, n);
                        return (n % 2 == 1) ? t : -t;
                      });
                }),
           side("theta_difference",
                [](int N) {
                  return qq_inf(N) - qq_inf(N) * invert(neg_q_inf(N));
                }),
       })}});

  add({"alladi",
       "Alladi's odd-smallest-part identity with the (-1)^(#-1) sign",
       Suite::kGeneral, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return stat_series(
                      N, StatVariant::parity(Parity::kOdd, Sign::kSharpMinusOne));
                }),
           side("square_indicator",
                [](int N) {
                  Series s(N);
                  for (long j = 1; j * j < N; ++j)
                    s.set_coeff(static_cast<int>(j * j),
                                ZPoly((j % 2 == 1) ? 1 : -1));
                  return s;
                }),
       })}});

  add({"alladi_printed",
       "Alladi's identity with the (-1)^# sign as printed",
       Suite::kGeneral, Expectation::kFailAsPrinted, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return stat_series(
                      N, StatVariant::parity(Parity::kOdd, Sign::kSharp));
                }),
           side("square_indicator",
                [](int N) {
                  Series s(N);
                  for (long j = 1; j * j < N; ++j)
                    s.set_coeff(static_cast<int>(j * j),
                                ZPoly((j % 2 == 1) ? 1 : -1));
                  return s;
                }),
       })}});

  add({"thm14",
       "even-smallest-part signed count via the square/pentagonal case analysis",
       Suite::kGeneral, Expectation::kPass, 1,
       {one_case({
           side("combinatorial",
                [](int N) {
                  auto t = parity_sharp_table(N - 1, Parity::kEven);
                  return pointwise(N, [&t](int n) { return ZPoly(t[n]); });
                }),
           side("case_analysis",
                [](int N) {
                  return pointwise(N, [](int n) {
                    return ZPoly(closed_form(n, ClosedForm::kThm14));
                  });
                }),
       })}});

  add({"thm34_printed",
       "the same case analysis with the square/pentagonal labels swapped (as printed)",
       Suite::kGeneral, Expectation::kFailAsPrinted, 1,
       {one_case({
           side("combinatorial",
                [](int N) {
                  auto t = parity_sharp_table(N - 1, Parity::kEven);
                  return pointwise(N, [&t](int n) { return ZPoly(t[n]); });
                }),
           side("case_analysis_swapped",
                [](int N) {
                  return pointwise(N, [](int n) {
                    // As printed the two single-condition cases are vacuous,
                    // leaving only the square-and-pentagonal case.
                    long j = 1;
                    while ((j + 1) * (j + 1) <= n) ++j;
                    bool square = j * j == n;
                    auto pent = pentagonal_index(n);
                    long r = 0;
                    if (square && pent)
                      r = ((*pent % 2 == 0) ? 1 : -1) - ((j % 2 == 0) ? 1 : -1);
                    return ZPoly(r);
                  });
                }),
       })}});

  add({"z1",
       "signed count over partitions with at least two distinct parts",
       Suite::kGeneral, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) {
                    mpz_class acc = 0;
                    for_each_distinct(n, [&](const DistinctPartition& p) {
                      if (p.size() >= 2) acc += (p.size() % 2 == 0) ? 1 : -1;
                    });
                    return ZPoly(acc);
                  });
                }),
           side("alternating_sum",
                [](int N) {
                  return sum_terms(
                      N, 2, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t = inv_qq(n, N).q_shifted(n * (n + 1) / 2);
                        return (n % 2 == 0) ? t : -t;
                      });
                }),
           side("closed_form",
                [](int N) {
                  Series lin = Series::one(N) - Series::monomial(N, 2, 0, 1);
                  return qq_inf(N) - lin * geometric(0, 1, N);
                }),
           side("coefficient_display",
                [](int N) {
                  return pointwise(N, [](int n) {
                    mpz_class v = 1;
                    if (auto j = pentagonal_index(n))
                      v += (*j % 2 == 0) ? 1 : -1;
                    return ZPoly(v);
                  });
                }),
       })}});

  add({"coro2222",
       "z = -1, k = 2: the odd/even s_2 difference and the split product",
       Suite::kGeneral, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) {
                    mpz_class acc = 0;
                    for_each_distinct(n, [&](const DistinctPartition& p) {
                      if (p.size() < 2) return;
                      long e = static_cast<long>(p.size()) + p[1];
                      acc += (e % 2 == 0) ? 1 : -1;
                    });
                    return ZPoly(acc);
                  });
                }),
           side("alternating_sum",
                [](int N) {
                  return sum_terms(
                      N, 2, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t = inv_qq(n - 2, N).q_shifted(n * (n + 1) / 2);
                        t.apply_inverse_factor(-1, 0, n - 1);
                        t.apply_inverse_factor(-1, 0, n);
                        return (n % 2 == 0) ? t : -t;
                      });
                }),
           side("product_difference",
                [](int N) {
                  return qq_inf(N) -
                         pochhammer(PochSpec::infinite(1, 2), N) *
                             pochhammer(PochSpec::infinite(2, 1), N);
                }),
       })}});

  add({"qp",
       "combinatorial evaluation via the largest-square floor",
       Suite::kGeneral, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) {
                    mpz_class acc = 0;
                    for_each_distinct(n, [&](const DistinctPartition& p) {
                      if (p.size() < 2) return;
                      long e = static_cast<long>(p.size()) + p[1];
                      acc += (e % 2 == 0) ? 1 : -1;
                    });
                    return ZPoly(acc);
                  });
                }),
           side("case_analysis",
                [](int N) {
                  return pointwise(N, [](int n) {
                    return ZPoly(closed_form(n, ClosedForm::kThm37));
                  });
                }),
       })}});

  {
    IdentityCheck c{"genth",
                    "s_k-weighted generating function, both closed forms",
                    Suite::kGeneral, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 3; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return pointwise(order, [k](int n) {
                    return stat_poly(n, StatVariant::ffw_kz(k)).z_ddz();
                  });
                }),
           side("double_sum",
                [k](int order) {
                  Series acc(order);
                  for (int j = 0; j < k; ++j)
                    acc += sum_terms(
                        order, k, [](int n) { return n * (n + 1) / 2; },
                        [&](int n) {
                          Series t =
                              inv_qq(n - k, order).q_shifted(n * (n + 1) / 2);
                          for (int i = 0; i < k; ++i)
                            t.apply_inverse_factor(1, 1, n - k + 1 + i);
                          t.apply_inverse_factor(1, 1, n - j);
                          return (n % 2 == 0) ? t : -t;
                        });
                  return acc.scaled(ZPoly::monomial(1, k));
                }),
           side("finite_sum_form",
                [k](int order) {
                  Series acc(order);
                  for (int j = 0; j < k; ++j) {
                    Series first = invert(pochhammer(
                                       PochSpec::infinite(j + 1, 1, 1, 1),
                                       order)) *
                                   sum_terms(
                                       order, 1,
                                       [j](int m) { return m + j; },
                                       [&](int m) {
                                         Series t = Series::monomial(
                                             order, 1, 1, m + j);
                                         t.apply_inverse_factor(1, 1, j + m);
                                         return t;
                                       });
                    Series second(order);
                    for (int n = 1; n < k; ++n)
                      second += inv_qq(n, order)
                                    .scaled(ZPoly::monomial(n, n))
                                    .q_shifted((j + 1) * n);
                    Series term = (inv_qq(j, order) * inv_qq(k - j - 1, order) *
                                   (first - second))
                                      .q_shifted((k - j) * (k - j - 1) / 2);
                    if (j % 2 == 0)
                      acc += term;
                    else
                      acc -= term;
                  }
                  acc = acc * qq_inf(order);
                  return (k % 2 == 0) ? acc : -acc;
                })}});
    add(std::move(c));
  }

  add({"coro39",
       "k = 1 weighted forms normalized to sum n z^n q^n (q^(n+1);q)_inf",
       Suite::kGeneral, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) {
                    return -stat_poly(n, StatVariant::ffw_kz(1)).z_ddz();
                  });
                }),
           side("tail_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n; },
                      [&](int n) {
                        return tail_from(n + 1, N)
                            .scaled(ZPoly::monomial(n, n))
                            .q_shifted(n);
                      });
                }),
           side("alternating_sum",
                [](int N) {
                  Series acc = sum_terms(
                      N, 1, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t = inv_qq(n - 1, N).q_shifted(n * (n + 1) / 2);
                        t.apply_inverse_factor(1, 1, n);
                        t.apply_inverse_factor(1, 1, n);
                        return (n % 2 == 1) ? t : -t;
                      });
                  return acc.scaled(ZPoly::monomial(1, 1));
                }),
           side("product_form",
                [](int N) {
                  Series tailsum = sum_terms(
                      N, 1, [](int m) { return m; },
                      [&](int m) {
                        Series t = Series::monomial(N, 1, 0, m);
                        t.apply_inverse_factor(1, 1, m);
                        return t;
                      });
                  return (qq_inf(N) *
                          invert(pochhammer(PochSpec::infinite(1, 1, 1, 1), N)) *
                          tailsum)
                      .scaled(ZPoly::monomial(1, 1));
                }),
       })}});

  add({"coro310",
       "z = -1 weighted corollary",
       Suite::kGeneral, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) {
                    return ZPoly(
                        stat_poly(n, StatVariant::ffw_kz(1)).z_ddz().eval(-1));
                  });
                }),
           side("alternating_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n * (n + 1) / 2; },
                      [&](int n) {
                        Series t = inv_qq(n - 1, N).q_shifted(n * (n + 1) / 2);
                        t.apply_inverse_factor(-1, 0, n);
                        t.apply_inverse_factor(-1, 0, n);
                        return (n % 2 == 1) ? t : -t;
                      });
                }),
           side("product_form",
                [](int N) {
                  Series tailsum = sum_terms(
                      N, 1, [](int m) { return m; },
                      [&](int m) {
                        Series t = Series::monomial(N, 1, 0, m);
                        t.apply_inverse_factor(-1, 0, m);
                        return t;
                      });
                  return qq_inf(N) * invert(neg_q_inf(N)) * tailsum;
                }),
       })}});

  {
    IdentityCheck c{"m_mc",
                    "M_(m,c): definition vs the m-fold z d/dz of the k = 1 form",
                    Suite::kGeneral, Expectation::kPass, 1, {}};
    for (int m = 0; m <= 3; ++m)
      c.cases.push_back(CheckCase{
          "m=" + std::to_string(m),
          {side("definition",
                [m](int order) {
                  return sum_terms(
                      order, 1, [](int n) { return n; },
                      [&](int n) {
                        mpz_class w = 1;
                        for (int i = 0; i < m; ++i) w *= n;
                        return tail_from(n + 1, order)
                            .scaled(ZPoly::monomial(w, n))
                            .q_shifted(n);
                      });
                }),
           side("dz_form", [m](int order) {
             Series s = -gen1_form(1, order);
             for (int i = 0; i < m; ++i) s = dz(s);
             return s;
           })}});
    add(std::move(c));
  }

  // -------------------------------------------------------------- tails

  {
    IdentityCheck c{"ztails",
                    "sum-of-tails form of the gap-weighted statistic, symbolic z",
                    Suite::kTails, Expectation::kPass, 1, {}};
    for (int k = 2; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return stat_series(order, StatVariant::tails(k));
                }),
           side("tail_sum", [k](int order) {
             int base = (k - 1) * (k - 2) / 2;
             auto qb = qbin_prefix(k - 2, order - 1, order);
             Series acc(order);
             for (int m = k - 1; base + 2 * m + 1 < order; ++m) {
               Series inner = sum_terms(
                   order, m + 1, [](int n) { return n; },
                   [&](int n) {
                     return tail_minus_one(n, order)
                         .scaled(ZPoly::monomial(1, n - m - 1));
                   });
               acc += (qb[m - 1] * inner).q_shifted(m);
             }
             acc = acc.q_shifted(base);
             return (k % 2 == 1) ? acc : -acc;
           })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"minus",
                    "gap statistic s_k - s_(k-1) as a q-binomial sum of tails",
                    Suite::kTails, Expectation::kPass, 1, {}};
    for (int k = 1; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return stat_series(order, StatVariant::diff(k));
                }),
           side("tail_sum",
                [k](int order) { return tails_diff_form(k, order); })}});
    add(std::move(c));
  }

  add({"uchimura_tails",
       "Uchimura's sum-of-tails identity for (-1)^# s",
       Suite::kTails, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) { return ZPoly(ffw_k(n, 1)); });
                }),
           side("tail_sum",
                [](int N) {
                  return sum_terms(
                      N, 1, [](int n) { return n; },
                      [&](int n) { return tail_minus_one(n, N); });
                }),
       })}});

  {
    IdentityCheck c{"recursive",
                    "recursive generating function step from FFW_(k-1) to FFW_k",
                    Suite::kTails, Expectation::kPass, 1, {}};
    for (int k = 2; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration_k",
                [k](int order) {
                  return pointwise(order,
                                   [k](int n) { return ZPoly(ffw_k(n, k)); });
                }),
           side("recursion", [k](int order) {
             Series prev = pointwise(
                 order, [k](int n) { return ZPoly(ffw_k(n, k - 1)); });
             return prev + tails_diff_form(k, order) -
                    ((k % 2 == 1) ? largest_fixed_len_form(k, order)
                                  : -largest_fixed_len_form(k, order));
           })}});
    add(std::move(c));
  }

  {
    IdentityCheck c{"thm44_corrected",
                    "telescoped sum-of-tails form, proof signs and bounds",
                    Suite::kTails, Expectation::kPass, 1, {}};
    for (int k = 2; k <= 4; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return pointwise(order,
                                   [k](int n) { return ZPoly(ffw_k(n, k)); });
                }),
           side("telescoped", [k](int order) {
             Series acc = -divisor_series(1, order);
             for (int l = 2; l <= k; ++l) {
               Series bracket =
                   tails_diff_form(l, order) -
                   ((l % 2 == 1) ? largest_fixed_len_form(l, order)
                                 : -largest_fixed_len_form(l, order));
               // tails_diff_form and largest_fixed_len_form already carry
               // the (-1)^(l-1) sign of the proof's telescoping step.
               acc += bracket;
             }
             return acc;
           })}});
    add(std::move(c));
  }

  add({"thm44_printed",
       "the same identity with the printed sign (-1)^(l(l-1)/2) and bounds",
       Suite::kTails, Expectation::kFailAsPrinted, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) { return ZPoly(ffw_k(n, 2)); });
                }),
           side("printed_form",
                [](int N) {
                  const int k = 2;
                  Series acc(N);
                  Series d = divisor_series(1, N);
                  Series dsum(N);  // divisor sum starting at n = k, added
                  for (int n = k; n < N; ++n) dsum.set_coeff(n, d[n]);
                  acc += dsum;
                  for (int l = 2; l <= N + 1; ++l) {
                    auto qb1 = qbin_prefix(l - 1, N - 1, N);
                    auto qb2 = qbin_prefix(l - 2, N - 1, N);
                    Series t1(N), t2(N);
                    for (int n = k; n < N; ++n) {
                      t1 += qb1[n - 1] * tail_minus_one(n, N);
                      t2 += qb2[n - 1].scaled(ZPoly(n)).q_shifted(n);
                    }
                    t1 = t1.q_shifted(l * (l - 1) / 2);
                    t2 = t2.q_shifted((l - 1) * (l - 2) / 2);
                    Series term = t1 - t2;
                    if ((l * (l - 1) / 2) % 2 == 1) term = -term;
                    acc += term;
                  }
                  return acc;
                }),
       })}});

  add({"zneg1_k2",
       "z = -1, k = 2 parity identity (sign-corrected closed form)",
       Suite::kTails, Expectation::kPass, 1,
       {one_case({
           side("enumeration",
                [](int N) {
                  return pointwise(N, [](int n) {
                    return ZPoly(stat_poly(n, StatVariant::tails(2)).eval(-1));
                  });
                }),
           side("closed_form",
                [](int N) {
                  Series acc = sum_terms(
                      N, 2, [](int n) { return n; },
                      [&](int n) {
                        Series factor =
                            Series::one(N) -
                            Series::monomial(N, (n % 2 == 1) ? 1 : -1, 0, n - 1);
                        Series t = factor * tail_minus_one(n, N);
                        return (n % 2 == 0) ? -t : t;  // (-1)^(n-1)
                      });
                  Series pref = Series::monomial(N, 1, 0, 1);
                  pref.apply_inverse_factor(-1, 0, 1);  // q/(1+q)
                  return pref * acc;
                }),
       })}});

  {
    IdentityCheck c{"zneg1_gen",
                    "z = -1 parity identity for general k (sign-corrected)",
                    Suite::kTails, Expectation::kPass, 1, {}};
    for (int k = 2; k <= 3; ++k)
      c.cases.push_back(CheckCase{
          "k=" + std::to_string(k),
          {side("enumeration",
                [k](int order) {
                  return pointwise(order, [k](int n) {
                    return ZPoly(
                        stat_poly(n, StatVariant::tails(k)).eval(-1));
                  });
                }),
           side("tail_sum", [k](int order) {
             int base = (k - 1) * (k - 2) / 2;
             auto qb = qbin_prefix(k - 2, order - 1, order);
             Series acc(order);
             for (int m = k - 1; base + 2 * m + 1 < order; ++m) {
               Series inner = sum_terms(
                   order, m + 1, [](int n) { return n; },
                   [&](int n) {
                     Series t = tail_minus_one(n, order);
                     return (n % 2 == 0) ? t : -t;
                   });
               Series term = (qb[m - 1] * inner).q_shifted(m);
               if ((k + m) % 2 == 1) term = -term;
               acc += term;
             }
             return acc.q_shifted(base);
           })}});
    add(std::move(c));
  }

  return reg;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> reg = build_registry();
  return reg;
}

}  // namespace qps::verify
