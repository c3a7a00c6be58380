#include "doctest.h"

#include "qps/series.hpp"

#include <random>

using namespace qps;

namespace {

Series from_ints(std::initializer_list<long> qs) {
  Series s(static_cast<int>(qs.size()));
  int n = 0;
  for (long v : qs) s.set_coeff(n++, ZPoly(v));
  return s;
}

// Brute-force partition count (repetition allowed), independent oracle.
long partition_count(int n) {
  std::vector<long> dp(n + 1, 0);
  dp[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int m = part; m <= n; ++m) dp[m] += dp[m - part];
  return dp[n];
}

std::mt19937_64 rng(20240817);

ZPoly random_poly() {
  std::uniform_int_distribution<int> deg(0, 5), coeff(-9, 9);
  int d = deg(rng);
  std::vector<mpz_class> c(d + 1);
  for (auto& x : c) x = coeff(rng);
  return ZPoly(std::move(c));
}

Series random_series(int order) {
  Series s(order);
  for (int n = 0; n < order; ++n) s.set_coeff(n, random_poly());
  return s;
}

Series random_unit_series(int order) {
  Series s = random_series(order);
  std::bernoulli_distribution flip;
  s.set_coeff(0, ZPoly(flip(rng) ? 1 : -1));
  return s;
}

}  // namespace

TEST_CASE("mul basics") {
  auto a = from_ints({1, -1, 0, 0});              // 1 - q
  auto b = from_ints({1, 1, 1, 1});               // 1 + q + q^2 + q^3
  CHECK((a * b) == Series::one(4));
  auto c = random_series(7);
  CHECK((Series::one(7) * c) == c);

  auto p = Series::one(3) + Series::monomial(3, 1, 1, 1);   // 1 + z q
  auto m = Series::one(3) - Series::monomial(3, 1, 1, 1);   // 1 - z q
  auto prod = p * m;
  CHECK(prod[0] == ZPoly(1));
  CHECK(prod[1].is_zero());
  CHECK(prod[2] == ZPoly::monomial(-1, 2));
}

TEST_CASE("mul takes the min order") {
  auto a = random_series(9);
  auto b = random_series(5);
  CHECK((a * b).order() == 5);
}

TEST_CASE("invert") {
  auto g = invert(from_ints({1, -1, 0, 0}));
  CHECK(g == from_ints({1, 1, 1, 1}));

  // 1/(q;q)_inf counts partitions; cross-check with an independent DP.
  auto p = invert(pochhammer(PochSpec::infinite(1), 12));
  for (int n = 0; n < 12; ++n) CHECK(p[n] == ZPoly(partition_count(n)));

  CHECK_THROWS_AS(invert(from_ints({0, 1, 1})), NonUnitConstantTerm);
}

TEST_CASE("invert round trip (property)") {
  for (int i = 0; i < 100; ++i) {
    auto a = random_unit_series(12);
    CHECK((a * invert(a)) == Series::one(12));
  }
}

TEST_CASE("ring laws up to truncation (property)") {
  for (int i = 0; i < 40; ++i) {
    auto a = random_series(14), b = random_series(14), c = random_series(14);
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
  }
}

TEST_CASE("pochhammer") {
  auto qq = pochhammer(PochSpec::infinite(1), 8);
  CHECK(qq == from_ints({1, -1, -1, 0, 0, 1, 0, 1}));

  CHECK(pochhammer(PochSpec::finite(3, 0, 1, -1, 2), 5) == Series::one(5));

  auto zq1 = pochhammer(PochSpec::finite(1, 1, 1, 1, 1), 3);  // (zq;q)_1
  CHECK(zq1[0] == ZPoly(1));
  CHECK(zq1[1] == ZPoly::monomial(-1, 1));
  CHECK(zq1[2].is_zero());

  CHECK_THROWS_AS(pochhammer(PochSpec::infinite(0), 5), InvalidPochSpec);
}

TEST_CASE("pochhammer finite equals explicit factor product (property)") {
  for (int n = 0; n <= 6; ++n) {
    auto spec = PochSpec::finite(1, n, 2, -1, 1);  // (-zq; q^2)_n
    auto direct = Series::one(30);
    for (int i = 0; i < n; ++i)
      direct = direct * (Series::one(30) +
                         Series::monomial(30, 1, 1, 1 + 2 * i));
    CHECK(pochhammer(spec, 30) == direct);
  }
}

TEST_CASE("q_binomial") {
  auto b = q_binomial(4, 2, 10);
  CHECK(b.truncated(5) == from_ints({1, 1, 2, 1, 1}));
  for (int n = 5; n < 10; ++n) CHECK(b[n].is_zero());
  CHECK(q_binomial(7, 0, 6) == Series::one(6));
  CHECK(q_binomial(3, 5, 6).is_zero());
  // Definition cross-check: (q;q)_4 / ((q;q)_2)^2.
  auto num = pochhammer(PochSpec::finite(1, 4), 10);
  auto den = pochhammer(PochSpec::finite(1, 2), 10);
  CHECK((q_binomial(4, 2, 10) * den * den) == num);
}

TEST_CASE("geometric") {
  CHECK(geometric(0, 1, 4) == from_ints({1, 1, 1, 1}));
  auto g = geometric(1, 2, 5);
  CHECK(g[0] == ZPoly(1));
  CHECK(g[2] == ZPoly::monomial(1, 1));
  CHECK(g[4] == ZPoly::monomial(1, 2));
  CHECK(g[1].is_zero());
  CHECK_THROWS_AS(geometric(1, 0, 5), ZeroQPower);
}

TEST_CASE("exact_div_one_minus_z") {
  std::vector<mpz_class> zsq_m1 = {-1, 0, 1};  // z^2 - 1
  auto d = ZPoly(std::move(zsq_m1)).div_one_minus_z();
  std::vector<mpz_class> expect = {-1, -1};    // -(1 + z)
  CHECK(d == ZPoly(std::move(expect)));

  std::vector<mpz_class> bad = {1, 1};  // 1 + z, value 2 at z=1
  CHECK_THROWS_AS(ZPoly(std::move(bad)).div_one_minus_z(), NotDivisible);

  auto a = random_series(10);
  auto masked = a * (Series::one(10) - Series::constant(10, ZPoly::monomial(1, 1)));
  // (1 - z) * a, coefficientwise product in z per q-power:
  Series prod(10);
  ZPoly one_minus_z = ZPoly(1) - ZPoly::monomial(1, 1);
  for (int n = 0; n < 10; ++n) prod.set_coeff(n, a[n] * one_minus_z);
  CHECK(exact_div_one_minus_z(prod) == a);
}

TEST_CASE("theta") {
  CHECK(theta(ThetaKind::kPentagonal, 8) == from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
  CHECK(theta(ThetaKind::kSquare, 5) == from_ints({1, -2, 0, 0, 2}));
  CHECK(theta(ThetaKind::kPentagonal, 1) == Series::one(1));
  CHECK(theta(ThetaKind::kSquare, 1) == Series::one(1));
}

TEST_CASE("pentagonal number theorem at order 200") {
  CHECK(theta(ThetaKind::kPentagonal, 200) ==
        pochhammer(PochSpec::infinite(1), 200));
}

TEST_CASE("Gauss square theta at order 200") {
  auto lhs = pochhammer(PochSpec::infinite(1), 200) *
             invert(pochhammer(PochSpec::infinite(1, 1, -1), 200));
  CHECK(lhs == theta(ThetaKind::kSquare, 200));
}

TEST_CASE("Jacobi triple product, a = b = q") {
  // sum_{n in Z} (-1)^n q^(n^2) = (q;q^2)_inf^2 (q^2;q^2)_inf
  int order = 100;
  Series lhs(order);
  lhs.set_coeff(0, ZPoly(1));
  for (long n = 1; n * n < order; ++n)
    lhs.set_coeff(static_cast<int>(n * n), ZPoly(n % 2 == 0 ? 2 : -2));
  auto odd = pochhammer(PochSpec::infinite(1, 2), order);
  auto even = pochhammer(PochSpec::infinite(2, 2), order);
  CHECK(lhs == (odd * odd * even));
}

TEST_CASE("dz") {
  auto s = Series::monomial(5, 1, 2, 3);  // z^2 q^3
  auto d = dz(s);
  CHECK(d[3] == ZPoly::monomial(2, 2));
  CHECK(dz(from_ints({3, -1, 7})).is_zero());
}

TEST_CASE("dz is a derivation (property)") {
  for (int i = 0; i < 25; ++i) {
    auto a = random_series(10), b = random_series(10);
    CHECK(dz(a * b) == (dz(a) * b + a * dz(b)));
  }
}

TEST_CASE("subst_z") {
  std::vector<mpz_class> p = {-1, 0, 1};
  CHECK(ZPoly(p).eval(1) == 0);
  CHECK(ZPoly(p).eval(-1) == 0);
  std::vector<mpz_class> p2 = {0, 1, 0, -3};
  CHECK(ZPoly(p2).eval(2) == -22);
}

TEST_CASE("subst_z commutes with mul and add (property)") {
  for (int i = 0; i < 25; ++i) {
    auto a = random_series(9), b = random_series(9);
    for (long v : {-1L, 1L, 2L}) {
      CHECK(subst_z(a * b, v) == (subst_z(a, v) * subst_z(b, v)));
      CHECK(subst_z(a + b, v) == (subst_z(a, v) + subst_z(b, v)));
    }
  }
}

TEST_CASE("divisor_series") {
  auto d1 = divisor_series(1, 8);
  CHECK(d1[6] == ZPoly(4));
  CHECK(divisor_series(2, 8)[6] == ZPoly(3));
  auto d7 = divisor_series(7, 7);
  CHECK(d7.is_zero());
}

TEST_CASE("divisor_series equals the Lambert sum") {
  int order = 80;
  Series lambert(order);
  for (int m = 1; m < order; ++m)
    lambert += geometric(0, m, order).q_shifted(m);
  CHECK(divisor_series(1, order) == lambert);
}

TEST_CASE("first_mismatch") {
  auto a = random_series(8);
  CHECK(!first_mismatch(a, a, 0));
  auto x = from_ints({1, 1, 0, 0, 0});
  auto y = from_ints({1, 1, 0, 1, 0});
  auto m = first_mismatch(x, y, 0);
  REQUIRE(m);
  CHECK(m->n == 3);
  CHECK(m->lhs.is_zero());
  CHECK(m->rhs == ZPoly(1));
  CHECK(!first_mismatch(theta(ThetaKind::kPentagonal, 60),
                        pochhammer(PochSpec::infinite(1), 60), 0));
}

TEST_CASE("serialization line format") {
  auto s = q_binomial(4, 2, 6);
  CHECK(to_lines(s) ==
        "0: [1]\n1: [1]\n2: [2]\n3: [1]\n4: [1]\n5: []\n");
  auto zq = Series::monomial(2, -3, 2, 1);
  CHECK(to_lines(zq) == "0: []\n1: [0, 0, -3]\n");
}
