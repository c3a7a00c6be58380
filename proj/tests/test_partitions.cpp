#include "doctest.h"

#include "qps/partitions.hpp"
#include "qps/series.hpp"

using namespace qps;

namespace {

ZPoly zp(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> c;
  for (long v : coeffs) c.emplace_back(v);
  return ZPoly(std::move(c));
}

}  // namespace

TEST_CASE("enum_distinct") {
  auto p6 = enum_distinct(6);
  REQUIRE(p6.size() == 4);
  CHECK(p6[0] == DistinctPartition{1, 2, 3});
  CHECK(p6[1] == DistinctPartition{1, 5});
  CHECK(p6[2] == DistinctPartition{2, 4});
  CHECK(p6[3] == DistinctPartition{6});

  CHECK(enum_distinct(1) == std::vector<DistinctPartition>{{1}});
  auto p0 = enum_distinct(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].empty());
}

TEST_CASE("distinct partition counts match (-q;q)_inf") {
  auto gen = pochhammer(PochSpec::infinite(1, 1, -1), 61);
  for (int n = 0; n <= 60; ++n) {
    long count = 0;
    for_each_distinct(n, [&](const DistinctPartition&) { ++count; });
    CHECK(gen[n] == ZPoly(count));
  }
}

TEST_CASE("s_k") {
  DistinctPartition p{1, 2, 3};
  CHECK(s_k(p, 2) == 2);
  CHECK(s_k({5}, 2) == 0);
  CHECK(s_k(p, 0) == 0);
  for (int i = 1; i < 3; ++i)
    for (int j = i + 1; j <= 3; ++j) CHECK(s_k(p, i) < s_k(p, j));
}

TEST_CASE("stat_poly examples") {
  CHECK(stat_poly(3, StatVariant::ffw_kz(2)) == zp({-1, 0, 1}));
  CHECK(stat_poly(6, StatVariant::ffw_kz(1)) == zp({0, 0, 1, 0, 0, 0, -1}));
  CHECK(stat_poly(5, StatVariant::tails(2)) == zp({2, 1, 1}));
  CHECK(stat_poly(3, StatVariant::power(1)) == zp({0, 1, 0, -3}));
  CHECK(stat_poly(4, StatVariant::parity(Parity::kOdd, Sign::kSharpMinusOne)) ==
        zp({-1}));
}

TEST_CASE("ffw_k examples") {
  CHECK(ffw_k(6, 1) == -4);
  CHECK(ffw_k(6, 2) == 7);
  CHECK(ffw_k(6, 3) == -3);
  CHECK(ffw_k(0, 2) == 0);
}

TEST_CASE("FFW equals the divisor count for n <= 100") {
  auto d = divisor_table(100);
  for (int n = 1; n <= 100; ++n) {
    auto v = stat_poly(n, StatVariant::ffw_kz(1)).z_ddz().eval(1);
    CHECK(v == -d[n]);
  }
}

TEST_CASE("Euler pentagonal signs by enumeration for n <= 60") {
  for (int n = 1; n <= 60; ++n) {
    mpz_class acc = 0;
    for_each_distinct(n, [&](const DistinctPartition& p) {
      acc += (p.size() % 2 == 1) ? 1 : -1;
    });
    auto j = pentagonal_index(n);
    mpz_class expect = 0;
    if (j) expect = (*j % 2 == 0) ? -1 : 1;  // (-1)^(j-1)
    CHECK(acc == expect);
  }
}

TEST_CASE("closed_form") {
  CHECK(closed_form(6, ClosedForm::kFfw2) == 7);
  CHECK(closed_form(6, ClosedForm::kFfw3) == -3);
  CHECK(closed_form(4, ClosedForm::kThm14) == -1);
  CHECK(closed_form(5, ClosedForm::kThm37) == 0);
}

TEST_CASE("closed forms match enumeration for n <= 60") {
  for (int n = 1; n <= 60; ++n) {
    CHECK(closed_form(n, ClosedForm::kFfw2) == ffw_k(n, 2));
    CHECK(closed_form(n, ClosedForm::kFfw3) == ffw_k(n, 3));
  }
}

TEST_CASE("thm14 closed form matches parity statistic for n <= 200") {
  auto table = parity_sharp_table(200, Parity::kEven);
  for (int n = 1; n <= 200; ++n)
    CHECK(closed_form(n, ClosedForm::kThm14) == table[n]);
}

TEST_CASE("parity DP agrees with enumeration for n <= 60") {
  for (auto par : {Parity::kEven, Parity::kOdd}) {
    auto table = parity_sharp_table(60, par);
    for (int n = 1; n <= 60; ++n)
      CHECK(stat_poly(n, StatVariant::parity(par, Sign::kSharp)) ==
            ZPoly(table[n]));
  }
}

TEST_CASE("pentagonal_index") {
  CHECK(pentagonal_index(5) == 2);
  CHECK(pentagonal_index(7) == -2);
  CHECK(!pentagonal_index(6));
  CHECK(pentagonal_index(1) == 1);
  CHECK(pentagonal_index(2) == -1);
}

TEST_CASE("divisor_count and divisor_table") {
  CHECK(divisor_count(6, 1) == 4);
  CHECK(divisor_count(6, 2) == 3);
  CHECK(divisor_count(1, 2) == 0);
  for (long k = 1; k <= 4; ++k) {
    auto t = divisor_table(200, k);
    for (long n = 1; n <= 200; ++n) CHECK(t[n] == divisor_count(n, k));
  }
}

TEST_CASE("parts_lt_count") {
  CHECK(parts_lt_count(4, 3) == 3);
  CHECK(parts_lt_count(0, 5) == 1);
  CHECK(parts_lt_count(5, 2) == 1);
}

TEST_CASE("largest_sum_fixed_len") {
  CHECK(largest_sum_fixed_len(6, 2) == 9);
  CHECK(largest_sum_fixed_len(6, 1) == 6);
  CHECK(largest_sum_fixed_len(2, 2) == 0);
}

TEST_CASE("DIFF/TAILS consistency for n <= 40, k <= 4") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 40; ++n)
      CHECK(stat_poly(n, StatVariant::tails(k)).eval(1) ==
            stat_poly(n, StatVariant::diff(k)).eval(0));
}

TEST_CASE("nested sum equals shifted q-binomial (Lemma oracle)") {
  // sum over 0 < n_1 < ... < n_k <= n of q^(n_1+...+n_k)
  for (int n = 1; n <= 12; ++n)
    for (int k = 1; k <= 4; ++k) {
      int order = 80;
      Series brute(order);
      std::vector<int> pick;
      std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(pick.size()) == k) {
          int sum = 0;
          for (int v : pick) sum += v;
          if (sum < order)
            brute.set_coeff(sum, brute[sum] + ZPoly(1));
          return;
        }
        for (int v = next; v <= n; ++v) {
          pick.push_back(v);
          rec(v + 1);
          pick.pop_back();
        }
      };
      rec(1);
      CHECK(brute == q_binomial(n, k, order).q_shifted(k * (k + 1) / 2));
    }
}
