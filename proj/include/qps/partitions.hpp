#pragma once

#include "qps/zpoly.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qps {

/// Strictly increasing sequence of positive parts.
using DistinctPartition = std::vector<int>;

/// Calls f once for every partition of n into distinct parts, parts
/// ascending, in lexicographic order of the ascending part lists.
/// n = 0 yields the single empty partition.
void for_each_distinct(int n, const std::function<void(const DistinctPartition&)>& f);

/// Materialized enumeration (small n only).
std::vector<DistinctPartition> enum_distinct(int n);

/// k-th smallest part; 0 when k = 0 or the partition has fewer than k parts.
int s_k(const DistinctPartition& p, int k);

enum class Sign { kSharp, kSharpMinusOne };  // (-1)^#(pi) vs (-1)^(#(pi)-1)
enum class Parity { kEven, kOdd };

/// Weighted partition statistic selector.
struct StatVariant {
  enum class Tag { kFfwKz, kAglZ, kFfwC, kPower, kTails, kDiff, kParity };
  Tag tag;
  int k = 1;       // kFfwKz, kTails, kDiff
  int m = 0;       // kPower
  Parity par = Parity::kEven;          // kParity
  Sign sign = Sign::kSharp;            // kParity

  /// (-1)^# z^(s_k)
  static StatVariant ffw_kz(int k) { return {Tag::kFfwKz, k}; }
  /// (-1)^(#-1) (1 + z + ... + z^(s-1))
  static StatVariant agl_z() { return {Tag::kAglZ}; }
  /// (-c)^# s, c as the auxiliary variable
  static StatVariant ffw_c() { return {Tag::kFfwC}; }
  /// (-1)^# s^m z^s
  static StatVariant power(int m) {
    StatVariant v{Tag::kPower};
    v.m = m;
    return v;
  }
  /// # >= k: (-1)^# (1 + z + ... + z^(s_k - s_(k-1) - 1))
  static StatVariant tails(int k) { return {Tag::kTails, k}; }
  /// # >= k: (-1)^# (s_k - s_(k-1))
  static StatVariant diff(int k) { return {Tag::kDiff, k}; }
  /// s(pi) of the given parity, weight per sign convention
  static StatVariant parity(Parity p, Sign s) {
    StatVariant v{Tag::kParity};
    v.par = p;
    v.sign = s;
    return v;
  }
};

/// Exact weighted sum over all distinct partitions of n as a polynomial in
/// the auxiliary variable.
ZPoly stat_poly(int n, const StatVariant& v);

/// FFW_k(n) = sum over D(n) of (-1)^# s_k(pi); 0 for n = 0.
mpz_class ffw_k(int n, int k);

enum class ClosedForm { kFfw2, kFfw3, kThm14, kThm37 };

/// Closed-form evaluations of FFW_2, FFW_3 and the two parity-statistic
/// case analyses (square/pentagonal classification).
mpz_class closed_form(int n, ClosedForm which);

/// The nonzero j with n = j(3j-1)/2, if any.
std::optional<long> pentagonal_index(long n);

/// Number of divisors of n that are >= k_min.
long divisor_count(long n, long k_min = 1);

/// d_{>= k_min}(n) for all n <= n_max; index 0 unused.
std::vector<long> divisor_table(long n_max, long k_min = 1);

/// Partitions of n into (repeatable) parts from {1, ..., k-1}.
mpz_class parts_lt_count(int n, int k);

/// Sum of the largest part over distinct partitions of n with exactly
/// `len` parts.
mpz_class largest_sum_fixed_len(int n, int len);

/// Sum over D(n) with smallest part of parity `par` of (-1)^#(pi),
/// computed by a quadratic DP rather than enumeration (usable for large n).
std::vector<mpz_class> parity_sharp_table(int n_max, Parity par);

}  // namespace qps
