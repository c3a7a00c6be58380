#pragma once

#include "qps/series.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qps::verify {

struct UnknownIdentity : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Expectation { kPass, kFailAsPrinted };

enum class Suite { kClassical, kLemmas, kCore, kGeneral, kTails };

const char* suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);

/// One labeled series construction, a function of the truncation order.
struct SideBuilder {
  std::string label;
  std::function<Series(int)> build;
};

/// One parameter instantiation of an identity (e.g. "k=3"); all sides must
/// agree coefficientwise from compare_from on.
struct CheckCase {
  std::string label;  // empty for unparametrized identities
  std::vector<SideBuilder> sides;
};

struct IdentityCheck {
  std::string id;
  std::string paper_ref;
  Suite suite;
  Expectation expectation = Expectation::kPass;
  int compare_from = 1;
  std::vector<CheckCase> cases;
};

struct ReportMismatch {
  int n;
  std::string side_a, side_b;  // labels, case label included
  ZPoly lhs, rhs;
};

struct Report {
  std::string id;
  std::string paper_ref;
  int order;
  bool pass;
  Expectation expectation;
  std::optional<ReportMismatch> mismatch;
  long elapsed_ms;

  /// PASS entries must pass; FAIL_AS_PRINTED entries must fail with a
  /// recorded mismatch.
  bool meets_expectation() const {
    return expectation == Expectation::kPass ? pass : !pass;
  }
};

/// Every identity of the catalogue; order is fixed and deterministic.
const std::vector<IdentityCheck>& registry();

const IdentityCheck& find_check(const std::string& id);

Report run(const IdentityCheck& check, int order);
Report run(const std::string& id, int order);

std::vector<Report> run_suite(Suite suite, int order);
std::vector<Report> run_all(int order);

std::string report_to_json(const Report& r);
std::string reports_to_json(const std::string& suite, int order,
                            const std::vector<Report>& rs);
std::string report_to_text(const Report& r);

struct AsymRow {
  long n;
  mpz_class value;     // exact FFW_k(n)
  double main_term;    // (-1)^k n^(k-1) ln n / ((k-1)!)^2
  double ratio;        // value / main_term
};

/// Exact FFW_k values against the leading asymptotic term, sampled at
/// n_max/10, n_max/4, n_max/2, n_max. k = 2 uses the summatory divisor
/// closed form; k >= 3 extracts generating-function coefficients.
std::vector<AsymRow> asym_table(int k, long n_max);

/// Exact FFW_k(n) for all n <= n_max via the divisor-sum form of the
/// generating function (no enumeration).
std::vector<mpz_class> ffw_series_values(int k, long n_max);

}  // namespace qps::verify
