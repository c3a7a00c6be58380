#include "qps/verify.hpp"

#include "qps/partitions.hpp"

#include "json.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace qps::verify {

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::kClassical: return "classical";
    case Suite::kLemmas: return "lemmas";
    case Suite::kCore: return "core";
    case Suite::kGeneral: return "general";
    case Suite::kTails: return "tails";
  }
  return "?";
}

std::optional<Suite> suite_from_name(const std::string& name) {
  for (Suite s : {Suite::kClassical, Suite::kLemmas, Suite::kCore,
                  Suite::kGeneral, Suite::kTails})
    if (name == suite_name(s)) return s;
  return std::nullopt;
}

const IdentityCheck& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UnknownIdentity("no identity named '" + id + "'");
}

Report run(const IdentityCheck& check, int order) {
  if (order < 2) throw std::invalid_argument("order must be >= 2");
  auto t0 = std::chrono::steady_clock::now();
  Report r{check.id, check.paper_ref, order, true, check.expectation, {}, 0};
  for (const auto& cs : check.cases) {
    if (r.mismatch) break;
    std::vector<Series> built;
    built.reserve(cs.sides.size());
    for (const auto& s : cs.sides) built.push_back(s.build(order));
    for (size_t i = 0; i + 1 < built.size() && !r.mismatch; ++i)
      for (size_t j = i + 1; j < built.size(); ++j) {
        auto m = first_mismatch(built[i], built[j], check.compare_from);
        if (m) {
          auto tag = [&](const std::string& label) {
            return cs.label.empty() ? label : label + " [" + cs.label + "]";
          };
          r.mismatch = ReportMismatch{m->n, tag(cs.sides[i].label),
                                      tag(cs.sides[j].label), m->lhs, m->rhs};
          r.pass = false;
          break;
        }
      }
  }
  auto t1 = std::chrono::steady_clock::now();
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return r;
}

Report run(const std::string& id, int order) { return run(find_check(id), order); }

std::vector<Report> run_suite(Suite suite, int order) {
  std::vector<Report> out;
  for (const auto& c : registry())
    if (c.suite == suite) out.push_back(run(c, order));
  return out;
}

std::vector<Report> run_all(int order) {
  std::vector<Report> out;
  for (const auto& c : registry()) out.push_back(run(c, order));
  return out;
}

namespace {

std::vector<std::string> poly_strings(const ZPoly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

nlohmann::json report_json(const Report& r) {
  nlohmann::json j{
      {"id", r.id},
      {"paper_ref", r.paper_ref},
      {"status", r.pass ? "pass" : "fail"},
      {"expected",
       r.expectation == Expectation::kPass ? "pass" : "fail_as_printed"},
      {"elapsed_ms", r.elapsed_ms},
  };
  if (r.mismatch) {
    j["first_mismatch"] = nlohmann::json{
        {"n", r.mismatch->n},
        {"sides", {r.mismatch->side_a, r.mismatch->side_b}},
        {"lhs", poly_strings(r.mismatch->lhs)},
        {"rhs", poly_strings(r.mismatch->rhs)},
    };
  } else {
    j["first_mismatch"] = nullptr;
  }
  return j;
}

}  // namespace

std::string report_to_json(const Report& r) { return report_json(r).dump(); }

std::string reports_to_json(const std::string& suite, int order,
                            const std::vector<Report>& rs) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : rs) results.push_back(report_json(r));
  return nlohmann::json{{"suite", suite}, {"order", order}, {"results", results}}
      .dump(2);
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << r.id << "\t" << (r.pass ? "pass" : "fail") << "\t"
     << (r.meets_expectation() ? "expected" : "UNEXPECTED");
  if (r.mismatch)
    os << "\tfirst mismatch at q^" << r.mismatch->n << ": "
       << r.mismatch->side_a << " = " << r.mismatch->lhs.to_string() << " vs "
       << r.mismatch->side_b << " = " << r.mismatch->rhs.to_string();
  return os.str();
}

std::vector<mpz_class> ffw_series_values(int k, long n_max) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  int order = static_cast<int>(n_max) + 1;
  // -sum_{i=0}^{k-1} (-1)^i q^(i(i+1)/2)/(q;q)_i (D(q) - sum_{n<k-i} q^n/(1-q^n))
  Series acc(order);
  Series d = divisor_series(1, order);
  for (int i = 0; i < k; ++i) {
    Series inner = d;
    for (int n = 1; n <= k - i - 1; ++n)
      inner -= geometric(0, n, order).q_shifted(n);
    inner = inner.q_shifted(i * (i + 1) / 2);
    for (int j = 1; j <= i; ++j) inner.apply_inverse_factor(1, 0, j);
    if (i % 2 == 0)
      acc -= inner;
    else
      acc += inner;
  }
  std::vector<mpz_class> out(n_max + 1, 0);
  for (long n = 1; n <= n_max; ++n)
    out[n] = acc[static_cast<int>(n)].eval(0);
  return out;
}

std::vector<AsymRow> asym_table(int k, long n_max) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (n_max < 100) throw std::invalid_argument("n_max must be >= 100");
  std::vector<long> samples = {n_max / 10, n_max / 4, n_max / 2, n_max};

  std::vector<mpz_class> values(n_max + 1);
  if (k == 2) {
    auto d = divisor_table(n_max);
    mpz_class cumulative = 0;  // sum_{j < n} d(j)
    for (long n = 1; n <= n_max; ++n) {
      values[n] = cumulative - d[n] + 1;
      cumulative += d[n];
    }
  } else {
    values = ffw_series_values(k, n_max);
  }

  double fact = 1;
  for (int i = 2; i <= k - 1; ++i) fact *= i;
  double sign = (k % 2 == 0) ? 1.0 : -1.0;

  std::vector<AsymRow> rows;
  for (long n : samples) {
    double main = sign * std::pow(static_cast<double>(n), k - 1) *
                  std::log(static_cast<double>(n)) / (fact * fact);
    double v = values[n].get_d();
    rows.push_back(AsymRow{n, values[n], main, v / main});
  }
  return rows;
}

}  // namespace qps::verify
