#include "qps/verify.hpp"

#include "qps/partitions.hpp"

#include "doctest.h"

#include <set>

using namespace qps;
using namespace qps::verify;

namespace {

const SideBuilder& side_of(const std::string& id, const std::string& case_label,
                           const std::string& side_label) {
  const auto& check = find_check(id);
  for (const auto& cs : check.cases) {
    if (cs.label != case_label) continue;
    for (const auto& s : cs.sides)
      if (s.label == side_label) return s;
  }
  throw std::runtime_error("no side " + side_label + " in " + id);
}

}  // namespace

TEST_CASE("registry: size, uniqueness, shape") {
  const auto& reg = registry();
  CHECK(reg.size() >= 30);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK(!c.cases.empty());
    for (const auto& cs : c.cases) CHECK(cs.sides.size() >= 2);
    CHECK(c.compare_from >= 0);
  }
  for (const char* id :
       {"euler_pent", "gauss_sq", "jtp_qq", "lemma21", "lemma22", "lemma23",
        "uchimura", "ffw_eq_d", "thm11", "thm13", "gen1", "gen2", "alladi",
        "alladi_printed", "thm14", "thm34_printed", "ztails", "minus",
        "recursive", "thm44_corrected", "thm44_printed"})
    CHECK_NOTHROW(find_check(id));
  CHECK_THROWS_AS(find_check("nope"), UnknownIdentity);
}

TEST_CASE("run: basic reports") {
  Report r = run("euler_pent", 60);
  CHECK(r.pass);
  CHECK(!r.mismatch);
  CHECK(r.meets_expectation());

  r = run("ffw_eq_d", 7);
  CHECK(r.pass);
  // coefficient of q^6 is 4 on both sides
  CHECK(divisor_series(1, 7)[6].eval(0) == 4);
  CHECK(ffw_k(6, 1) == -4);

  CHECK_THROWS_AS(run("euler_pent", 1), std::invalid_argument);
}

TEST_CASE("run: cor12_ffw2 against enumeration up to 100") {
  Report r = run("cor12_ffw2", 100);
  CHECK(r.pass);
}

TEST_CASE("every entry meets its expectation at order 25") {
  for (const Report& r : run_all(25)) {
    INFO(r.id);
    CHECK(r.meets_expectation());
    if (!r.pass) {
      REQUIRE(r.mismatch);
      CHECK(r.mismatch->n >= 1);
      CHECK(r.mismatch->lhs != r.mismatch->rhs);
    }
  }
}

TEST_CASE("audit variants record concrete mismatches") {
  Report r = run("alladi_printed", 40);
  CHECK(!r.pass);
  REQUIRE(r.mismatch);
  CHECK(r.mismatch->n == 1);  // sides differ by a global sign from q^1 on

  r = run("thm11_proof_range", 40);
  CHECK(!r.pass);
  REQUIRE(r.mismatch);
  CHECK(r.mismatch->n == 1);  // already the k = 1 case disagrees at q^1

  r = run("thm34_printed", 40);
  CHECK(!r.pass);
  REQUIRE(r.mismatch);

  r = run("thm44_printed", 40);
  CHECK(!r.pass);
  REQUIRE(r.mismatch);
}

TEST_CASE("determinism and the prefix property") {
  Report a = run("uchimura", 30);
  Report b = run("uchimura", 30);
  CHECK(a.pass == b.pass);
  CHECK(a.pass);
  CHECK(run("uchimura", 15).pass);

  Report c = run("thm34_printed", 40);
  Report d = run("thm34_printed", 40);
  REQUIRE(c.mismatch);
  REQUIRE(d.mismatch);
  CHECK(c.mismatch->n == d.mismatch->n);
  CHECK(c.mismatch->lhs == d.mismatch->lhs);
}

TEST_CASE("degenerate window at order 2 is well-defined") {
  for (const Report& r : run_all(2)) {
    CHECK(r.order == 2);
    if (r.mismatch) CHECK(r.mismatch->n == 1);
  }
}

TEST_CASE("gen1, gen2 and thm11 agree at z = 1") {
  // z d/dz of the FFW_k(z, n) generating functions at z = 1 recovers the
  // FFW_k(n) generating function of the divisor form
  const int N = 50;
  for (int k = 1; k <= 4; ++k) {
    std::string lbl = "k=" + std::to_string(k);
    Series g1 = subst_z(dz(side_of("gen1", lbl, "formula").build(N)), 1);
    Series g2 = subst_z(dz(side_of("gen2", lbl, "formula").build(N)), 1);
    Series t11 = side_of("thm11", lbl, "divisor_form").build(N);
    CHECK(!first_mismatch(g1, g2, 1));
    CHECK(!first_mismatch(g1, t11, 1));
  }
}

TEST_CASE("coro39 is the m = 1 weighted moment") {
  const int N = 35;
  Series a = side_of("coro39", "", "tail_sum").build(N);
  Series b = side_of("m_mc", "m=1", "definition").build(N);
  CHECK(!first_mismatch(a, b, 1));
}

TEST_CASE("ffw_series_values matches enumeration") {
  for (int k = 2; k <= 4; ++k) {
    auto v = ffw_series_values(k, 60);
    for (int n = 1; n <= 60; ++n) {
      INFO("k=", k, " n=", n);
      CHECK(v[n] == ffw_k(n, k));
    }
  }
}

TEST_CASE("asym_table: structure and exactness") {
  auto rows = asym_table(2, 100);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 10);
  CHECK(rows[1].n == 25);
  CHECK(rows[2].n == 50);
  CHECK(rows[3].n == 100);
  for (const auto& row : rows) {
    CHECK(row.value == ffw_k(static_cast<int>(row.n), 2));
    CHECK(row.ratio == doctest::Approx(row.value.get_d() / row.main_term));
  }
  auto rows3 = asym_table(3, 400);
  CHECK(rows3[3].value == ffw_series_values(3, 400)[400]);
  CHECK_THROWS_AS(asym_table(1, 1000), std::invalid_argument);
  CHECK_THROWS_AS(asym_table(2, 50), std::invalid_argument);
}

TEST_CASE("report serialization") {
  Report r = run("alladi_printed", 10);
  std::string js = report_to_json(r);
  CHECK(js.find("\"status\":\"fail\"") != std::string::npos);
  CHECK(js.find("\"expected\":\"fail_as_printed\"") != std::string::npos);
  CHECK(js.find("\"first_mismatch\"") != std::string::npos);

  Report ok = run("euler_pent", 10);
  std::string txt = report_to_text(ok);
  CHECK(txt.find("euler_pent") == 0);
  CHECK(txt.find("pass") != std::string::npos);

  std::string agg = reports_to_json("classical", 10, {ok});
  CHECK(agg.find("\"suite\": \"classical\"") != std::string::npos);
  CHECK(agg.find("\"order\": 10") != std::string::npos);
}

TEST_CASE("suite names round-trip") {
  for (Suite s : {Suite::kClassical, Suite::kLemmas, Suite::kCore,
                  Suite::kGeneral, Suite::kTails})
    CHECK(suite_from_name(suite_name(s)) == s);
  CHECK(!suite_from_name("all"));
}
