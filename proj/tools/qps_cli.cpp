#include "qps/partitions.hpp"
#include "qps/qexpr.hpp"
#include "qps/verify.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>

namespace {

using namespace qps;
namespace vf = qps::verify;

int print_reports(const std::string& scope, int order,
                  const std::vector<vf::Report>& reports,
                  const std::string& format) {
  if (format == "json") {
    std::cout << vf::reports_to_json(scope, order, reports) << "\n";
  } else {
    std::cout << "id\tstatus\texpectation\tdetail\n";
    for (const auto& r : reports) std::cout << vf::report_to_text(r) << "\n";
  }
  for (const auto& r : reports)
    if (!r.meets_expectation()) return 1;
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& id, int order,
               const std::string& format) {
  if (!suite.empty() && !id.empty()) {
    std::cerr << "error: --suite and --id are mutually exclusive\n";
    return 2;
  }
  std::vector<vf::Report> reports;
  std::string scope;
  if (!id.empty()) {
    reports.push_back(vf::run(id, order));
    scope = id;
  } else if (suite.empty() || suite == "all") {
    reports = vf::run_all(order);
    scope = "all";
  } else {
    auto s = vf::suite_from_name(suite);
    if (!s) {
      std::cerr << "error: unknown suite '" << suite
                << "' (classical, lemmas, core, general, tails, all)\n";
      return 2;
    }
    reports = vf::run_suite(*s, order);
    scope = suite;
  }
  return print_reports(scope, order, reports, format);
}

int cmd_compute_ffw(int k, int n_max, bool have_z, long z) {
  if (have_z) {
    std::cout << "n\tvalue\n";
    for (int n = 1; n <= n_max; ++n)
      std::cout << n << "\t"
                << stat_poly(n, StatVariant::ffw_kz(k)).z_ddz().eval(z).get_str()
                << "\n";
  } else {
    std::cout << "n\tpoly\n";
    for (int n = 1; n <= n_max; ++n)
      std::cout << n << "\t" << stat_poly(n, StatVariant::ffw_kz(k)).to_string()
                << "\n";
  }
  return 0;
}

int cmd_expand(const std::string& text, int order) {
  auto ast = qexpr::parse(text);
  std::cout << to_lines(qexpr::eval(ast, order));
  return 0;
}

int cmd_audit(const std::string& id, int order) {
  vf::Report r = vf::run(id, order);
  std::cout << vf::report_to_text(r) << "\n";
  return r.meets_expectation() ? 0 : 1;
}

int cmd_asym(int k, long n_max) {
  std::cout << "n\tvalue\tmain_term\tratio\n";
  for (const auto& row : vf::asym_table(k, n_max)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e\t%.6f", row.main_term, row.ratio);
    std::cout << row.n << "\t" << row.value.get_str() << "\t" << buf << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact truncated q-series engine and identity verifier"};
  app.require_subcommand(1);

  std::string suite, id, format = "tsv", expr_text;
  int order = 40, k = 1, n_max = 1;
  long z_value = 0;

  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("--suite", suite, "classical|lemmas|core|general|tails|all");
  verify->add_option("--id", id, "single registry entry");
  verify->add_option("--order", order, "truncation order (default 40)");
  verify->add_option("--format", format)
      ->check(CLI::IsMember({"tsv", "json"}));

  auto* compute = app.add_subcommand("compute", "statistic tables");
  auto* ffw = compute->add_subcommand("ffw", "FFW_k values or polynomials");
  ffw->add_option("--k", k, "which smallest part")->required();
  ffw->add_option("--n-max", n_max, "largest n")->required();
  auto* zopt = ffw->add_option("--z", z_value, "evaluate the weight at z");
  compute->require_subcommand(1);

  auto* expand = app.add_subcommand("expand", "expand a q-expression");
  expand->add_option("expr", expr_text, "expression text")->required();
  expand->add_option("--order", order, "truncation order")->required();

  auto* audit = app.add_subcommand("audit", "run one entry, print mismatch");
  audit->add_option("--id", id)->required();
  audit->add_option("--order", order, "truncation order (default 40)");

  auto* asym = app.add_subcommand("asym", "asymptotic ratio table");
  asym->add_option("--k", k)->required();
  asym->add_option("--n-max", n_max)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);  // prints the diagnostic to stderr
    return 2;
  }

  try {
    if (verify->parsed() || audit->parsed()) {
      if (order < 2) {
        std::cerr << "error: --order must be >= 2\n";
        return 2;
      }
      return verify->parsed() ? cmd_verify(suite, id, order, format)
                              : cmd_audit(id, order);
    }
    if (compute->parsed()) {
      if (k < 1 || n_max < 1) {
        std::cerr << "error: --k and --n-max must be >= 1\n";
        return 2;
      }
      return cmd_compute_ffw(k, n_max, zopt->count() > 0, z_value);
    }
    if (expand->parsed()) {
      if (order < 1) {
        std::cerr << "error: --order must be >= 1\n";
        return 2;
      }
      return cmd_expand(expr_text, order);
    }
    if (asym->parsed()) return cmd_asym(k, n_max);
  } catch (const qps::qexpr::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qps::qexpr::OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qps::qexpr::UnknownName& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qps::verify::UnknownIdentity& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
