// Python bindings for the main operations: series expansion, partition
// statistics, the identity registry, and the asymptotic table.

#include "qps/partitions.hpp"
#include "qps/qexpr.hpp"
#include "qps/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qps;
namespace vf = qps::verify;

namespace {

py::int_ big(const mpz_class& v) { return py::int_(py::str(v.get_str())); }

py::list poly_to_list(const ZPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(big(c));
  return out;
}

StatVariant variant_from(const std::string& name, int k, int m) {
  if (name == "ffw_kz") return StatVariant::ffw_kz(k);
  if (name == "agl_z") return StatVariant::agl_z();
  if (name == "ffw_c") return StatVariant::ffw_c();
  if (name == "power") return StatVariant::power(m);
  if (name == "tails") return StatVariant::tails(k);
  if (name == "diff") return StatVariant::diff(k);
  throw std::invalid_argument("unknown statistic variant: " + name);
}

}  // namespace

PYBIND11_MODULE(_qps, mod) {
  mod.doc() = "exact truncated q-series engine and partition statistics";

  mod.def(
      "expand",
      [](const std::string& expr, int order) {
        return to_lines(qexpr::eval(qexpr::parse(expr), order));
      },
      py::arg("expr"), py::arg("order"),
      "parse a q-expression and return its expansion, one line per q-power");

  mod.def(
      "expand_coeffs",
      [](const std::string& expr, int order) {
        Series s = qexpr::eval(qexpr::parse(expr), order);
        py::list out;
        for (int n = 0; n < s.order(); ++n) out.append(poly_to_list(s[n]));
        return out;
      },
      py::arg("expr"), py::arg("order"),
      "expansion as a list (per q-power) of dense z-coefficient lists");

  mod.def(
      "print_expr",
      [](const std::string& expr) { return qexpr::print_expr(qexpr::parse(expr)); },
      py::arg("expr"), "canonical form of a parsed q-expression");

  mod.def(
      "ffw",
      [](int n, int k) { return big(ffw_k(n, k)); },
      py::arg("n"), py::arg("k") = 1,
      "FFW_k(n) by enumeration over distinct partitions");

  mod.def(
      "stat_poly",
      [](int n, const std::string& variant, int k, int m) {
        return poly_to_list(stat_poly(n, variant_from(variant, k, m)));
      },
      py::arg("n"), py::arg("variant"), py::arg("k") = 1, py::arg("m") = 0,
      "weighted partition statistic as dense coefficients in z (or c)");

  mod.def(
      "distinct_partitions",
      [](int n) { return enum_distinct(n); }, py::arg("n"),
      "all partitions of n into distinct parts, ascending part lists");

  mod.def(
      "divisor_count",
      [](long n, long k_min) { return divisor_count(n, k_min); },
      py::arg("n"), py::arg("k_min") = 1);

  mod.def("registry_ids", [] {
    std::vector<std::string> ids;
    for (const auto& c : vf::registry()) ids.push_back(c.id);
    return ids;
  });

  mod.def(
      "verify",
      [](const std::string& id, int order) {
        vf::Report r = vf::run(id, order);
        py::dict d;
        d["id"] = r.id;
        d["pass"] = r.pass;
        d["meets_expectation"] = r.meets_expectation();
        if (r.mismatch) {
          py::dict m;
          m["n"] = r.mismatch->n;
          m["sides"] = py::make_tuple(r.mismatch->side_a, r.mismatch->side_b);
          m["lhs"] = poly_to_list(r.mismatch->lhs);
          m["rhs"] = poly_to_list(r.mismatch->rhs);
          d["first_mismatch"] = m;
        } else {
          d["first_mismatch"] = py::none();
        }
        return d;
      },
      py::arg("id"), py::arg("order") = 40,
      "run one identity check and return its report");

  mod.def(
      "verify_suite",
      [](const std::string& suite, int order) {
        auto s = vf::suite_from_name(suite);
        if (!s) throw std::invalid_argument("unknown suite: " + suite);
        py::list out;
        for (const auto& r : vf::run_suite(*s, order)) {
          py::dict d;
          d["id"] = r.id;
          d["pass"] = r.pass;
          d["meets_expectation"] = r.meets_expectation();
          out.append(d);
        }
        return out;
      },
      py::arg("suite"), py::arg("order") = 40);

  mod.def(
      "asym_table",
      [](int k, long n_max) {
        py::list out;
        for (const auto& row : vf::asym_table(k, n_max)) {
          py::dict d;
          d["n"] = row.n;
          d["value"] = big(row.value);
          d["main_term"] = row.main_term;
          d["ratio"] = row.ratio;
          out.append(d);
        }
        return out;
      },
      py::arg("k"), py::arg("n_max"));

  py::register_exception<qexpr::SyntaxError>(mod, "QSyntaxError");
  py::register_exception<vf::UnknownIdentity>(mod, "UnknownIdentity");
}
