// Python bindings for the exact Dedekind-symbol machinery. Rationals cross
// the boundary as fractions.Fraction, big integers as python ints; both are
// constructed from exact decimal strings.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dedsym/apostol.hpp"
#include "dedsym/arith.hpp"
#include "dedsym/bernoulli.hpp"
#include "dedsym/hecke.hpp"
#include "dedsym/qseries.hpp"
#include "dedsym/verify.hpp"

namespace py = pybind11;

namespace {

py::object to_py_int(const dedsym::Integer& z) {
  return py::module_::import("builtins").attr("int")(py::str(dedsym::to_string(z)));
}

py::object to_py_fraction(const dedsym::Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(py::str(dedsym::to_string(r)));
}

dedsym::Rational rational_from_py(const py::object& obj) {
  const std::string text = py::str(obj);  // Fraction and int both print as p/q or p
  dedsym::Rational r;
  if (r.set_str(text, 10) != 0) {
    throw py::value_error("cannot parse '" + text + "' as an exact rational");
  }
  r.canonicalize();
  return r;
}

py::list series_coeffs(const dedsym::QSeries& s) {
  py::list out;
  for (int i = 0; i <= s.truncation(); ++i) out.append(to_py_int(s.coeff(i)));
  return out;
}

py::dict result_to_dict(const dedsym::CheckResult& r) {
  py::dict d;
  d["check_name"] = r.check_name;
  d["parameters"] = r.parameters;
  d["passed"] = r.passed;
  if (r.witness) d["witness"] = *r.witness;
  return d;
}

}  // namespace

PYBIND11_MODULE(_dedsym, m) {
  m.doc() = "exact weighted Dedekind symbols, Hecke operators and eigenform coefficients";

  m.def(
      "bernoulli_number",
      [](unsigned n) { return to_py_fraction(dedsym::bernoulli_number(n)); }, py::arg("m"),
      "Bernoulli number B_m with B_1 = -1/2");
  m.def(
      "bernoulli_poly",
      [](unsigned n, const py::object& x) {
        return to_py_fraction(dedsym::bernoulli_poly(n, rational_from_py(x)));
      },
      py::arg("m"), py::arg("x"));
  m.def(
      "periodic_bernoulli",
      [](unsigned n, const py::object& x) {
        return to_py_fraction(dedsym::periodic_bernoulli(n, rational_from_py(x)));
      },
      py::arg("m"), py::arg("x"), "period-1 extension of B_m, m >= 2");
  m.def(
      "sigma", [](unsigned k, std::int64_t n) { return to_py_int(dedsym::sigma(k, n)); },
      py::arg("k"), py::arg("n"), "sum of k-th powers of divisors");
  m.def(
      "apostol_sum",
      [](unsigned mm, std::int64_t k, std::int64_t h) {
        return to_py_fraction(dedsym::apostol_sum(mm, k, h));
      },
      py::arg("m"), py::arg("k"), py::arg("h"));

  m.def(
      "orbit_sum",
      [](int w, int n, std::int64_t h, std::int64_t k, int slack) {
        return to_py_int(dedsym::orbit_sum(dedsym::FamilyParams(w, n), {h, k}, slack));
      },
      py::arg("w"), py::arg("n"), py::arg("h"), py::arg("k"), py::arg("slack") = 0,
      "finite unimodular orbit sum");
  m.def(
      "solve_bezout",
      [](std::int64_t a, std::int64_t c) -> py::object {
        const auto bd = dedsym::solve_bezout(a, c);
        if (!bd) return py::none();
        return py::make_tuple(bd->first, bd->second);
      },
      py::arg("a"), py::arg("c"), "one (b0, d0) with a*d0 - b0*c = 1, or None");
  m.def(
      "enumerate_terms",
      [](int w, int n, std::int64_t h, std::int64_t k, int slack) {
        py::list out;
        dedsym::enumerate_terms(w, n, h, k, dedsym::EnumerationBox::defaults(h, k, slack),
                                [&out](const dedsym::UnimodularMatrix& mat,
                                       const dedsym::Integer& term) {
                                  out.append(py::make_tuple(
                                      py::make_tuple(mat.a, mat.b, mat.c, mat.d),
                                      to_py_int(term)));
                                });
        return out;
      },
      py::arg("w"), py::arg("n"), py::arg("h"), py::arg("k"), py::arg("slack") = 0,
      "stream of ((a, b, c, d), term) over the enumeration box");
  m.def(
      "hecke_origin_closed_form",
      [](int w, int n, std::int64_t mm, int threads) {
        return to_py_fraction(dedsym::hecke_origin_closed_form(w, n, mm, threads));
      },
      py::arg("w"), py::arg("n"), py::arg("m"), py::arg("threads") = 1,
      "closed form of (T_m E)(1,0) for odd n and prime m");
  m.def(
      "eval_symbol",
      [](const std::string& spec, std::int64_t h, std::int64_t k) {
        return to_py_fraction(dedsym::parse_symbol_spec(spec).eval({h, k}));
      },
      py::arg("spec"), py::arg("h"), py::arg("k"), "spec is G:w | F:w | E:w:n | Eis:w");
  m.def(
      "symbol_parity",
      [](const std::string& spec) {
        switch (dedsym::parse_symbol_spec(spec).parity) {
          case dedsym::Parity::even:
            return "even";
          case dedsym::Parity::odd:
            return "odd";
          default:
            return "none";
        }
      },
      py::arg("spec"));
  m.def(
      "reciprocity_polynomial",
      [](int w, int n) {
        py::list out;
        const auto poly = dedsym::reciprocity_polynomial(dedsym::FamilyParams(w, n));
        for (int i = poly.degree(); i >= 0; --i) {
          if (poly.coefficient(i) == 0) continue;
          out.append(py::make_tuple(i, to_py_fraction(poly.coefficient(i))));
        }
        return out;
      },
      py::arg("w"), py::arg("n"),
      "nonzero coefficients as (h_exponent, Fraction) pairs, decreasing exponent");

  m.def(
      "hecke_apply",
      [](const std::string& spec, std::int64_t n, std::int64_t h, std::int64_t k, int threads) {
        return to_py_fraction(
            dedsym::hecke_apply(dedsym::parse_symbol_spec(spec), n, {h, k}, threads));
      },
      py::arg("spec"), py::arg("n"), py::arg("h"), py::arg("k"), py::arg("threads") = 1);
  m.def(
      "find_nonzero_point",
      [](const std::string& spec, std::int64_t limit) {
        const auto p = dedsym::find_nonzero_point(dedsym::parse_symbol_spec(spec), limit);
        return py::make_tuple(p.h, p.k);
      },
      py::arg("spec"), py::arg("limit") = 64);
  m.def(
      "eigen_report",
      [](const std::string& spec, std::int64_t n, int extra_checks, std::int64_t limit,
         int threads) {
        const auto rep =
            dedsym::eigen_report(dedsym::parse_symbol_spec(spec), n, extra_checks, limit, threads);
        py::dict d;
        d["base_point"] = py::make_tuple(rep.base_point.h, rep.base_point.k);
        d["eigenvalue"] = to_py_fraction(rep.eigenvalue);
        py::list points;
        for (const auto& p : rep.checked_points) points.append(py::make_tuple(p.h, p.k));
        d["checked_points"] = points;
        d["consistent"] = rep.consistent;
        return d;
      },
      py::arg("spec"), py::arg("n"), py::arg("extra_checks") = 5, py::arg("limit") = 64,
      py::arg("threads") = 1);

  m.def(
      "tau", [](int ell, std::int64_t mm, int threads) { return to_py_int(dedsym::tau(ell, mm, threads)); },
      py::arg("ell"), py::arg("m"), py::arg("threads") = 1,
      "coefficient of the weight-(ell+2) eigenform, Hecke route");
  m.def(
      "tau_closed_form",
      [](int ell, std::int64_t mm, int threads) {
        return to_py_int(dedsym::tau_closed_form(ell, mm, threads));
      },
      py::arg("ell"), py::arg("m"), py::arg("threads") = 1, "per-weight closed form, m prime");
  m.def(
      "tau_box_form", [](std::int64_t mm) { return to_py_int(dedsym::tau_box_form(mm)); },
      py::arg("m"), "direct box rendering for ell = 10, m prime");

  m.def(
      "qexp_delta", [](int n) { return series_coeffs(dedsym::qexp_delta(n)); },
      py::arg("truncation"));
  m.def(
      "qexp_e4", [](int n) { return series_coeffs(dedsym::qexp_e4(n)); }, py::arg("truncation"));
  m.def(
      "qexp_e6", [](int n) { return series_coeffs(dedsym::qexp_e6(n)); }, py::arg("truncation"));
  m.def(
      "qexp_eigenform",
      [](int ell, int n) { return series_coeffs(dedsym::qexp_eigenform(ell, n)); },
      py::arg("ell"), py::arg("truncation"));

  m.def(
      "run_verify",
      [](const std::string& filter, int h_max, int k_max, int c_max, int n_max, int prime_max,
         int threads) {
        dedsym::SampleSpec spec;
        spec.h_max = h_max;
        spec.k_max = k_max;
        spec.c_max = c_max;
        spec.n_max = n_max;
        spec.prime_max = prime_max;
        spec.threads = threads;
        py::list out;
        for (const auto& r : dedsym::run_suite(filter, spec)) out.append(result_to_dict(r));
        return out;
      },
      py::arg("filter") = "", py::arg("h_max") = 6, py::arg("k_max") = 12, py::arg("c_max") = 3,
      py::arg("n_max") = 6, py::arg("prime_max") = 13, py::arg("threads") = 1);

  py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);
}
