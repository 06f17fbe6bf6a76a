// Python bindings. Exact values come back as int and fractions.Fraction.

#include "glcover/asympt.hpp"
#include "glcover/census.hpp"
#include "glcover/error.hpp"
#include "glcover/oracle.hpp"
#include "glcover/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace glcover;

namespace {

// Base 16: Python caps decimal int parsing at a few thousand digits, and the
// l(q) endpoints are longer than that.
py::object to_py(const BigInt& x) {
    PyObject* v = PyLong_FromString(x.get_str(16).c_str(), nullptr, 16);
    if (v == nullptr) throw py::error_already_set();
    return py::reinterpret_steal<py::object>(v);
}

py::object to_py(const BigRational& x) {
    return py::module_::import("fractions").attr("Fraction")(to_py(x.get_num()), to_py(x.get_den()));
}

py::list to_py(const IntPolynomial& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(to_py(c));
    return out;
}

// Accepts int, Fraction or a "p/r" string.
BigRational rational_arg(const py::handle& h) { return rational_from_json(py::str(h).cast<std::string>()); }

py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

Budget budget(unsigned threads) {
    Budget b;
    b.threads = threads;
    return b;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Abelian covers, cyclic centralizers and non-commuting sets in GL_n(q)";

    static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", base.ptr());
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<RingMismatch>(m, "RingMismatch", base.ptr());
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", base.ptr());
    py::register_exception<UnsupportedRegime>(m, "UnsupportedRegime", base.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

    m.def("a_polynomial", [](unsigned n) { return to_py(a_polynomial(n)); }, py::arg("n"),
          "Ascending integer coefficients of |A_n(q)| in q.");
    m.def("a_value", [](unsigned n, std::uint64_t q) { return to_py(a_polynomial(n).eval(BigInt(static_cast<unsigned long>(q)))); },
          py::arg("n"), py::arg("q"));
    m.def("phi_count", [](unsigned n) { return enumerate_phi(n).size(); }, py::arg("n"));
    m.def("b_coefficient",
          [](unsigned n) {
              const RationalFunction b = b_coefficient(n);
              return py::make_tuple(to_py(b.num()), to_py(b.den()));
          },
          py::arg("n"), "(numerator, denominator) coefficient lists of b_n(q).");
    m.def("b_value", [](unsigned n, const py::object& q) { return to_py(rf_eval(b_coefficient(n), rational_arg(q))); },
          py::arg("n"), py::arg("q"));
    m.def("omega_closed", [](unsigned n, std::uint64_t q) { return to_py(omega_closed(n, q)); }, py::arg("n"),
          py::arg("q"));
    m.def("stabilized_prefix",
          [](unsigned n) {
              py::list out;
              for (const auto& c : stabilized_prefix(n)) out.append(to_py(c));
              return out;
          },
          py::arg("n"));

    m.def("l_of_q",
          [](const py::object& q, unsigned terms) {
              const RatInterval l = l_of_q(rational_arg(q), terms);
              return py::make_tuple(to_py(l.lo), to_py(l.hi));
          },
          py::arg("q"), py::arg("terms") = 30, "Rational (lo, hi) enclosure of l(q).");
    m.def("check_estimates",
          [](const py::object& q, unsigned terms) {
              py::dict out;
              for (const auto& c : check_estimates(rational_arg(q), terms).checks) out[py::str(c.id)] = to_string(c.verdict);
              return out;
          },
          py::arg("q"), py::arg("terms") = 30);

    m.def("cyclic_proportion",
          [](unsigned n, unsigned q, unsigned threads) {
              return to_py(cyclic_proportion(GLGroup::enumerate(n, q, budget(threads))).proportion);
          },
          py::arg("n"), py::arg("q"), py::arg("threads") = 1);
    m.def("count_cyclic_centralizers",
          [](unsigned n, unsigned q, unsigned threads) {
              return count_cyclic_centralizers(GLGroup::enumerate(n, q, budget(threads))).count;
          },
          py::arg("n"), py::arg("q"), py::arg("threads") = 1);
    m.def("clique_number",
          [](unsigned n, unsigned q, double timeout) {
              CliqueBudget cb;
              cb.seconds = timeout;
              return to_py(clique_omega(n, q, Budget{}, cb).report);
          },
          py::arg("n"), py::arg("q"), py::arg("timeout") = 60.0, "Report dict with omega, optimal and seed_size.");

    m.def("census_report",
          [](unsigned n, std::optional<std::uint64_t> q) { return to_py(census_report(n, q)); }, py::arg("n"),
          py::arg("q") = py::none());
    m.def("oracle_report",
          [](unsigned n, unsigned q, const std::string& task, unsigned threads) {
              return to_py(oracle_report(n, q, task, budget(threads)));
          },
          py::arg("n"), py::arg("q"), py::arg("task"), py::arg("threads") = 1);
    m.def("verify",
          [](const std::string& level, std::uint64_t seed) {
              const VerifyLevel lv = level == "full" ? VerifyLevel::full : VerifyLevel::fast;
              if (level != "fast" && level != "full") throw DomainError("level must be fast or full");
              return to_py(verify_all(lv, default_golden_dir(), Budget{}, seed).to_json());
          },
          py::arg("level") = "fast", py::arg("seed") = 20240611);
}
