#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sigmalab/changepoints.hpp"
#include "sigmalab/serialize.hpp"
#include "sigmalab/sigma.hpp"
#include "sigmalab/verifier.hpp"

namespace py = pybind11;
using namespace sigmalab;

namespace {

// Results cross the boundary in the same shape the CLI prints.
py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

PrecisionPolicy policy_of(unsigned initial_bits, unsigned max_bits) {
  PrecisionPolicy p{initial_bits, max_bits, 2};
  p.validate();
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certified sigma_n, change points and n_a";

  py::register_exception<UndecidableError>(m, "UndecidableError", PyExc_ArithmeticError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<BoundedReal>(m, "Interval")
      .def_property_readonly("lo", &BoundedReal::lo_string)
      .def_property_readonly("hi", &BoundedReal::hi_string)
      .def_property_readonly("bits", &BoundedReal::bits)
      .def_property_readonly("width", &BoundedReal::width)
      .def("contains", [](const BoundedReal& x, const std::string& decimal) { return x.contains(parse_decimal(decimal)); },
           py::arg("decimal"), "Whether the exact decimal value lies in the enclosure.")
      .def("__float__", &BoundedReal::mid)
      .def("__repr__", [](const BoundedReal& x) { return "Interval" + x.to_string(20); });

  m.def(
      "sigma",
      [](std::uint64_t n, unsigned bits, unsigned max_bits) {
        SigmaCertificate c;
        {
          py::gil_scoped_release release;
          c = sigma_exact(n, policy_of(bits, max_bits));
        }
        return to_python(to_json(c));
      },
      py::arg("n"), py::arg("precision_bits") = 128, py::arg("max_precision_bits") = 8192);

  m.def(
      "bracket", [](std::uint64_t n, unsigned bits) { return to_python(to_json(sigma_bracket(n, bits))); },
      py::arg("n"), py::arg("precision_bits") = 128);

  m.def("t_value", py::overload_cast<std::uint64_t, unsigned>(&t_value), py::arg("n"), py::arg("bits") = 128);
  m.def("ln_factorial", py::overload_cast<std::uint64_t, unsigned>(&ln_factorial), py::arg("n"),
        py::arg("bits") = 128);

  m.def(
      "n_a",
      [](const std::string& a, unsigned bits, unsigned max_bits) {
        const mpq_class q = parse_decimal(a);
        if (q <= 1) throw py::value_error("n_a needs a > 1");
        return to_python(to_json(n_a_of(q, policy_of(bits, max_bits)), a));
      },
      py::arg("a"), py::arg("precision_bits") = 128, py::arg("max_precision_bits") = 8192,
      "Smallest n with a^n <= n!; `a` is a decimal string, read exactly.");

  m.def(
      "changepoints",
      [](std::uint64_t max_n) {
        std::vector<ChangePointRecord> records;
        {
          py::gil_scoped_release release;
          records = enumerate_changepoints(max_n);
        }
        py::list out;
        for (const auto& r : records) out.append(to_python(to_json(r)));
        return out;
      },
      py::arg("max_n"));

  m.def("first_n_with_sigma", [](std::int64_t c) { return first_n_with_sigma(c); }, py::arg("c"));

  m.def(
      "verify",
      [](const std::string& suite) {
        std::vector<verify::CheckReport> reports;
        {
          py::gil_scoped_release release;
          reports = verify::run_suite(suite);
        }
        nlohmann::json j{{"suite", suite}, {"verdict", verify::to_string(verify::overall(reports))}};
        j["reports"] = nlohmann::json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r));
        return to_python(j);
      },
      py::arg("suite") = "all");
}
