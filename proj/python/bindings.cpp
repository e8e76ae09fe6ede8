#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "folichar/commands.hpp"
#include "folichar/session.hpp"

namespace py = pybind11;
using namespace folichar;

namespace {

CommandOptions make_options(const std::string& xi, std::optional<std::uint64_t> budget, int max_deg,
                            int max_cofactor, const std::string& order, bool bernstein, bool prolonged) {
  CommandOptions o;
  o.xi = xi;
  o.budget = budget;
  o.max_deg = max_deg;
  o.max_cofactor = max_cofactor;
  o.order = order;
  o.bernstein = bernstein;
  o.prolonged = prolonged;
  return o;
}

}  // namespace

PYBIND11_MODULE(_folichar, m) {
  m.doc() = "Exact characteristic varieties of polynomial foliations";

  static py::handle py_error = py::exception<Error>(m, "FolicharError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(py_error, (std::string(to_string(e.kind())) + " at line " + std::to_string(e.line()) +
                               ", column " + std::to_string(e.column()) + ": " + e.what())
                                  .c_str());
    } catch (const Error& e) {
      py::set_error(py_error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def("command_names", &command_names);

  m.def(
      "run_command",
      [](const std::string& text, const std::string& command, const std::vector<std::string>& args,
         const std::string& xi, std::optional<std::uint64_t> budget, int max_deg, int max_cofactor,
         const std::string& order, bool bernstein, bool prolonged, bool assume_irreducible) {
        Report r;
        {
          py::gil_scoped_release release;
          r = run_file_command(text, command, args,
                               make_options(xi, budget, max_deg, max_cofactor, order, bernstein, prolonged),
                               assume_irreducible);
        }
        return py::make_tuple(r.json.dump(), r.exit_code);
      },
      py::arg("text"), py::arg("command"), py::arg("args") = std::vector<std::string>{}, py::arg("xi") = "",
      py::arg("budget") = py::none(), py::arg("max_deg") = 2, py::arg("max_cofactor") = 1,
      py::arg("order") = "grevlex", py::arg("bernstein") = false, py::arg("prolonged") = false,
      py::arg("assume_irreducible") = false,
      "Run one command on session text; returns (json_text, exit_code).");

  py::class_<Session>(m, "Session")
      .def(py::init([](const std::string& text, bool assume_irreducible) {
             return Session::parse(text, assume_irreducible);
           }),
           py::arg("text"), py::arg("assume_irreducible") = false)
      .def_property_readonly("n", &Session::n)
      .def("names", &Session::names)
      .def("kind", [](const Session& s, const std::string& name) { return s.get(name).kind_name(); })
      .def("get", [](const Session& s, const std::string& name) { return s.print(s.get(name)); })
      .def("evaluate", [](const Session& s, const std::string& expr) { return s.print(s.evaluate(expr)); })
      .def("__str__", [](const Session& s) { return s.print(); });
}
