#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "circech/circle.hpp"
#include "circech/classifier.hpp"
#include "circech/errors.hpp"
#include "circech/exact.hpp"
#include "circech/montecarlo.hpp"
#include "circech/serialize.hpp"

namespace py = pybind11;
using namespace circech;

namespace {

PointConfig config_from(std::vector<double> positions) { return PointConfig::from_positions(std::move(positions)); }

py::dict estimate_dict(const EstimateWithCI& e) {
  py::dict d;
  d["mean"] = e.mean;
  d["std_error"] = e.std_error;
  d["ci_low"] = e.ci_low;
  d["ci_high"] = e.ci_high;
  d["method"] = e.method;
  d["confidence"] = e.confidence;
  d["trials"] = e.trials;
  return d;
}

py::dict report_dict(const VerifyReport& r) {
  py::dict numbers;
  for (const auto& [name, value] : r.numbers) numbers[py::str(name)] = value;
  py::dict d;
  d["theorem"] = r.theorem;
  d["passed"] = r.pass;
  d["numbers"] = numbers;
  d["notes"] = r.notes;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Random Cech complexes on the circle of unit circumference.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SizeError>(m, "SizeError", PyExc_ValueError);
  py::register_exception<PointFileError>(m, "PointFileError", PyExc_ValueError);
  py::register_exception<UnclassifiedError>(m, "UnclassifiedError", PyExc_RuntimeError);

  py::class_<HomotopyType>(m, "HomotopyType")
      .def_static("odd_sphere", &HomotopyType::odd_sphere, py::arg("l"))
      .def_static("wedge", &HomotopyType::wedge, py::arg("a"), py::arg("l"))
      .def_static("point", &HomotopyType::point)
      .def_property_readonly("is_odd_sphere", &HomotopyType::is_odd_sphere)
      .def_property_readonly("l", &HomotopyType::l)
      .def_property_readonly("a", &HomotopyType::a)
      .def_property_readonly("sphere_dimension", &HomotopyType::sphere_dimension)
      .def_property_readonly("euler_characteristic", &HomotopyType::euler_characteristic)
      .def_property_readonly("betti", &HomotopyType::betti)
      .def("to_json", [](const HomotopyType& h) { return to_json(h).dump(); })
      .def("__str__", &HomotopyType::display)
      .def("__repr__", [](const HomotopyType& h) { return "<HomotopyType " + h.display() + ">"; })
      .def("__eq__", [](const HomotopyType& a, const HomotopyType& b) { return a == b; })
      .def("__lt__", [](const HomotopyType& a, const HomotopyType& b) { return a < b; })
      .def("__hash__", [](const HomotopyType& h) {
        return py::hash(py::make_tuple(h.is_odd_sphere(), h.l(), h.a()));
      });

  m.def("expected_euler_char", [](std::int64_t n, double t) { return expected_euler_char(n, FiltrationRadius(t)); },
        py::arg("n"), py::arg("t"));
  m.def(
      "expected_euler_curve",
      [](std::int64_t n, const std::vector<double>& grid) {
        std::vector<std::pair<double, double>> out;
        for (const CurvePoint& p : expected_euler_curve(n, grid)) out.emplace_back(p.t, p.chi);
        return out;
      },
      py::arg("n"), py::arg("t_grid"));
  m.def(
      "coverage_probability", [](std::int64_t k, double a) { return coverage_probability(k, a).clamped; },
      py::arg("k"), py::arg("arc_length"));
  m.def("omega", &omega, py::arg("m"));
  m.def("spike_lower_bound", &spike_lower_bound, py::arg("m"), py::arg("n"));
  m.def("spike_excess_bound", &spike_excess_bound, py::arg("m"), py::arg("n"));
  m.def(
      "spike_center", [](std::int64_t m, std::int64_t n) { return static_cast<double>(spike_center_exact(m, n)); },
      py::arg("m"), py::arg("n"));

  m.def(
      "euler_char",
      [](std::vector<double> points, double t) { return euler_char_exact(config_from(std::move(points)), FiltrationRadius(t)); },
      py::arg("points"), py::arg("t"));
  m.def(
      "covers_circle",
      [](std::vector<double> points, double radius) { return covers_circle(config_from(std::move(points)), radius); },
      py::arg("points"), py::arg("radius"));
  m.def(
      "classify",
      [](std::vector<double> points, double t) { return classify(config_from(std::move(points)), FiltrationRadius(t)); },
      py::arg("points"), py::arg("t"));
  m.def(
      "read_points",
      [](const std::string& text) {
        std::istringstream in(text);
        const PointConfig c = read_points(in);
        return std::vector<double>(c.positions().begin(), c.positions().end());
      },
      py::arg("text"));

  m.def(
      "census",
      [](std::int64_t n, double t, std::int64_t trials, std::uint64_t seed, unsigned threads) {
        Census c;
        {
          py::gil_scoped_release release;
          c = run_census(n, FiltrationRadius(t), trials, seed, RunOptions{threads});
        }
        return to_json(c).dump();
      },
      py::arg("n"), py::arg("t"), py::arg("trials"), py::arg("seed") = 1, py::arg("threads") = 1,
      "Census as a JSON string.");
  m.def(
      "estimate_chi",
      [](std::int64_t n, double t, std::int64_t trials, std::uint64_t seed, unsigned threads) {
        EstimateWithCI e;
        {
          py::gil_scoped_release release;
          e = estimate_chi(n, FiltrationRadius(t), trials, seed, RunOptions{threads});
        }
        return estimate_dict(e);
      },
      py::arg("n"), py::arg("t"), py::arg("trials"), py::arg("seed") = 1, py::arg("threads") = 1);
  m.def(
      "verify_a1",
      [](std::int64_t n, double t, std::int64_t trials, std::uint64_t seed) {
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify_theorem_a1(n, FiltrationRadius(t), trials, seed);
        }
        return report_dict(r);
      },
      py::arg("n"), py::arg("t"), py::arg("trials") = 1000, py::arg("seed") = 1);
  m.def(
      "verify_b",
      [](std::int64_t k, std::int64_t n, double t, std::int64_t trials, std::uint64_t seed) {
        VerifyReport r;
        {
          py::gil_scoped_release release;
          r = verify_theorem_b(k, n, FiltrationRadius(t), trials, seed);
        }
        return report_dict(r);
      },
      py::arg("k"), py::arg("n"), py::arg("t"), py::arg("trials") = 1000, py::arg("seed") = 1);
}
