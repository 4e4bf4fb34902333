#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zolo/adi.hpp"
#include "zolo/bounds.hpp"
#include "zolo/cli.hpp"
#include "zolo/displacement.hpp"
#include "zolo/faber.hpp"
#include "zolo/rational.hpp"

namespace py = pybind11;
using namespace zolo;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Faber rationals, Zolotarev bounds and ADI shifts";
  m.attr("__version__") = ZOLO_VERSION;

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<InvalidInput> invalid(m, "InvalidInput", base.ptr());
  static py::exception<NumericalFailure> numerical(m, "NumericalFailure", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidInput& e) {
      invalid(e.what());
    } catch (const NumericalFailure& e) {
      numerical(e.what());
    } catch (const Error& e) {
      base(e.what());
    }
  });

  py::enum_<Variant>(m, "Variant").value("A1", Variant::A1).value("A2", Variant::A2);

  py::class_<Region>(m, "Region")
      .def_static("disk", &Region::disk, py::arg("center"), py::arg("radius"))
      .def_static("rectangle", &Region::rectangle, py::arg("re_lo"), py::arg("re_hi"), py::arg("im_lo"),
                  py::arg("im_hi"))
      .def_static("polygon", &Region::polygon, py::arg("vertices"))
      .def("transformed", &Region::transformed, py::arg("scale"), py::arg("shift"))
      .def("negated", &Region::negated)
      .def("complement", &Region::complement)
      .def("point_at", &Region::point_at, py::arg("t"))
      .def("contains", &Region::contains, py::arg("z"))
      .def_property_readonly("diameter", &Region::diameter)
      .def_property_readonly("is_complement", &Region::is_complement);

  m.def("rotation", &rotation, py::arg("region"));
  m.def("is_convex", &is_convex, py::arg("region"));

  py::class_<ConformalMap, std::shared_ptr<ConformalMap>>(m, "ConformalMap")
      .def_property_readonly("h", &ConformalMap::h)
      .def_property_readonly("residual", &ConformalMap::residual)
      .def_property_readonly("variant", &ConformalMap::variant)
      .def("phi", &ConformalMap::phi, py::arg("z"))
      .def("psi_boundary", &ConformalMap::psi_boundary, py::arg("w"));

  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("tolerance", &SolverConfig::tolerance)
      .def_readwrite("max_degree", &SolverConfig::max_degree)
      .def_readwrite("n_samples", &SolverConfig::n_samples)
      .def_readwrite("max_poles", &SolverConfig::max_poles)
      .def_readwrite("taper", &SolverConfig::taper);

  m.def(
      "solve_map",
      [](const Region& E, const Region& F, const SolverConfig& cfg) {
        return std::const_pointer_cast<ConformalMap>(solve_map(E, F, cfg));
      },
      py::arg("E"), py::arg("F"), py::arg("config") = SolverConfig{});

  py::class_<GeometryConstants>(m, "GeometryConstants")
      .def(py::init([](double h, double rotE, double rotF, bool convex, Variant v) {
             return GeometryConstants{h, rotE, rotF, convex, v};
           }),
           py::arg("h"), py::arg("rotE") = 1.0, py::arg("rotF") = 1.0, py::arg("convex") = true,
           py::arg("variant") = Variant::A1)
      .def_readonly("h", &GeometryConstants::h)
      .def_readonly("rotE", &GeometryConstants::rotE)
      .def_readonly("rotF", &GeometryConstants::rotF);

  py::class_<BoundValue>(m, "BoundValue")
      .def_readonly("n", &BoundValue::n)
      .def_readonly("lower", &BoundValue::lower)
      .def_readonly("upper", &BoundValue::upper)
      .def_readonly("upper_valid", &BoundValue::upper_valid)
      .def_readonly("clamped", &BoundValue::clamped)
      .def_readonly("x0", &BoundValue::x0)
      .def_readonly("N0", &BoundValue::N0);

  m.def("geometry_constants", [](const std::shared_ptr<ConformalMap>& map) { return geometry_constants(*map); });
  m.def("zolotarev_upper", &zolotarev_upper, py::arg("constants"), py::arg("n"));
  m.def("zolotarev_lower", &zolotarev_lower, py::arg("h"), py::arg("n"));
  m.def("m_n", &m_n, py::arg("rotE"), py::arg("rotF"), py::arg("h"), py::arg("n"));
  m.def("asymptotic_constant", &asymptotic_constant, py::arg("rotE"), py::arg("rotF"),
        py::arg("variant") = Variant::A1);

  py::class_<FaberContext>(m, "FaberContext")
      .def_property_readonly("degree", &FaberContext::degree)
      .def_property_readonly("h", &FaberContext::h)
      .def("rn", [](const FaberContext& c, cplx z) { return eval_rn(c, z); }, py::arg("z"))
      .def("Rn", [](const FaberContext& c, cplx z) { return eval_Rn(c, z); }, py::arg("z"))
      .def("empirical_ratio", &empirical_ratio)
      .def("count_zeros", &count_zeros);
  m.def(
      "build_context",
      [](const std::shared_ptr<ConformalMap>& map, int n, int nq) { return build_context(map, n, nq); },
      py::arg("map"), py::arg("n"), py::arg("nq") = 512);

  py::class_<BarycentricRational>(m, "BarycentricRational")
      .def_readonly("support", &BarycentricRational::support)
      .def_readonly("residual", &BarycentricRational::residual)
      .def_readonly("stagnated", &BarycentricRational::stagnated)
      .def_property_readonly("degree", &BarycentricRational::degree)
      .def("__call__", &bary_eval, py::arg("z"))
      .def("poles_zeros", [](const BarycentricRational& r) {
        auto pz = poles_zeros(r);
        return py::make_tuple(pz.poles, pz.zeros);
      });
  m.def("aaa_fit", &aaa_fit, py::arg("z"), py::arg("f"), py::arg("tol") = 1e-13, py::arg("max_degree") = 100);

  m.def("vandermonde_h", &vandermonde_h, py::arg("z0"), py::arg("eta0"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"zolo"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(int(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a command line; returns (exit code, stdout, stderr).");
}
