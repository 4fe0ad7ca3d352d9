#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abtk/asymptotics.hpp"
#include "abtk/evolution.hpp"
#include "abtk/special_functions.hpp"

namespace py = pybind11;
using namespace abtk;

namespace {

void translate_errors() {
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Direct scattering and long-time asymptotics for the coupled AB system";
  translate_errors();

  m.def("complex_gamma", &complex_gamma, py::arg("w"));
  m.def("parabolic_cylinder_d", &parabolic_cylinder_d, py::arg("a"), py::arg("k"));

  py::class_<ModelParameters>(m, "ModelParameters")
      .def(py::init<>())
      .def_readwrite("alpha", &ModelParameters::alpha)
      .def_readwrite("beta", &ModelParameters::beta)
      .def_readwrite("gamma", &ModelParameters::gamma);

  py::class_<InitialData>(m, "InitialData")
      .def_readonly("x_grid", &InitialData::x_grid)
      .def_readonly("A0", &InitialData::A0)
      .def_readonly("B0", &InitialData::B0);

  m.def("make_initial_data", &make_initial_data, py::arg("profile"),
        py::arg("amplitude"), py::arg("L"), py::arg("n"), py::arg("center") = 0.0);

  py::class_<ScatteringData>(m, "ScatteringData")
      .def_readonly("z_grid", &ScatteringData::z_grid)
      .def_readonly("s11", &ScatteringData::s11)
      .def_readonly("s21", &ScatteringData::s21)
      .def_readonly("r", &ScatteringData::r)
      .def_readonly("h11_norm", &ScatteringData::h11_norm)
      .def_readonly("winding", &ScatteringData::winding)
      .def("r_at", &ScatteringData::r_at);

  m.def("make_z_grid", &make_z_grid, py::arg("zmax") = 4.0, py::arg("n") = 801,
        py::arg("z_min") = 0.05);
  m.def("reflection", &reflection, py::arg("data"), py::arg("z_grid"),
        py::arg("threads") = 0, py::arg("check_spectrum") = true);
  m.def("check_no_discrete_spectrum",
        [](const InitialData& d) { return check_no_discrete_spectrum(d); });
  m.def("evolve_scattering", &evolve_scattering);
  m.def("sobolev_norm_h11", &sobolev_norm_h11);

  py::class_<RayCoordinates>(m, "RayCoordinates")
      .def_readonly("x", &RayCoordinates::x)
      .def_readonly("t", &RayCoordinates::t)
      .def_readonly("alpha", &RayCoordinates::alpha)
      .def_readonly("z0", &RayCoordinates::z0);
  m.def("ray_from_xt", &RayCoordinates::make, py::arg("alpha"), py::arg("x"),
        py::arg("t"));
  m.def("ray_from_z0", &RayCoordinates::from_z0, py::arg("alpha"), py::arg("z0"),
        py::arg("t"));
  m.def("theta", &theta);
  m.def("critical_points", &critical_points);

  py::class_<DeltaData>(m, "DeltaData")
      .def_readonly("z0", &DeltaData::z0)
      .def_readonly("nu_z0", &DeltaData::nu_z0)
      .def_readonly("nu_minus_z0", &DeltaData::nu_minus_z0)
      .def_readonly("delta0_plus", &DeltaData::delta0_plus)
      .def_readonly("delta0_minus", &DeltaData::delta0_minus)
      .def_readonly("tail_coefficient", &DeltaData::tail_coefficient);
  m.def("build_delta_data",
        [](const ScatteringData& sd, double z0) { return build_delta_data(sd, z0); });
  m.def("delta", [](Complex z, const DeltaData& dd) { return delta(z, dd); });
  m.def("delta_boundary",
        [](double s, const DeltaData& dd) { return delta_boundary(s, dd); });

  py::class_<LocalModel>(m, "LocalModel")
      .def_readonly("z0", &LocalModel::z0)
      .def_readonly("nu_plus", &LocalModel::nu_plus)
      .def_readonly("nu_minus", &LocalModel::nu_minus)
      .def_readonly("r_plus", &LocalModel::r_plus)
      .def_readonly("r_minus", &LocalModel::r_minus)
      .def_readonly("beta12_plus", &LocalModel::beta12_plus)
      .def_readonly("beta12_minus", &LocalModel::beta12_minus);
  m.def("build_local_model", &build_local_model);

  py::class_<AsymptoticSolution>(m, "AsymptoticSolution")
      .def_readonly("x", &AsymptoticSolution::x)
      .def_readonly("t", &AsymptoticSolution::t)
      .def_readonly("z0", &AsymptoticSolution::z0)
      .def_readonly("A_leading", &AsymptoticSolution::A_leading)
      .def_readonly("B_leading", &AsymptoticSolution::B_leading)
      .def_readonly("error_order", &AsymptoticSolution::error_order);
  m.def("leading_A", &leading_A);
  m.def(
      "evaluate_asymptotics",
      [](const ScatteringData& sd, double alpha, double x, double t) {
        return evaluate_asymptotics(sd, alpha, x, t);
      },
      py::arg("sd"), py::arg("alpha"), py::arg("x"), py::arg("t"));
  m.def(
      "envelope_profile",
      [](const ScatteringData& sd, double alpha, double t, std::vector<double> xs) {
        const SampledFunction env = envelope_profile(sd, alpha, t, xs);
        return env.values;
      },
      py::arg("sd"), py::arg("alpha"), py::arg("t"), py::arg("x_samples"));

  py::class_<FieldState>(m, "FieldState")
      .def_readonly("x", &FieldState::x)
      .def_readonly("A", &FieldState::A)
      .def_readonly("B", &FieldState::B)
      .def_readonly("t", &FieldState::t);
  py::class_<EvolveConfig>(m, "EvolveConfig")
      .def(py::init<>())
      .def_readwrite("dt", &EvolveConfig::dt)
      .def_readwrite("t_end", &EvolveConfig::t_end);
  m.def(
      "evolve",
      [](const InitialData& d, const ModelParameters& p, const EvolveConfig& c) {
        return evolve(d, p, c);
      },
      py::arg("data"), py::arg("params"), py::arg("config"));
  m.def(
      "compare_asymptotics",
      [](const InitialData& d, const ModelParameters& p, double z0,
         std::vector<double> ts, const EvolveConfig& c, const ScatteringData& sd) {
        const CompareReport rep = compare_asymptotics(d, p, z0, ts, c, sd);
        py::dict out;
        out["fitted_decay_exponent"] = rep.fitted_decay_exponent;
        out["final_ratio"] = rep.final_ratio;
        py::list pts;
        for (const auto& pt : rep.points) {
          py::dict q;
          q["t"] = pt.t;
          q["x_ray"] = pt.x_ray;
          q["a_numeric"] = pt.a_numeric;
          q["a_leading"] = pt.a_leading;
          q["residual"] = pt.residual;
          q["b_numeric"] = pt.b_numeric;
          pts.append(q);
        }
        out["points"] = pts;
        return out;
      });
}
