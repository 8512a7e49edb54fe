// _hlab: python access to the core operations (fields as numpy arrays in
// (nz, ny, nx) layout, matching the row-major x-fastest storage).

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hlab/casimir.hpp"
#include "hlab/checks.hpp"
#include "hlab/invariants.hpp"
#include "hlab/scenario.hpp"
#include "hlab/solver.hpp"

namespace py = pybind11;
using namespace hlab;

namespace {

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

ScalarField to_scalar(const Grid& g, const Array& a) {
  if (a.ndim() != 3 || a.shape(0) != g.n[2] || a.shape(1) != g.n[1] ||
      a.shape(2) != g.n[0])
    throw std::invalid_argument("expected array of shape (nz, ny, nx)");
  ScalarField f(g);
  std::copy(a.data(), a.data() + g.size(), f.values.begin());
  return f;
}

Array from_scalar(const ScalarField& f) {
  const Grid& g = f.grid;
  Array a({g.n[2], g.n[1], g.n[0]});
  std::copy(f.values.begin(), f.values.end(), a.mutable_data());
  return a;
}

VectorField to_vector(const Grid& g, const Array& a) {
  if (a.ndim() != 4 || a.shape(0) != 3)
    throw std::invalid_argument("expected array of shape (3, nz, ny, nx)");
  VectorField v(g);
  for (int c = 0; c < 3; ++c) {
    if (a.shape(1) != g.n[2] || a.shape(2) != g.n[1] || a.shape(3) != g.n[0])
      throw std::invalid_argument("expected array of shape (3, nz, ny, nx)");
    std::copy(a.data() + c * g.size(), a.data() + (c + 1) * g.size(),
              v.comp[c].values.begin());
  }
  return v;
}

Array from_vector(const VectorField& v) {
  const Grid& g = v.grid;
  Array a({3, g.n[2], g.n[1], g.n[0]});
  for (int c = 0; c < 3; ++c)
    std::copy(v.comp[c].values.begin(), v.comp[c].values.end(),
              a.mutable_data() + c * g.size());
  return a;
}

}  // namespace

PYBIND11_MODULE(_hlab, m) {
  m.doc() = "periodic-box ideal MHD / gas dynamics laboratory";

  py::class_<Grid>(m, "Grid")
      .def(py::init([](int dims, std::array<int, 3> n,
                       std::array<double, 3> L) {
             return Grid::make(dims, n, L);
           }),
           py::arg("dims"), py::arg("n"),
           py::arg("L") = std::array<double, 3>{two_pi, two_pi, two_pi})
      .def_readonly("dims", &Grid::dims)
      .def_readonly("n", &Grid::n)
      .def_readonly("length", &Grid::length)
      .def_readonly("dx", &Grid::dx)
      .def("size", &Grid::size)
      .def("cell_volume", &Grid::cell_volume)
      .def("coords",
           [](const Grid& g, int axis) {
             py::array_t<double> out(g.n[axis]);
             double* p = out.mutable_data();
             for (int i = 0; i < g.n[axis]; ++i) p[i] = g.coord(axis, i);
             return out;
           },
           py::arg("axis"));

  m.def("grad",
        [](const Grid& g, const Array& f) { return from_vector(grad(to_scalar(g, f))); },
        py::arg("grid"), py::arg("f"));
  m.def("div",
        [](const Grid& g, const Array& v) { return from_scalar(div(to_vector(g, v))); },
        py::arg("grid"), py::arg("v"));
  m.def("curl",
        [](const Grid& g, const Array& v) { return from_vector(curl(to_vector(g, v))); },
        py::arg("grid"), py::arg("v"));
  m.def("integrate",
        [](const Grid& g, const Array& f) { return integrate(to_scalar(g, f)); },
        py::arg("grid"), py::arg("f"));
  m.def("lie_bracket",
        [](const Grid& g, const Array& u, const Array& v) {
          return from_vector(lie_bracket(to_vector(g, u), to_vector(g, v)));
        },
        py::arg("grid"), py::arg("u"), py::arg("v"));

  py::class_<EquationOfState>(m, "EquationOfState")
      .def_static("ideal", &EquationOfState::ideal,
                  py::arg("gamma") = 5.0 / 3.0, py::arg("K") = 1.0,
                  py::arg("c_v") = 1.0)
      .def_static("barotropic", &EquationOfState::barotropic,
                  py::arg("gamma") = 5.0 / 3.0, py::arg("K") = 1.0)
      .def_readonly("gamma", &EquationOfState::gamma)
      .def_readonly("K", &EquationOfState::K)
      .def_readonly("c_v", &EquationOfState::c_v)
      .def("is_barotropic", &EquationOfState::is_barotropic);

  m.def("eval_thermo",
        [](const EquationOfState& eos, const Grid& g, const Array& rho,
           const Array& S) {
          const ThermoFields th = eval_thermo(eos, to_scalar(g, rho),
                                              to_scalar(g, S));
          py::dict out;
          out["eps"] = from_scalar(th.eps);
          out["p"] = from_scalar(th.p);
          out["T"] = from_scalar(th.T);
          out["h"] = from_scalar(th.h);
          return out;
        },
        py::arg("eos"), py::arg("grid"), py::arg("rho"), py::arg("S"));
  m.def("first_law_residual",
        [](const EquationOfState& eos, const Grid& g, const Array& rho,
           const Array& S) {
          return first_law_residual(eos, to_scalar(g, rho), to_scalar(g, S));
        });

  py::class_<FluidState>(m, "FluidState")
      .def_property_readonly("t", [](const FluidState& s) { return s.t; })
      .def_property_readonly("grid",
                             [](const FluidState& s) { return s.grid(); })
      .def_property_readonly("has_A",
                             [](const FluidState& s) { return s.has_A; })
      .def_property(
          "rho", [](const FluidState& s) { return from_scalar(s.rho); },
          [](FluidState& s, const Array& a) { s.rho = to_scalar(s.grid(), a); })
      .def_property(
          "S", [](const FluidState& s) { return from_scalar(s.S); },
          [](FluidState& s, const Array& a) { s.S = to_scalar(s.grid(), a); })
      .def_property(
          "u", [](const FluidState& s) { return from_vector(s.u); },
          [](FluidState& s, const Array& a) { s.u = to_vector(s.grid(), a); })
      .def_property(
          "B", [](const FluidState& s) { return from_vector(s.B); },
          [](FluidState& s, const Array& a) { s.B = to_vector(s.grid(), a); })
      .def_property(
          "A", [](const FluidState& s) { return from_vector(s.A); },
          [](FluidState& s, const Array& a) {
            s.A = to_vector(s.grid(), a);
            s.has_A = true;
          });

  m.def("make_scenario", &make_scenario, py::arg("name"), py::arg("grid"),
        py::arg("seed") = 1);
  m.def("scenario_names", [] {
    std::vector<std::string> out;
    for (const auto& s : scenario_catalog()) out.push_back(s.name);
    return out;
  });
  m.def("check_names", [] {
    std::vector<std::string> out;
    for (const auto& c : registered_checks()) out.push_back(c.name);
    return out;
  });

  m.def("cfl_dt", &cfl_dt, py::arg("state"), py::arg("eos"),
        py::arg("cfl") = 0.4);
  m.def("step_rk4",
        [](const FluidState& s, const EquationOfState& eos, double dt,
           bool warn_cfl) {
          StepOptions opts;
          opts.warn_cfl = warn_cfl;
          return step_rk4(s, eos, dt, opts);
        },
        py::arg("state"), py::arg("eos"), py::arg("dt"),
        py::arg("warn_cfl") = true);

  m.def("density_flux",
        [](const std::string& name, const FluidState& fs,
           const EquationOfState& eos) {
          const ConservedPair p = density_flux(name, fs, nullptr, eos);
          return py::make_tuple(from_scalar(p.F0), from_vector(p.flux));
        },
        py::arg("name"), py::arg("state"), py::arg("eos"),
        "assemble a local conserved density/flux pair from one state");

  m.def("casimir_value", &casimir_value, py::arg("name"), py::arg("state"));
  m.def("casimir_names", [] {
    std::vector<std::string> out;
    for (const auto& c : casimir_catalog()) out.push_back(c.name);
    return out;
  });

  m.def("run_checks",
        [](const std::string& scenario, int dims, int n, double t_end,
           const std::vector<std::string>& checks,
           const EquationOfState& eos, int tracers, std::uint64_t seed) {
          ScenarioConfig sc;
          sc.scenario = scenario;
          sc.dims = dims;
          sc.n = {n, n, dims == 3 ? n : 1};
          sc.eos = eos;
          sc.t_end = t_end;
          sc.tracers = tracers;
          sc.seed = seed;
          sc.checks = checks;
          const RunArtifacts art = execute_run(sc, /*write_outputs=*/false);
          py::dict out;
          for (const auto& oc : art.outcomes) {
            py::dict e;
            e["family"] = oc.family;
            e["final_res_L2"] = oc.final_res_l2;
            e["final_res_Linf"] = oc.final_res_linf;
            e["max_res_L2"] = oc.max_res_l2;
            e["integral_drift"] = oc.integral_drift;
            e["casimir_drift"] = oc.casimir_drift;
            out[py::str(oc.name)] = e;
          }
          return out;
        },
        py::arg("scenario"), py::arg("dims"), py::arg("n"), py::arg("t_end"),
        py::arg("checks"), py::arg("eos"), py::arg("tracers") = 0,
        py::arg("seed") = 1,
        "run a scenario and evaluate the named checks in memory");
}
