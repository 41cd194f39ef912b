#include "cavityberry/berry.hpp"
#include "cavityberry/cli_support.hpp"
#include "cavityberry/eigensolve.hpp"
#include "cavityberry/fock_algebra.hpp"
#include "cavityberry/hamiltonians.hpp"
#include "cavityberry/surfaces.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace cavityberry;

namespace {

Branch branch_from_string(const std::string& text) {
  if (text == "+" || text == "plus") return Branch::plus;
  if (text == "-" || text == "minus") return Branch::minus;
  throw ValidationError("branch must be '+' or '-'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Berry phases and semiclassical energy surfaces of cavity-QED models";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<NonHermitianInput>(m, "NonHermitianInput");
  py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure");
  py::register_exception<BandTrackingAmbiguity>(m, "BandTrackingAmbiguity");
  py::register_exception<DegenerateBand>(m, "DegenerateBand");
  py::register_exception<TruncationLeak>(m, "TruncationLeak");
  py::register_exception<ZeroOverlap>(m, "ZeroOverlap");
  py::register_exception<DegenerateParameters>(m, "DegenerateParameters");
  py::register_exception<UndefinedMixingAngle>(m, "UndefinedMixingAngle");
  py::register_exception<EmptyGrid>(m, "EmptyGrid");

  // ---- fock_algebra -------------------------------------------------------
  m.def("annihilation", [](int n) { return annihilation(TruncationDim(n)); }, py::arg("n_max"));
  m.def("creation", [](int n) { return creation(TruncationDim(n)); }, py::arg("n_max"));
  m.def("number", [](int n) { return number(TruncationDim(n)); }, py::arg("n_max"));
  m.def("quadrature_x", [](int n) { return quadrature_x(TruncationDim(n)); }, py::arg("n_max"));
  m.def("quadrature_p", [](int n) { return quadrature_p(TruncationDim(n)); }, py::arg("n_max"));
  m.def("pauli", [](const std::string& axis) {
    if (axis == "x") return pauli(PauliAxis::x);
    if (axis == "y") return pauli(PauliAxis::y);
    if (axis == "z") return pauli(PauliAxis::z);
    throw ValidationError("axis must be 'x', 'y' or 'z'");
  }, py::arg("axis"));
  m.def("sigma_plus", &sigma_plus);
  m.def("sigma_minus", &sigma_minus);
  m.def("kron", &kron, py::arg("a"), py::arg("b"));

  // ---- hamiltonians -------------------------------------------------------
  py::class_<JCParams>(m, "JCParams")
      .def(py::init([](double omega, double nu, double g) { return JCParams{omega, nu, g}; }),
           py::arg("omega") = 1.0, py::arg("nu") = 1.0, py::arg("g") = 0.0)
      .def_readwrite("omega", &JCParams::omega)
      .def_readwrite("nu", &JCParams::nu)
      .def_readwrite("g", &JCParams::g)
      .def_property_readonly("delta", &JCParams::delta);

  py::class_<RabiParams>(m, "RabiParams")
      .def(py::init([](double omega, double nu, double g) { return RabiParams{omega, nu, g}; }),
           py::arg("omega") = 1.0, py::arg("nu") = 1.0, py::arg("g") = 0.0)
      .def_readwrite("omega", &RabiParams::omega)
      .def_readwrite("nu", &RabiParams::nu)
      .def_readwrite("g", &RabiParams::g);

  py::class_<LambdaParams>(m, "LambdaParams")
      .def(py::init([](double e1, double e2, double e3, double kappa, double g, double chi) {
             return LambdaParams{e1, e2, e3, kappa, g, chi};
           }),
           py::arg("E1") = 0.0, py::arg("E2") = 0.0, py::arg("E3") = 0.0,
           py::arg("kappa") = 0.0, py::arg("g") = 0.0, py::arg("chi") = 0.0)
      .def_readwrite("E1", &LambdaParams::E1)
      .def_readwrite("E2", &LambdaParams::E2)
      .def_readwrite("E3", &LambdaParams::E3)
      .def_readwrite("kappa", &LambdaParams::kappa)
      .def_readwrite("g", &LambdaParams::g)
      .def_readwrite("chi", &LambdaParams::chi)
      .def_property_readonly("delta", &LambdaParams::delta);

  m.def("build_jc",
        [](const JCParams& p, int n) { return build_jc(p, TruncationDim(n)); },
        py::arg("params"), py::arg("n_max"));
  m.def("build_jc_rotated",
        [](const JCParams& p, double phi, int n) {
          return build_jc_rotated(p, PhaseAngle(phi), TruncationDim(n));
        },
        py::arg("params"), py::arg("phi"), py::arg("n_max"));
  m.def("build_rabi",
        [](const RabiParams& p, int n) { return build_rabi(p, TruncationDim(n)); },
        py::arg("params"), py::arg("n_max"));
  m.def("build_rabi_rotated",
        [](const RabiParams& p, double phi, int n) {
          return build_rabi_rotated(p, PhaseAngle(phi), TruncationDim(n));
        },
        py::arg("params"), py::arg("phi"), py::arg("n_max"));
  m.def("phase_rotation_operator",
        [](double phi, int n) { return phase_rotation_operator(PhaseAngle(phi), TruncationDim(n)); },
        py::arg("phi"), py::arg("n_max"));
  m.def("build_lambda_potential_matrix", &build_lambda_potential_matrix, py::arg("params"),
        py::arg("x"));

  py::class_<EffectiveField>(m, "EffectiveField")
      .def_readonly("bx", &EffectiveField::bx)
      .def_readonly("by", &EffectiveField::by)
      .def_readonly("bz", &EffectiveField::bz)
      .def_readonly("scalar", &EffectiveField::scalar);
  m.def("effective_field",
        [](const JCParams& p, double x, double pp, double phi) {
          return effective_field(p, x, pp, PhaseAngle(phi));
        },
        py::arg("params"), py::arg("x"), py::arg("p"), py::arg("phi") = 0.0);
  m.def("effective_field",
        [](const RabiParams& p, double x, double pp, double phi) {
          return effective_field(p, x, pp, PhaseAngle(phi));
        },
        py::arg("params"), py::arg("x"), py::arg("p"), py::arg("phi") = 0.0);

  // ---- eigensolve ----------------------------------------------------------
  py::class_<EigenDecomposition>(m, "EigenDecomposition")
      .def_readonly("values", &EigenDecomposition::values)
      .def_readonly("vectors", &EigenDecomposition::vectors);
  m.def("hermitian_eig", [](const ComplexMatrix& h) { return hermitian_eig(h); }, py::arg("h"));
  m.def("ground_state", [](const ComplexMatrix& h) { return ground_state(h); }, py::arg("h"));

  // ---- berry ---------------------------------------------------------------
  py::class_<StateFamily>(m, "StateFamily")
      .def_readonly("states", &StateFamily::states)
      .def_readonly("band_label", &StateFamily::band_label)
      .def_readonly("n_trunc", &StateFamily::n_trunc)
      .def_readonly("min_overlap", &StateFamily::min_overlap)
      .def_readonly("top_occupation", &StateFamily::top_occupation);

  py::class_<BerryPhaseResult>(m, "BerryPhaseResult")
      .def_readonly("gamma", &BerryPhaseResult::gamma)
      .def_readonly("raw_sum", &BerryPhaseResult::raw_sum)
      .def_readonly("steps", &BerryPhaseResult::steps)
      .def_readonly("n_trunc", &BerryPhaseResult::n_trunc)
      .def_readonly("min_overlap", &BerryPhaseResult::min_overlap)
      .def_readonly("top_occupation", &BerryPhaseResult::top_occupation);

  m.def("jc_eigenstate_family",
        [](const JCParams& p, int steps, int band_n, const std::string& branch, int n_max) {
          const TruncationDim dim(n_max);
          return eigenstate_family(
              [p, dim](double phi) { return build_jc_rotated(p, PhaseAngle(phi), dim); },
              LoopSpec(steps), jc_band(p, band_n, branch_from_string(branch)), n_max);
        },
        py::arg("params"), py::arg("steps"), py::arg("n"), py::arg("branch"), py::arg("n_max"));
  m.def("rabi_eigenstate_family",
        [](const RabiParams& p, int steps, int ordinal, int n_max) {
          const TruncationDim dim(n_max);
          return eigenstate_family(
              [p, dim](double phi) { return build_rabi_rotated(p, PhaseAngle(phi), dim); },
              LoopSpec(steps), BandSelector::ordinal(ordinal), n_max);
        },
        py::arg("params"), py::arg("steps"), py::arg("ordinal"), py::arg("n_max"));
  m.def("wilson_loop_phase",
        [](const StateFamily& family) { return wilson_loop_phase(family); }, py::arg("family"));
  m.def("jc_analytic_phase",
        [](double delta, double g, int n, const std::string& branch) {
          return jc_analytic_phase(delta, g, n, branch_from_string(branch));
        },
        py::arg("delta"), py::arg("g"), py::arg("n"), py::arg("branch") = "+");
  m.def("ci_encircle_phase",
        [](double delta, double g, double radius, const std::string& branch) {
          return ci_encircle_phase(delta, g, radius, branch_from_string(branch));
        },
        py::arg("delta"), py::arg("g"), py::arg("radius"), py::arg("branch") = "+");
  m.def("jt_encircle_phase",
        [](double nu, double g, double radius, const std::string& branch) {
          return jt_encircle_phase(nu, g, radius, branch_from_string(branch));
        },
        py::arg("nu"), py::arg("g"), py::arg("radius"), py::arg("branch") = "+");
  m.def("number_expectation_phase", &number_expectation_phase, py::arg("state"));
  m.def("mod2pi_distance", &mod2pi_distance, py::arg("a"), py::arg("b"));
  m.def("principal_angle", &principal_angle, py::arg("angle"));

  // ---- surfaces --------------------------------------------------------------
  py::class_<Grid>(m, "Grid")
      .def(py::init<double, double, int, double, double, int>(), py::arg("x_min"),
           py::arg("x_max"), py::arg("nx"), py::arg("p_min"), py::arg("p_max"), py::arg("np"))
      .def_readonly("x_min", &Grid::x_min)
      .def_readonly("x_max", &Grid::x_max)
      .def_readonly("p_min", &Grid::p_min)
      .def_readonly("p_max", &Grid::p_max)
      .def_readonly("nx", &Grid::nx)
      .def_readonly("np", &Grid::np);

  py::class_<SurfaceGrid>(m, "SurfaceGrid")
      .def_property_readonly("grid", [](const SurfaceGrid& s) { return s.grid; })
      .def_property_readonly("sheet_names",
                             [](const SurfaceGrid& s) {
                               std::vector<std::string> names;
                               for (const auto& [name, values] : s.sheets) names.push_back(name);
                               return names;
                             })
      .def("sheet", [](const SurfaceGrid& s, const std::string& name) { return s.sheet(name); },
           py::arg("name"));

  py::class_<DegeneracyReport>(m, "DegeneracyReport")
      .def_readonly("min_gap", &DegeneracyReport::min_gap)
      .def_readonly("argmin_nodes", &DegeneracyReport::argmin_nodes)
      .def_property_readonly(
          "classification",
          [](const DegeneracyReport& r) { return to_string(r.classification); })
      .def_readonly("gap_scaling_exponent", &DegeneracyReport::gap_scaling_exponent);

  m.def("jc_surfaces", &jc_surfaces, py::arg("delta"), py::arg("g"), py::arg("grid"));
  m.def("rabi_surfaces", &rabi_surfaces, py::arg("omega"), py::arg("nu"), py::arg("g"),
        py::arg("grid"));
  m.def("lambda_surfaces", &lambda_surfaces, py::arg("params"), py::arg("omega"), py::arg("grid"));
  m.def("detect_degeneracy", &detect_degeneracy, py::arg("surface"), py::arg("sheet_a"),
        py::arg("sheet_b"), py::arg("tol"));

  py::class_<BoSpinEigenstates>(m, "BoSpinEigenstates")
      .def_readonly("theta", &BoSpinEigenstates::theta)
      .def_readonly("v_plus", &BoSpinEigenstates::v_plus)
      .def_readonly("v_minus", &BoSpinEigenstates::v_minus);
  m.def("bo_spin_eigenstates_rabi",
        [](double x, double p, double phi, double nu) {
          return bo_spin_eigenstates_rabi(x, p, PhaseAngle(phi), nu);
        },
        py::arg("x"), py::arg("p"), py::arg("phi"), py::arg("nu"));

  py::class_<RealGaugeConnection>(m, "RealGaugeConnection")
      .def_readonly("increments", &RealGaugeConnection::increments)
      .def_readonly("total", &RealGaugeConnection::total);
  m.def("real_gauge_connection",
        [](double radius, int steps, double nu, const std::string& branch) {
          return real_gauge_connection(radius, LoopSpec(steps), nu, branch_from_string(branch));
        },
        py::arg("radius"), py::arg("steps"), py::arg("nu"), py::arg("branch") = "+");
}
