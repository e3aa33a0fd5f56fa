#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mcuforge/experiments.hpp"
#include "mcuforge/ldd.hpp"
#include "mcuforge/serialize.hpp"
#include "mcuforge/sim.hpp"
#include "mcuforge/su2.hpp"
#include "mcuforge/verify.hpp"

namespace py = pybind11;
using namespace mcuforge;

namespace {

std::vector<std::vector<cplx>> unitary_rows(const Unitary2& u) {
  return {{u.at(0, 0), u.at(0, 1)}, {u.at(1, 0), u.at(1, 1)}};
}

std::vector<std::vector<cplx>> dense_rows(const DenseMatrix& m) {
  std::vector<std::vector<cplx>> rows(m.dim, std::vector<cplx>(m.dim));
  for (std::uint64_t r = 0; r < m.dim; ++r)
    for (std::uint64_t c = 0; c < m.dim; ++c) rows[r][c] = m.at(r, c);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear-depth synthesis of multi-controlled single-qubit gates";

  py::class_<Unitary2>(m, "Unitary2")
      .def(py::init<cplx, cplx, cplx, cplx>(), py::arg("a"), py::arg("b"), py::arg("c"),
           py::arg("d"))
      .def_static("identity", &Unitary2::identity)
      .def_static("pauli_x", &Unitary2::pauli_x)
      .def_static("pauli_y", &Unitary2::pauli_y)
      .def_static("pauli_z", &Unitary2::pauli_z)
      .def_static("hadamard", &Unitary2::hadamard)
      .def("at", &Unitary2::at, py::arg("row"), py::arg("col"))
      .def("rows", &unitary_rows)
      .def("__eq__", [](const Unitary2& a, const Unitary2& b) { return a == b; })
      .def("__repr__", [](const Unitary2& u) {
        return "Unitary2(" + std::to_string(u.at(0, 0).real()) + "+" +
               std::to_string(u.at(0, 0).imag()) + "j, ...)";
      });

  py::class_<EigenForm2>(m, "EigenForm2")
      .def_readonly("phases", &EigenForm2::phases)
      .def_readonly("basis", &EigenForm2::basis);

  py::class_<ZyzAngles>(m, "ZyzAngles")
      .def_readonly("global_phase", &ZyzAngles::global_phase)
      .def_readonly("theta", &ZyzAngles::theta)
      .def_readonly("phi", &ZyzAngles::phi)
      .def_readonly("lambda_", &ZyzAngles::lambda);

  py::enum_<RootBranch>(m, "RootBranch")
      .value("PRINCIPAL", RootBranch::kPrincipal)
      .value("WRAPPED", RootBranch::kWrapped);

  m.def("make_rx", &make_rx, py::arg("theta"));
  m.def("make_ry", &make_ry, py::arg("theta"));
  m.def("make_rz", &make_rz, py::arg("theta"));
  m.def("compose", &compose);
  m.def("adjoint", &adjoint);
  m.def("eigendecompose", &eigendecompose);
  m.def("principal_root", &principal_root, py::arg("u"), py::arg("k"),
        py::arg("branch") = RootBranch::kPrincipal);
  m.def("zyz_decompose", &zyz_decompose);
  m.def("distance", &distance, py::arg("a"), py::arg("b"), py::arg("up_to_global_phase") = false);
  m.def("random_su2", &random_su2, py::arg("seed"));

  py::enum_<GateKind>(m, "GateKind")
      .value("ONE_QUBIT", GateKind::kOneQubit)
      .value("CONTROLLED", GateKind::kControlled);

  py::class_<Gate>(m, "Gate")
      .def_static("one_qubit", &Gate::one_qubit, py::arg("matrix"), py::arg("target"))
      .def_static("controlled", &Gate::controlled, py::arg("matrix"), py::arg("control"),
                  py::arg("target"))
      .def_readonly("kind", &Gate::kind)
      .def_readonly("matrix", &Gate::matrix)
      .def_readonly("target", &Gate::target)
      .def_readonly("control", &Gate::control)
      .def("is_controlled", &Gate::is_controlled);

  py::class_<Circuit>(m, "Circuit")
      .def(py::init<int, std::string>(), py::arg("width"), py::arg("label") = "")
      .def("add", &Circuit::add)
      .def("append", &Circuit::append)
      .def_property_readonly("width", &Circuit::width)
      .def_property_readonly("label", &Circuit::label)
      .def_property_readonly("gates", &Circuit::gates)
      .def("__len__", &Circuit::size);

  py::class_<DepthReport>(m, "DepthReport")
      .def_readonly("layers", &DepthReport::layers)
      .def_readonly("depth_controlled", &DepthReport::depth_controlled)
      .def_readonly("depth_lowered", &DepthReport::depth_lowered)
      .def_readonly("count_controlled", &DepthReport::count_controlled)
      .def_readonly("count_cx", &DepthReport::count_cx)
      .def_readonly("count_1q", &DepthReport::count_1q);

  m.def("schedule_asap", &schedule_asap);
  m.def("invert", &invert);
  m.def("lower_controlled", &lower_controlled);
  m.def("is_lowered", &is_lowered);
  m.def("to_qasm", &to_qasm);
  m.def("circuit_to_json", &circuit_to_json_string);
  m.def("circuit_from_json", &circuit_from_json_string);

  py::class_<MCGateSpec>(m, "MCGateSpec")
      .def(py::init([](int controls, const Unitary2& unitary) {
             return MCGateSpec{controls, unitary};
           }),
           py::arg("controls"), py::arg("unitary"))
      .def_readonly("controls", &MCGateSpec::controls)
      .def_readonly("unitary", &MCGateSpec::unitary);

  m.def("build_p", &build_p, py::arg("j"), py::arg("base"),
        py::arg("branch") = RootBranch::kPrincipal);
  m.def("build_q", &build_q, py::arg("n"), py::arg("branch") = RootBranch::kPrincipal);
  m.def(
      "build_cnu",
      [](int controls, const Unitary2& unitary, RootBranch branch) {
        return build_cnu({controls, unitary}, branch);
      },
      py::arg("controls"), py::arg("unitary"), py::arg("branch") = RootBranch::kPrincipal);
  m.def("build_p_product", &build_p_product, py::arg("n"), py::arg("base"),
        py::arg("branch") = RootBranch::kPrincipal);
  m.def("depth_formula", &depth_formula);
  m.def("cnu_controlled_count", &cnu_controlled_count);

  py::class_<Statevector>(m, "Statevector")
      .def(py::init<int>(), py::arg("width"))
      .def_static("basis", &Statevector::basis, py::arg("width"), py::arg("index"))
      .def_static("from_amplitudes", &Statevector::from_amplitudes, py::arg("width"),
                  py::arg("amplitudes"))
      .def_property_readonly("width", &Statevector::width)
      .def_property_readonly("amplitudes",
                             [](const Statevector& s) { return s.amplitudes(); })
      .def("norm", &Statevector::norm);

  m.def("apply_gate", &apply_gate);
  m.def("run_statevector", &run_statevector);
  m.def("circuit_unitary", [](const Circuit& c) { return dense_rows(circuit_unitary(c)); });
  m.def(
      "oracle_cnu",
      [](int controls, const Unitary2& unitary, const Statevector& state) {
        return oracle_cnu({controls, unitary}, state);
      },
      py::arg("controls"), py::arg("unitary"), py::arg("state"));

  py::class_<NoiseSpec>(m, "NoiseSpec")
      .def(py::init([](double p, std::uint64_t seed) { return NoiseSpec{p, seed}; }),
           py::arg("p") = 0.0, py::arg("seed") = 0)
      .def_readonly("p", &NoiseSpec::p)
      .def_readonly("seed", &NoiseSpec::seed);

  py::class_<Histogram>(m, "Histogram")
      .def_readonly("width", &Histogram::width)
      .def_readonly("shots", &Histogram::shots)
      .def_readonly("counts", &Histogram::counts)
      .def("bitstring", &Histogram::bitstring)
      .def("probability", &Histogram::probability)
      .def("probability_all_ones", &Histogram::probability_all_ones)
      .def("to_csv", &Histogram::to_csv)
      .def("to_json", [](const Histogram& h) { return h.to_json().dump(); });

  m.def("run_noisy", &run_noisy, py::arg("circuit"), py::arg("input"), py::arg("noise"),
        py::arg("shots"));

  py::class_<ExperimentResult>(m, "ExperimentResult")
      .def_readonly("n", &ExperimentResult::n)
      .def_readonly("p_ones", &ExperimentResult::p_ones)
      .def_readonly("shots", &ExperimentResult::shots)
      .def_readonly("depth_controlled", &ExperimentResult::depth_controlled)
      .def_readonly("depth_lowered", &ExperimentResult::depth_lowered)
      .def_readonly("cx_count", &ExperimentResult::cx_count)
      .def_readonly("noise_p", &ExperimentResult::noise_p);

  py::class_<BenchRow>(m, "BenchRow")
      .def_readonly("n", &BenchRow::n)
      .def_readonly("depth_controlled", &BenchRow::depth_controlled)
      .def_readonly("depth_lowered", &BenchRow::depth_lowered)
      .def_readonly("cx_count", &BenchRow::cx_count)
      .def_readonly("count_formula", &BenchRow::count_formula)
      .def_readonly("depth_formula", &BenchRow::depth_formula);

  m.def("build_experiment_a", &build_experiment_a, py::arg("n"));
  m.def("build_experiment_b", &build_experiment_b, py::arg("n"), py::arg("u"));
  m.def("run_experiment_a", &run_experiment_a, py::arg("n"), py::arg("noise"),
        py::arg("shots") = kDefaultShotsA);
  m.def("run_experiment_b", &run_experiment_b, py::arg("n"), py::arg("u"), py::arg("noise"),
        py::arg("shots") = kDefaultShotsB);
  m.def("depth_scaling_table", &depth_scaling_table, py::arg("n_min"), py::arg("n_max"),
        py::arg("trials"), py::arg("seed") = 7);
  m.def("bench_csv", &bench_csv);
  m.def("experiments_csv", &experiments_csv);

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("n_max", &VerifyOptions::n_max)
      .def_readwrite("trials", &VerifyOptions::trials)
      .def_readwrite("seed", &VerifyOptions::seed)
      .def_readwrite("check_lowered", &VerifyOptions::check_lowered)
      .def_readwrite("states_per_n", &VerifyOptions::states_per_n)
      .def_readwrite("branch", &VerifyOptions::branch);

  py::class_<VerifyFailure>(m, "VerifyFailure")
      .def_readonly("n", &VerifyFailure::n)
      .def_readonly("u_seed", &VerifyFailure::u_seed)
      .def_readonly("error", &VerifyFailure::error)
      .def_readonly("stage", &VerifyFailure::stage);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("passed", &VerifyReport::passed)
      .def_readonly("worst_error_by_n", &VerifyReport::worst_error_by_n)
      .def_readonly("failures", &VerifyReport::failures);

  m.def("verify_decomposition", &verify_decomposition, py::arg("options") = VerifyOptions{});
}
