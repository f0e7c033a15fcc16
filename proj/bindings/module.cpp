#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <random>

#include "entpower/entangling_power.hpp"
#include "entpower/states.hpp"

namespace py = pybind11;
using namespace entpower;

namespace {

std::vector<int> infer_dims(const Matrix& u, int d1, int d2) {
  if (d1 > 0 && d2 > 0) return {d1, d2};
  const int d = static_cast<int>(std::llround(std::sqrt(double(u.rows()))));
  if (static_cast<long long>(d) * d != u.rows())
    throw std::invalid_argument(
        "matrix dimension is not a perfect square; pass d1 and d2 explicitly");
  return {d, d};
}

MultipartiteOperator as_two_qudit(const Matrix& u, int d1, int d2) {
  return {u, infer_dims(u, d1, d2)};
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "sum") return GateKind::kSum;
  if (name == "dsum") return GateKind::kDsum;
  if (name == "swap") return GateKind::kSwap;
  if (name == "cphase") return GateKind::kCphase;
  throw std::invalid_argument("closed forms exist for sum, dsum, swap, cphase");
}

EntropyKind entropy_from_name(const std::string& name) {
  if (name == "linear") return EntropyKind::kLinear;
  if (name == "von-neumann") return EntropyKind::kVonNeumann;
  throw std::invalid_argument("entropy must be 'linear' or 'von-neumann'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entangling power and operator entanglement of two-qudit gates";

  // gate constructors
  m.def("shift_x", &shift_x, py::arg("d"));
  m.def("clock_z", &clock_z, py::arg("d"));
  m.def("fourier", &fourier, py::arg("d"));
  m.def("sum_gate",
        [](int d, bool control_second) {
          return sum_gate(d, control_second ? SumDirection::kControlSecond
                                            : SumDirection::kControlFirst)
              .matrix();
        },
        py::arg("d"), py::arg("control_second") = false);
  m.def("cphase_gate", [](int d) { return cphase_gate(d).matrix(); }, py::arg("d"));
  m.def("dsum_gate", [](int d) { return dsum_gate(d).matrix(); }, py::arg("d"));
  m.def("swap_gate", [](int d) { return swap_gate(d).matrix(); }, py::arg("d"));
  m.def("spin_gate", [](double theta, int d) { return spin_gate(theta, d).matrix(); },
        py::arg("theta"), py::arg("d"));
  m.def("controlled_u",
        [](const std::vector<Matrix>& blocks) { return controlled_u(blocks).matrix(); },
        py::arg("blocks"));
  m.def("haar_random_unitary",
        [](int d, std::uint64_t seed) {
          std::mt19937_64 rng(seed);
          return haar_random_unitary(d, rng);
        },
        py::arg("d"), py::arg("seed"));

  // states
  m.def("haar_random_state",
        [](int dim, std::uint64_t seed) {
          std::mt19937_64 rng(seed);
          return haar_random_state(dim, rng).amplitudes();
        },
        py::arg("dim"), py::arg("seed"));
  m.def("maximally_entangled_pair",
        [](int d) { return maximally_entangled_pair(d).amplitudes(); }, py::arg("d"));
  m.def("schmidt_spectrum",
        [](const Vector& amplitudes, const std::vector<int>& dims, int n_left) {
          const PureState psi(amplitudes, dims);
          return schmidt_spectrum(psi, Bipartition::prefix(
                                           n_left, static_cast<int>(dims.size())))
              .lambdas;
        },
        py::arg("amplitudes"), py::arg("dims"), py::arg("n_left") = 1);
  m.def("von_neumann_entropy",
        [](const Matrix& rho) { return von_neumann_entropy(rho); }, py::arg("rho"));
  m.def("linear_entropy", [](const Matrix& rho) { return linear_entropy(rho); },
        py::arg("rho"));

  // operator entanglement
  m.def("operator_schmidt_coefficients",
        [](const Matrix& op, const std::vector<int>& dims, int n_left) {
          const MultipartiteOperator mo(op, dims);
          return operator_schmidt(mo, Bipartition::prefix(
                                          n_left, static_cast<int>(dims.size())))
              .coefficients;
        },
        py::arg("op"), py::arg("dims"), py::arg("n_left") = 1);
  m.def("linear_operator_entanglement",
        [](const Matrix& u, int d1, int d2) {
          return linear_operator_entanglement(as_two_qudit(u, d1, d2),
                                              Bipartition::prefix(1, 2));
        },
        py::arg("u"), py::arg("d1") = 0, py::arg("d2") = 0);
  m.def("von_neumann_operator_entanglement",
        [](const Matrix& u, int d1, int d2) {
          return von_neumann_operator_entanglement(as_two_qudit(u, d1, d2),
                                                   Bipartition::prefix(1, 2));
        },
        py::arg("u"), py::arg("d1") = 0, py::arg("d2") = 0);
  m.def("linear_op_ent_via_trace",
        [](const Matrix& u, int d1, int d2, int d_cap) {
          return linear_op_ent_via_trace(as_two_qudit(u, d1, d2),
                                         Bipartition::prefix(1, 2), d_cap);
        },
        py::arg("u"), py::arg("d1") = 0, py::arg("d2") = 0,
        py::arg("d_cap") = kDefaultAssistedTraceCap);
  m.def("spin_A_matrix", &spin_A_matrix, py::arg("theta"), py::arg("d"));
  m.def("spin_linear_entanglement", &spin_linear_entanglement, py::arg("theta"),
        py::arg("d"));
  m.def("theta_grid", &theta_grid, py::arg("points") = 2001);
  m.def("spin_curve", &spin_curve, py::arg("d"), py::arg("grid"));
  m.def("detect_spin_maxima",
        [](int d, const std::vector<double>& grid, const std::vector<double>& curve) {
          std::vector<std::tuple<int, double, double>> out;
          for (const auto& mx : detect_spin_maxima(d, grid, curve))
            out.emplace_back(mx.grid_index, mx.theta, mx.value);
          return out;
        },
        py::arg("d"), py::arg("grid"), py::arg("curve"));

  // entangling powers
  m.def("ep_unassisted_trace",
        [](const Matrix& u, int d1, int d2) {
          return ep_unassisted_trace(as_two_qudit(u, d1, d2));
        },
        py::arg("u"), py::arg("d1") = 0, py::arg("d2") = 0);
  m.def("ep_unassisted_schmidt",
        [](const Matrix& u) { return ep_unassisted_schmidt(as_two_qudit(u, 0, 0)); },
        py::arg("u"));
  m.def("ep_assisted_schmidt",
        [](const Matrix& u) { return ep_assisted_schmidt(as_two_qudit(u, 0, 0)); },
        py::arg("u"));
  m.def("ep_assisted_trace",
        [](const Matrix& u, int d_cap) {
          return ep_assisted_trace(as_two_qudit(u, 0, 0), d_cap);
        },
        py::arg("u"), py::arg("d_cap") = kDefaultAssistedTraceCap);
  m.def("ep_monte_carlo",
        [](const Matrix& u, bool assisted, const std::string& entropy, long samples,
           std::uint64_t seed) {
          const McEstimate mc = ep_monte_carlo(as_two_qudit(u, 0, 0), assisted,
                                               entropy_from_name(entropy), samples,
                                               seed);
          return py::make_tuple(mc.estimate, mc.std_error);
        },
        py::arg("u"), py::arg("assisted") = false, py::arg("entropy") = "linear",
        py::arg("samples") = 20000, py::arg("seed") = 0);
  m.def("bar_transform", &bar_transform, py::arg("e"));
  m.def("max_entanglement_estimate",
        [](const Matrix& u, bool assisted, int restarts, int iterations,
           std::uint64_t seed) {
          const auto result = max_entanglement_estimate(as_two_qudit(u, 0, 0),
                                                        assisted, restarts,
                                                        iterations, seed);
          return py::make_tuple(result.value, result.witness_left,
                                result.witness_right);
        },
        py::arg("u"), py::arg("assisted") = false, py::arg("restarts") = 12,
        py::arg("iterations") = 400, py::arg("seed") = 20240901);
  m.def("closed_form_power",
        [](const std::string& gate, long long d, bool assisted) {
          return boost::rational_cast<double>(
              closed_form_power(gate_kind_from_name(gate), d, assisted));
        },
        py::arg("gate"), py::arg("d"), py::arg("assisted") = false);
  m.def("closed_form_power_fraction",
        [](const std::string& gate, long long d, bool assisted) {
          const Rational r = closed_form_power(gate_kind_from_name(gate), d, assisted);
          return py::make_tuple(r.numerator(), r.denominator());
        },
        py::arg("gate"), py::arg("d"), py::arg("assisted") = false);
  m.def("closed_form_operator_entanglement",
        [](const std::string& gate, long long d) {
          return boost::rational_cast<double>(
              closed_form_operator_entanglement(gate_kind_from_name(gate), d));
        },
        py::arg("gate"), py::arg("d"));
  m.def("prop1_check",
        [](const std::vector<Matrix>& blocks) {
          const Prop1Report rep = prop1_check(ControlledGate(blocks));
          py::dict out;
          out["d"] = rep.d;
          out["ep"] = rep.ep;
          out["ep_anc"] = rep.ep_anc;
          out["operator_entanglement"] = rep.operator_ent;
          out["dev_unassisted"] = rep.dev_unassisted;
          out["dev_assisted"] = rep.dev_assisted;
          out["dev_ratio"] = rep.dev_ratio;
          out["dev_es1"] = rep.dev_es1;
          out["dev_e1324"] = rep.dev_e1324;
          out["passed"] = rep.passed;
          return out;
        },
        py::arg("blocks"));

  m.attr("__version__") = "0.1.0";
}
