#include "entpower/entangling_power.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "entpower/states.hpp"

namespace entpower {

namespace {

void require_two_systems(const MultipartiteOperator& u, const char* what) {
  if (u.num_systems() != 2)
    throw std::invalid_argument(std::string(what) + ": two-system operator required");
}

void require_equal_dims(const MultipartiteOperator& u, const char* what) {
  require_two_systems(u, what);
  if (u.dims()[0] != u.dims()[1])
    throw std::invalid_argument(std::string(what) + ": equal qudit dimensions required");
}

// U placed on (A, B) of the register (A', A, B, B').
MultipartiteOperator on_ancilla_register(const MultipartiteOperator& u) {
  const int d1 = u.dims()[0], d2 = u.dims()[1];
  return embed(u, {d1, d1, d2, d2}, {1, 2});
}

double entropy_of(const SchmidtSpectrum& spectrum, EntropyKind kind) {
  return kind == EntropyKind::kLinear ? linear_entropy(spectrum)
                                      : von_neumann_entropy(spectrum);
}

}  // namespace

double ep_unassisted_trace(const MultipartiteOperator& u) {
  require_two_systems(u, "ep_unassisted_trace");
  require_unitary(u);
  const double d1 = u.dims()[0], d2 = u.dims()[1];
  const Complex t1 = doubled_swap_trace(u, {0}, {0});
  const Complex t2 = doubled_swap_trace(u, {1}, {0});
  const double numerator = d1 * d2 * d2 + d2 * d1 * d1 + t1.real() + t2.real();
  return 1.0 - numerator / (d1 * (d1 + 1.0) * d2 * (d2 + 1.0));
}

double ep_unassisted_schmidt(const MultipartiteOperator& u) {
  require_equal_dims(u, "ep_unassisted_schmidt");
  require_unitary(u);
  const int d = u.dims()[0];
  const auto split = Bipartition::prefix(1, 2);
  const auto swap = swap_gate(d);
  const MultipartiteOperator us(u.matrix() * swap.matrix(), u.dims());

  const double e_u = linear_operator_entanglement(u, split);
  const double e_us = linear_operator_entanglement(us, split);
  const double e_s = linear_operator_entanglement(swap, split);
  const double factor = static_cast<double>(d) / (d + 1.0);
  return factor * factor * (e_u + e_us - e_s);
}

double ep_assisted_schmidt(const MultipartiteOperator& u) {
  require_equal_dims(u, "ep_assisted_schmidt");
  require_unitary(u);
  const int d = u.dims()[0];
  const auto cut = Bipartition::prefix(2, 4);
  const auto embedded = on_ancilla_register(u);
  const std::vector<int> dims4{d, d, d, d};
  const Matrix swaps =
      swap_builder(dims4, 0, 2).matrix() * swap_builder(dims4, 1, 3).matrix();

  // E(U) across the cut equals the two-system operator entanglement of U.
  const double e_u = linear_operator_entanglement(u, Bipartition::prefix(1, 2));
  const double e_us = linear_operator_entanglement(
      MultipartiteOperator(embedded.matrix() * swaps, dims4), cut);
  const double e_s =
      linear_operator_entanglement(MultipartiteOperator(swaps, dims4), cut);

  const double dd = static_cast<double>(d) * d;
  const double factor = dd / (dd + 1.0);
  return factor * factor * (e_u + e_us - e_s);
}

double ep_assisted_trace(const MultipartiteOperator& u, int d_cap) {
  require_two_systems(u, "ep_assisted_trace");
  require_unitary(u);
  const int d1 = u.dims()[0], d2 = u.dims()[1];
  if (std::max(d1, d2) > d_cap)
    throw std::invalid_argument(
        "ep_assisted_trace: qudit dimension exceeds the trace cap");
  const auto embedded = on_ancilla_register(u);

  const double a = static_cast<double>(d1) * d1;  // d1^2
  const double b = static_cast<double>(d2) * d2;  // d2^2
  const Complex t1 = doubled_swap_trace(embedded, {0, 1}, {0, 1});
  const Complex t2 = doubled_swap_trace(embedded, {2, 3}, {0, 1});
  const double numerator = a * b * b + b * a * a + t1.real() + t2.real();
  return 1.0 - numerator / (a * (a + 1.0) * b * (b + 1.0));
}

std::uint64_t derive_sample_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 over the pair
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

McEstimate ep_monte_carlo(const MultipartiteOperator& u, bool assisted,
                          EntropyKind kind, long n_samples, std::uint64_t seed) {
  require_two_systems(u, "ep_monte_carlo");
  require_unitary(u);
  if (n_samples < 2)
    throw std::invalid_argument("ep_monte_carlo: at least two samples required");
  const int d1 = u.dims()[0], d2 = u.dims()[1];

  const MultipartiteOperator gate = assisted ? on_ancilla_register(u) : u;
  const Bipartition cut = assisted ? Bipartition::prefix(2, 4)
                                   : Bipartition::prefix(1, 2);
  const std::vector<int> dims = gate.dims();

  std::vector<double> values(static_cast<size_t>(n_samples));
  for (long i = 0; i < n_samples; ++i) {
    std::mt19937_64 rng(derive_sample_seed(seed, static_cast<std::uint64_t>(i)));
    PureState left = haar_random_state(assisted ? d1 * d1 : d1, rng);
    PureState right = haar_random_state(assisted ? d2 * d2 : d2, rng);
    const PureState input = with_dims(kron(left, right), dims);
    const PureState output = apply(gate, input);
    values[static_cast<size_t>(i)] = entropy_of(schmidt_spectrum(output, cut), kind);
  }

  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(n_samples);
  double ssq = 0.0;
  for (double v : values) ssq += (v - mean) * (v - mean);
  const double stddev = std::sqrt(ssq / static_cast<double>(n_samples - 1));
  return {mean, stddev / std::sqrt(static_cast<double>(n_samples)), n_samples, seed};
}

double bar_transform(double e) {
  if (e < 0.0 || e >= 1.0)
    throw std::domain_error("bar_transform: argument must lie in [0, 1)");
  return -std::log1p(-e);
}

namespace {

// Projected ascent on the product-input manifold for the von Neumann entropy
// of W(x (x) y) across the dl|dr cut. Returns the achieved entropy.
double ascend(const Matrix& w, int dl, int dr, Vector& x, Vector& y,
              int iterations) {
  const auto objective = [&](const Vector& xv, const Vector& yv) {
    const Vector phi = w * kron(xv, yv);
    Eigen::Map<const Matrix> zr(phi.data(), dr, dl);  // column-major: (r, l)
    const Matrix z = zr.transpose();
    Eigen::SelfAdjointEigenSolver<Matrix> es(z * z.adjoint(),
                                             Eigen::EigenvaluesOnly);
    double s = 0.0;
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
      const double lambda = std::max(es.eigenvalues()(k), 0.0);
      if (lambda > 1e-300) s -= lambda * std::log(lambda);
    }
    return s;
  };

  // gradient of the entropy wrt conj(x) and conj(y)
  const auto gradients = [&](const Vector& xv, const Vector& yv, Vector& gx,
                             Vector& gy) {
    const Vector phi = w * kron(xv, yv);
    Eigen::Map<const Matrix> zr(phi.data(), dr, dl);
    const Matrix z = zr.transpose();  // dl x dr
    Eigen::SelfAdjointEigenSolver<Matrix> es(z * z.adjoint());
    const Matrix& q = es.eigenvectors();
    Vector f(es.eigenvalues().size());
    for (int k = 0; k < f.size(); ++k) {
      const double lambda = std::max(es.eigenvalues()(k), 1e-18);
      f(k) = Complex(-(std::log(lambda) + 1.0), 0.0);
    }
    // M phi with M = (-ln(rho) - 1) (x) I
    const Matrix mz = q * f.asDiagonal() * q.adjoint() * z;
    Vector mphi(dl * dr);
    for (int l = 0; l < dl; ++l)
      for (int r = 0; r < dr; ++r) mphi(l * dr + r) = mz(l, r);
    const Vector back = w.adjoint() * mphi;
    gx = Vector::Zero(xv.size());
    gy = Vector::Zero(yv.size());
    for (int i = 0; i < xv.size(); ++i)
      for (int j = 0; j < yv.size(); ++j) {
        gx(i) += back(i * yv.size() + j) * std::conj(yv(j));
        gy(j) += back(i * yv.size() + j) * std::conj(xv(i));
      }
  };

  double best = objective(x, y);
  double step = 0.5;
  Vector gx, gy;
  for (int it = 0; it < iterations; ++it) {
    gradients(x, y, gx, gy);
    gx -= x * x.dot(gx);  // project out the phase/norm direction
    gy -= y * y.dot(gy);
    const double gnorm = std::sqrt(gx.squaredNorm() + gy.squaredNorm());
    if (gnorm < 1e-13) break;

    bool accepted = false;
    for (int halvings = 0; halvings < 30; ++halvings) {
      Vector xt = x + step * gx;
      Vector yt = y + step * gy;
      xt /= xt.norm();
      yt /= yt.norm();
      const double val = objective(xt, yt);
      if (val > best + 1e-15) {
        x = std::move(xt);
        y = std::move(yt);
        best = val;
        accepted = true;
        step *= 1.3;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return best;
}

Vector uniform_vector(int dim) {
  return Vector::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
}

Vector basis_vector(int dim, int k) {
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  return v;
}

}  // namespace

MaxEntanglementResult max_entanglement_estimate(const MultipartiteOperator& u,
                                                bool assisted, int restarts,
                                                int iterations,
                                                std::uint64_t seed) {
  require_two_systems(u, "max_entanglement_estimate");
  require_unitary(u);
  const int d1 = u.dims()[0], d2 = u.dims()[1];
  const MultipartiteOperator gate = assisted ? on_ancilla_register(u) : u;
  const int dl = assisted ? d1 * d1 : d1;
  const int dr = assisted ? d2 * d2 : d2;
  const Matrix& w = gate.matrix();

  std::vector<std::pair<Vector, Vector>> starts;
  starts.emplace_back(basis_vector(dl, 0), basis_vector(dr, 0));
  starts.emplace_back(uniform_vector(dl), basis_vector(dr, 0));
  starts.emplace_back(basis_vector(dl, 0), uniform_vector(dr));
  starts.emplace_back(uniform_vector(dl), uniform_vector(dr));
  if (assisted) {
    // maximally entangled ancilla-system pairs
    starts.emplace_back(maximally_entangled_pair(d1).amplitudes(),
                        maximally_entangled_pair(d2).amplitudes());
  }
  std::mt19937_64 rng(seed);
  for (int r = 0; r < restarts; ++r)
    starts.emplace_back(haar_random_state(dl, rng).amplitudes(),
                        haar_random_state(dr, rng).amplitudes());

  MaxEntanglementResult result;
  result.value = -1.0;
  for (auto& [x, y] : starts) {
    const double val = ascend(w, dl, dr, x, y, iterations);
    if (val > result.value) {
      result.value = val;
      result.witness_left = x;
      result.witness_right = y;
    }
  }

  // re-evaluate at the witness so the reported value is certified
  const PureState input = with_dims(
      PureState(kron(result.witness_left, result.witness_right), {dl, dr}),
      gate.dims());
  const PureState output = apply(gate, input);
  const Bipartition cut = assisted ? Bipartition::prefix(2, 4)
                                   : Bipartition::prefix(1, 2);
  result.value = von_neumann_entropy(schmidt_spectrum(output, cut));
  return result;
}

Rational closed_form_power(GateKind kind, long long d, bool assisted) {
  if (d < 2) throw std::invalid_argument("closed_form_power: d must be >= 2");
  const long long d2 = d * d;
  switch (kind) {
    case GateKind::kSum:
    case GateKind::kCphase:
      return assisted ? Rational(d2 * d * (d - 1), (d2 + 1) * (d2 + 1))
                      : Rational(d * (d - 1), (d + 1) * (d + 1));
    case GateKind::kDsum:
      return assisted ? Rational(d2 * d2 - d2 - d + 1, (d2 + 1) * (d2 + 1))
                      : Rational(d * (d - 1), (d + 1) * (d + 1));
    case GateKind::kSwap:
      return assisted ? Rational((d2 - 1) * (d2 - 1), (d2 + 1) * (d2 + 1))
                      : Rational(0);
    default:
      throw std::invalid_argument("closed_form_power: unsupported gate kind");
  }
}

Rational closed_form_operator_entanglement(GateKind kind, long long d) {
  if (d < 2)
    throw std::invalid_argument("closed_form_operator_entanglement: d must be >= 2");
  switch (kind) {
    case GateKind::kSum:
    case GateKind::kCphase:
      return Rational(d - 1, d);
    case GateKind::kDsum:
    case GateKind::kSwap:
      return Rational(d * d - 1, d * d);
    default:
      throw std::invalid_argument(
          "closed_form_operator_entanglement: unsupported gate kind");
  }
}

double bar_closed_form(GateKind kind, long long d, bool assisted) {
  const Rational rest = Rational(1) - closed_form_power(kind, d, assisted);
  return -std::log(boost::rational_cast<double>(rest));
}

double asymptotic_leading_term(GateKind kind, bool assisted, int d) {
  const double ln_d = std::log(static_cast<double>(d));
  switch (kind) {
    case GateKind::kSum:
    case GateKind::kCphase:
      return assisted ? ln_d : ln_d - std::log(3.0);
    case GateKind::kDsum:
      return assisted ? 2.0 * ln_d - std::log(3.0) : ln_d - std::log(3.0);
    case GateKind::kSwap:
      return assisted ? 2.0 * ln_d - std::log(4.0) : 0.0;
    default:
      throw std::invalid_argument("asymptotic_leading_term: unsupported gate kind");
  }
}

std::vector<AsymptoticRow> asymptotic_table(const std::vector<GateKind>& gates,
                                            const std::vector<int>& ds) {
  std::vector<AsymptoticRow> rows;
  for (GateKind kind : gates)
    for (bool assisted : {false, true})
      for (int d : ds) {
        AsymptoticRow row;
        row.gate = kind;
        row.assisted = assisted;
        row.d = d;
        row.bar_value = bar_closed_form(kind, d, assisted);
        row.leading_term = asymptotic_leading_term(kind, assisted, d);
        row.residual = row.bar_value - row.leading_term;
        rows.push_back(row);
      }
  return rows;
}

Prop1Report prop1_check_operator(const MultipartiteOperator& u) {
  require_equal_dims(u, "prop1_check");
  const int d = u.dims()[0];
  const double dd = static_cast<double>(d) * d;

  Prop1Report report;
  report.d = d;
  report.ep = ep_unassisted_schmidt(u);
  report.ep_anc = ep_assisted_schmidt(u);
  report.operator_ent =
      linear_operator_entanglement(u, Bipartition::prefix(1, 2));

  const double f1 = static_cast<double>(d) / (d + 1.0);
  const double f2 = dd / (dd + 1.0);
  const double ratio = ((dd + d) / (dd + 1.0)) * ((dd + d) / (dd + 1.0));
  report.dev_unassisted = std::abs(report.ep - f1 * f1 * report.operator_ent);
  report.dev_assisted = std::abs(report.ep_anc - f2 * f2 * report.operator_ent);
  report.dev_ratio = std::abs(report.ep_anc - ratio * report.ep);

  const auto split2 = Bipartition::prefix(1, 2);
  const MultipartiteOperator us(u.matrix() * swap_gate(d).matrix(), u.dims());
  report.dev_es1 = std::abs(linear_operator_entanglement(us, split2) -
                            (1.0 - 1.0 / dd));

  const std::vector<int> dims4{d, d, d, d};
  const Matrix swaps =
      swap_builder(dims4, 0, 2).matrix() * swap_builder(dims4, 1, 3).matrix();
  const MultipartiteOperator us4(on_ancilla_register(u).matrix() * swaps, dims4);
  report.dev_e1324 =
      std::abs(linear_operator_entanglement(us4, Bipartition::prefix(2, 4)) -
               (1.0 - 1.0 / (dd * dd)));

  report.passed = report.dev_unassisted <= report.tolerance &&
                  report.dev_assisted <= report.tolerance &&
                  report.dev_ratio <= report.tolerance &&
                  report.dev_es1 <= report.tolerance &&
                  report.dev_e1324 <= report.tolerance;
  return report;
}

Prop1Report prop1_check(const ControlledGate& gate) {
  return prop1_check_operator(gate.assemble());
}

}  // namespace entpower
