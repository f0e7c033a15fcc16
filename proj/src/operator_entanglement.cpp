#include "entpower/operator_entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "entpower/states.hpp"

namespace entpower {

namespace {

// Normalized operator-Schmidt spectrum lambda_n = s_n^2 / (dL dR), snapped
// onto the [0,1] boundary within kSpectrumClipTol (same rule as for states).
RealVector normalized_spectrum(const OperatorSchmidt& schmidt) {
  const double norm =
      static_cast<double>(schmidt.d_left) * static_cast<double>(schmidt.d_right);
  RealVector lambdas(schmidt.coefficients.size());
  for (int k = 0; k < schmidt.coefficients.size(); ++k) {
    double lambda = schmidt.coefficients(k) * schmidt.coefficients(k) / norm;
    if (lambda < 0.0) lambda = 0.0;
    if (lambda < kSpectrumClipTol) lambda = 0.0;
    if (lambda > 1.0 - kSpectrumClipTol) {
      if (lambda > 1.0 + kSpectrumClipTol)
        throw std::invalid_argument("operator spectrum entry above one");
      lambda = 1.0;
    }
    lambdas(k) = lambda;
  }
  return lambdas;
}

// Splits flat indices over `dims` into (group digits, rest digits) where
// `group` lists system positions. Only the recomposition table is needed;
// digit order inside each part is arbitrary but consistent.
struct IndexSplit {
  std::int64_t group_dim = 1;
  std::int64_t rest_dim = 1;
  std::vector<std::int64_t> compose;  // group * rest_dim + rest -> flat

  IndexSplit(const std::vector<int>& dims, const std::vector<int>& group) {
    const int n = static_cast<int>(dims.size());
    std::vector<bool> in_group(n, false);
    for (int p : group) in_group.at(p) = true;
    std::int64_t total = 1;
    for (int d : dims) total *= d;
    for (int p = 0; p < n; ++p) (in_group[p] ? group_dim : rest_dim) *= dims[p];

    const auto strides = index_strides(dims);
    compose.resize(total);
    for (std::int64_t flat = 0; flat < total; ++flat) {
      std::int64_t g = 0, r = 0, g_stride = 1, r_stride = 1;
      for (int p = n - 1; p >= 0; --p) {
        const std::int64_t digit = (flat / strides[p]) % dims[p];
        if (in_group[p]) {
          g += digit * g_stride;
          g_stride *= dims[p];
        } else {
          r += digit * r_stride;
          r_stride *= dims[p];
        }
      }
      compose[g * rest_dim + r] = flat;
    }
  }
};

}  // namespace

OperatorSchmidt operator_schmidt(const MultipartiteOperator& op,
                                 const Bipartition& split) {
  MultipartiteOperator arranged = op;
  Bipartition ordered = split;
  if (!split.is_contiguous_prefix()) {
    std::vector<int> perm = split.left();
    perm.insert(perm.end(), split.right().begin(), split.right().end());
    arranged = permute_systems(op, perm);
    ordered = Bipartition::prefix(static_cast<int>(split.left().size()),
                                  split.num_systems());
  }
  const int dl = arranged.dim_of(ordered.left());
  const int dr = arranged.dim_of(ordered.right());
  return {singular_values(reshuffle(arranged, ordered)), dl, dr};
}

void require_unitary(const MultipartiteOperator& op) {
  const Matrix gram = op.matrix().adjoint() * op.matrix();
  if ((gram - Matrix::Identity(op.dim(), op.dim())).cwiseAbs().maxCoeff() >
      kFactorTol)
    throw std::invalid_argument("operator entanglement requires a unitary input");
}

double linear_operator_entanglement(const MultipartiteOperator& op,
                                    const Bipartition& split) {
  require_unitary(op);
  const RealVector lambdas = normalized_spectrum(operator_schmidt(op, split));
  double purity = 0.0;
  for (int k = 0; k < lambdas.size(); ++k) purity += lambdas(k) * lambdas(k);
  return 1.0 - purity;
}

double von_neumann_operator_entanglement(const MultipartiteOperator& op,
                                         const Bipartition& split) {
  require_unitary(op);
  const RealVector lambdas = normalized_spectrum(operator_schmidt(op, split));
  double s = 0.0;
  for (int k = 0; k < lambdas.size(); ++k)
    if (lambdas(k) > 0.0) s -= lambdas(k) * std::log(lambdas(k));
  return s + 0.0;
}

Complex doubled_swap_trace(const MultipartiteOperator& v,
                           const std::vector<int>& sigma,
                           const std::vector<int>& tau) {
  if (sigma.empty() || tau.empty())
    throw std::invalid_argument("doubled_swap_trace: empty swap subset");
  const Matrix& m = v.matrix();

  // Rows split by tau, columns by sigma:
  //   Tr = sum over row pairs (a1,a2) and column pairs (c1,c2) of
  //        V[a1, mix_sigma(c1,c2).first] V[a2, mix_sigma(c1,c2).second]
  //        conj(V[mix_tau(a1,a2).first, c1]) conj(V[mix_tau(a1,a2).second, c2])
  // Grouping over shared rest digits reduces this to
  //   sum_{w1,w2} Tr( C[w1,w2] C[w2,w1] ),
  //   C[p,q] = sum_z A_{(q,z),(p,z)},
  //   A_{x,y}[p,q] = sum_t V[(p,t), x] conj(V[(q,t), y]).
  const IndexSplit rows(v.dims(), tau);
  const IndexSplit cols(v.dims(), sigma);
  const std::int64_t ds = rows.group_dim;  // tau-part of row indices
  const std::int64_t dt = rows.rest_dim;
  const std::int64_t dw = cols.group_dim;  // sigma-part of column indices
  const std::int64_t dz = cols.rest_dim;

  std::vector<Matrix> c(dw * dw, Matrix::Zero(ds, ds));
  Matrix a(ds, ds);
  for (std::int64_t z = 0; z < dz; ++z) {
    for (std::int64_t w1 = 0; w1 < dw; ++w1) {
      const std::int64_t y = cols.compose[w1 * dz + z];
      for (std::int64_t w2 = 0; w2 < dw; ++w2) {
        const std::int64_t x = cols.compose[w2 * dz + z];
        // A_{x,y}[p,q] = sum_t V[(p,t), x] conj(V[(q,t), y])
        for (std::int64_t p = 0; p < ds; ++p)
          for (std::int64_t q = 0; q < ds; ++q) {
            Complex acc = 0.0;
            for (std::int64_t t = 0; t < dt; ++t)
              acc += m(rows.compose[p * dt + t], x) *
                     std::conj(m(rows.compose[q * dt + t], y));
            a(p, q) = acc;
          }
        c[w1 * dw + w2] += a;
      }
    }
  }

  Complex total = 0.0;
  for (std::int64_t w1 = 0; w1 < dw; ++w1)
    for (std::int64_t w2 = 0; w2 < dw; ++w2)
      total += (c[w1 * dw + w2] * c[w2 * dw + w1]).trace();
  return total;
}

double linear_op_ent_via_trace(const MultipartiteOperator& op,
                               const Bipartition& split, int d_cap) {
  require_unitary(op);
  if (split.num_systems() != op.num_systems())
    throw std::invalid_argument("linear_op_ent_via_trace: split mismatch");
  const int dl = op.dim_of(split.left());
  const int dr = op.dim_of(split.right());
  if (dl != dr)
    throw std::invalid_argument(
        "linear_op_ent_via_trace: equal side dimensions required");
  if (op.num_systems() >= 4) {
    const int d = *std::max_element(op.dims().begin(), op.dims().end());
    if (d > d_cap)
      throw std::invalid_argument(
          "linear_op_ent_via_trace: qudit dimension exceeds the trace cap");
  }

  const Complex t = doubled_swap_trace(op, split.left(), split.left());
  const double norm = static_cast<double>(dl) * dl * dr * dr;
  return 1.0 - t.real() / norm;
}

Matrix spin_A_matrix(double theta, int d) {
  if (d < 2) throw std::invalid_argument("spin_A_matrix: d must be >= 2");
  double reduced = std::fmod(theta, 2.0 * M_PI);
  if (reduced < 0.0) reduced += 2.0 * M_PI;
  Matrix a(d, d);
  for (int mm = 0; mm < d; ++mm)
    for (int nn = 0; nn < d; ++nn) {
      Complex acc = 0.0;
      for (int k = 0; k < d; ++k) acc += std::polar(1.0, reduced * k * (mm - nn));
      a(mm, nn) = acc / static_cast<double>(d * d);
    }
  return a;
}

double spin_linear_entanglement(double theta, int d) {
  const RealVector mu = hermitian_eigenvalues(spin_A_matrix(theta, d));
  double purity = 0.0;
  for (int k = 0; k < mu.size(); ++k) purity += mu(k) * mu(k);
  return 1.0 - purity;
}

std::vector<double> theta_grid(int points) {
  if (points < 3) throw std::invalid_argument("theta_grid: too few points");
  std::vector<double> grid(points);
  const double span = 2.0 * M_PI;
  for (int k = 0; k < points; ++k)
    grid[k] = span * (static_cast<double>(k) / (points - 1));
  return grid;
}

std::vector<double> spin_curve(int d, const std::vector<double>& grid) {
  std::vector<double> curve(grid.size());
  for (size_t k = 0; k < grid.size(); ++k)
    curve[k] = spin_linear_entanglement(grid[k], d);
  return curve;
}

namespace {

// Golden-section maximization of E(theta) on [lo, hi].
SpinMaximum polish_maximum(int d, int grid_index, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = spin_linear_entanglement(x1, d);
  double f2 = spin_linear_entanglement(x2, d);
  for (int it = 0; it < 90 && (b - a) > 1e-13; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = spin_linear_entanglement(x2, d);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = spin_linear_entanglement(x1, d);
    }
  }
  const double theta = 0.5 * (a + b);
  return {grid_index, theta, spin_linear_entanglement(theta, d)};
}

}  // namespace

std::vector<SpinMaximum> detect_spin_maxima(int d,
                                            const std::vector<double>& grid,
                                            const std::vector<double>& curve) {
  if (grid.size() != curve.size() || grid.size() < 3)
    throw std::invalid_argument("detect_spin_maxima: malformed curve");
  std::vector<SpinMaximum> maxima;
  for (size_t k = 1; k + 1 < grid.size(); ++k) {
    if (curve[k] > curve[k - 1] + kMaximumMargin &&
        curve[k] > curve[k + 1] + kMaximumMargin)
      maxima.push_back(
          polish_maximum(d, static_cast<int>(k), grid[k - 1], grid[k + 1]));
  }
  return maxima;
}

}  // namespace entpower
