#include "entpower/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entpower {

namespace {

std::int64_t product(const std::vector<int>& dims) {
  std::int64_t p = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("state subsystem dimension must be >= 1");
    p *= d;
  }
  return p;
}

// Snap values within kSpectrumClipTol of {0, 1} onto the boundary; reject
// values further outside the unit interval.
double clip_to_unit(double x) {
  if (x < 0.0) {
    if (x < -kSpectrumClipTol)
      throw std::invalid_argument("spectrum entry below zero beyond tolerance");
    return 0.0;
  }
  if (x > 1.0) {
    if (x > 1.0 + kSpectrumClipTol)
      throw std::invalid_argument("spectrum entry above one beyond tolerance");
    return 1.0;
  }
  if (x < kSpectrumClipTol) return 0.0;
  if (x > 1.0 - kSpectrumClipTol) return 1.0;
  return x;
}

// Rearranges amplitudes into the dL x dR matrix of the given split.
Matrix split_matrix(const PureState& psi, const Bipartition& split) {
  if (split.num_systems() != psi.num_systems())
    throw std::invalid_argument("schmidt split does not match state");
  const auto& dims = psi.dims();
  const auto strides = index_strides(dims);

  std::vector<int> left_dims, right_dims;
  for (int p : split.left()) left_dims.push_back(dims[p]);
  for (int p : split.right()) right_dims.push_back(dims[p]);
  const std::int64_t dl = product(left_dims), dr = product(right_dims);

  std::vector<std::int64_t> left_offset(dl, 0), right_offset(dr, 0);
  for (std::int64_t l = 0; l < dl; ++l) {
    std::int64_t rem = l;
    for (int k = static_cast<int>(left_dims.size()) - 1; k >= 0; --k) {
      left_offset[l] += (rem % left_dims[k]) * strides[split.left()[k]];
      rem /= left_dims[k];
    }
  }
  for (std::int64_t r = 0; r < dr; ++r) {
    std::int64_t rem = r;
    for (int k = static_cast<int>(right_dims.size()) - 1; k >= 0; --k) {
      right_offset[r] += (rem % right_dims[k]) * strides[split.right()[k]];
      rem /= right_dims[k];
    }
  }

  Matrix m(dl, dr);
  for (std::int64_t l = 0; l < dl; ++l)
    for (std::int64_t r = 0; r < dr; ++r)
      m(l, r) = psi.amplitudes()(left_offset[l] + right_offset[r]);
  return m;
}

}  // namespace

PureState::PureState(Vector amplitudes, std::vector<int> dims)
    : amp_(std::move(amplitudes)), dims_(std::move(dims)) {
  if (product(dims_) != amp_.size())
    throw std::invalid_argument("product of dims must equal amplitude count");
  if (std::abs(amp_.norm() - 1.0) > kExactTol)
    throw std::invalid_argument("state must be normalized");
}

PureState haar_random_state(int dim, std::mt19937_64& rng) {
  if (dim < 1) throw std::invalid_argument("haar_random_state: dim must be >= 1");
  std::normal_distribution<double> normal;
  Vector amp(dim);
  for (int k = 0; k < dim; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    amp(k) = Complex(re, im);
  }
  amp /= amp.norm();
  return {std::move(amp), {dim}};
}

PureState kron(const PureState& a, const PureState& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return {kron(a.amplitudes(), b.amplitudes()), std::move(dims)};
}

PureState with_dims(const PureState& psi, std::vector<int> dims) {
  return {psi.amplitudes(), std::move(dims)};
}

PureState apply(const MultipartiteOperator& op, const PureState& psi) {
  if (op.dim() != psi.dim())
    throw std::invalid_argument("apply: dimension mismatch");
  return {op.matrix() * psi.amplitudes(), psi.dims()};
}

Matrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
  if (keep.empty())
    throw std::invalid_argument("reduced_density: empty keep set");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  std::vector<int> rest;
  for (int p = 0; p < psi.num_systems(); ++p)
    if (!std::binary_search(kept.begin(), kept.end(), p)) rest.push_back(p);
  for (int p : kept)
    if (p < 0 || p >= psi.num_systems())
      throw std::invalid_argument("reduced_density: position out of range");

  if (rest.empty()) {
    const Vector& a = psi.amplitudes();
    return a * a.adjoint();
  }
  const Bipartition split(kept, rest, psi.num_systems());
  const Matrix m = split_matrix(psi, split);
  return m * m.adjoint();
}

double von_neumann_entropy(const Matrix& rho) {
  const RealVector evs = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (int k = 0; k < evs.size(); ++k) {
    const double lambda = clip_to_unit(evs(k));
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s + 0.0;  // normalize -0
}

double linear_entropy(const Matrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("linear_entropy: matrix must be square");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kFactorTol)
    throw std::invalid_argument("linear_entropy: input not Hermitian");
  return 1.0 - rho.squaredNorm();
}

PureState maximally_entangled_pair(int d) {
  if (d < 2) throw std::invalid_argument("maximally_entangled_pair: d must be >= 2");
  Vector amp = Vector::Zero(static_cast<std::int64_t>(d) * d);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (int n = 0; n < d; ++n) amp(n * d + n) = w;
  return {std::move(amp), {d, d}};
}

SchmidtSpectrum schmidt_spectrum(const PureState& psi, const Bipartition& split) {
  const Matrix m = split_matrix(psi, split);
  const RealVector sv = singular_values(m);
  RealVector lambdas(sv.size());
  for (int k = 0; k < sv.size(); ++k) lambdas(k) = clip_to_unit(sv(k) * sv(k));
  return {std::move(lambdas)};
}

double von_neumann_entropy(const SchmidtSpectrum& spectrum) {
  double s = 0.0;
  for (int k = 0; k < spectrum.lambdas.size(); ++k) {
    const double lambda = spectrum.lambdas(k);
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s + 0.0;
}

double linear_entropy(const SchmidtSpectrum& spectrum) {
  double purity = 0.0;
  for (int k = 0; k < spectrum.lambdas.size(); ++k)
    purity += spectrum.lambdas(k) * spectrum.lambdas(k);
  return 1.0 - purity;
}

}  // namespace entpower
