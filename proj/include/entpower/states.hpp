#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "entpower/tensor.hpp"

namespace entpower {

// Tolerance within which spectrum entries are snapped onto the [0,1]
// boundary before entropies are evaluated; entries further outside raise.
inline constexpr double kSpectrumClipTol = 1e-10;

// Normalized pure state on a multipartite register. Unlike operators,
// one-dimensional subsystems are allowed (a scalar factor).
class PureState {
 public:
  PureState(Vector amplitudes, std::vector<int> dims);

  const Vector& amplitudes() const { return amp_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(amp_.size()); }
  int num_systems() const { return static_cast<int>(dims_.size()); }

 private:
  Vector amp_;
  std::vector<int> dims_;
};

// Squared Schmidt coefficients, descending; they sum to one.
struct SchmidtSpectrum {
  RealVector lambdas;
};

// Haar-distributed state: i.i.d. standard complex Gaussian amplitudes,
// normalized. Deterministic for a given stream state.
PureState haar_random_state(int dim, std::mt19937_64& rng);

PureState kron(const PureState& a, const PureState& b);

// Same amplitudes, reinterpreted with a finer/coarser subsystem grouping.
PureState with_dims(const PureState& psi, std::vector<int> dims);

PureState apply(const MultipartiteOperator& op, const PureState& psi);

// rho on the kept systems (original ordering).
Matrix reduced_density(const PureState& psi, const std::vector<int>& keep);

// -Tr[rho ln rho] in nats; eigenvalues are clipped onto [0,1] within
// kSpectrumClipTol and 0 ln 0 = 0.
double von_neumann_entropy(const Matrix& rho);

// 1 - Tr[rho^2].
double linear_entropy(const Matrix& rho);

// (1/sqrt(d)) sum_n |nn>
PureState maximally_entangled_pair(int d);

SchmidtSpectrum schmidt_spectrum(const PureState& psi, const Bipartition& split);

double von_neumann_entropy(const SchmidtSpectrum& spectrum);
double linear_entropy(const SchmidtSpectrum& spectrum);

}  // namespace entpower
