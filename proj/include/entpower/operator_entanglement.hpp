#pragma once

#include <vector>

#include "entpower/tensor.hpp"

namespace entpower {

// Operator Schmidt coefficients across a bipartition, descending. For a
// unitary input the squared coefficients sum to d_left * d_right.
struct OperatorSchmidt {
  RealVector coefficients;
  int d_left = 0;
  int d_right = 0;
};

// Coefficients are the singular values of the reshuffled operator. The split
// need not be contiguous; systems are permuted into (left, right) order first.
OperatorSchmidt operator_schmidt(const MultipartiteOperator& op,
                                 const Bipartition& split);

// Throws unless ||U^dag U - I||_max <= kFactorTol.
void require_unitary(const MultipartiteOperator& op);

// E(U) = 1 - sum_n (s_n^2 / dL dR)^2 for a unitary U.
double linear_operator_entanglement(const MultipartiteOperator& op,
                                    const Bipartition& split);

// Etilde(U) = -sum_n lambda_n ln lambda_n with lambda_n = s_n^2 / dL dR.
double von_neumann_operator_entanglement(const MultipartiteOperator& op,
                                         const Bipartition& split);

// Tr( V (x) V P_sigma V^dag (x) V^dag P_tau ) on the doubled register,
// where P_s swaps each system in `s` with its copy. Evaluated by index
// contraction; the doubled-register matrix is never materialized.
Complex doubled_swap_trace(const MultipartiteOperator& v,
                           const std::vector<int>& sigma,
                           const std::vector<int>& tau);

inline constexpr int kDefaultAssistedTraceCap = 3;

// Same value as linear_operator_entanglement, via the doubled-register trace
// instead of the SVD; the independent verification route. Four-system inputs
// are limited to qudit dimension `d_cap`.
double linear_op_ent_via_trace(const MultipartiteOperator& op,
                               const Bipartition& split,
                               int d_cap = kDefaultAssistedTraceCap);

// A_mn(theta) = (1/d^2) sum_k e^{i theta k (m-n)}; Hermitian with unit trace.
Matrix spin_A_matrix(double theta, int d);

// E(U(theta)) = 1 - sum_i mu_i^2 over the eigenvalues of A(theta).
double spin_linear_entanglement(double theta, int d);

// Uniform theta grid spanning [0, 2 pi] with both endpoints included, so the
// periodicity check compares actual grid values.
std::vector<double> theta_grid(int points = 2001);

std::vector<double> spin_curve(int d, const std::vector<double>& grid);

// A detected maximum: interior grid point strictly above both neighbors by
// more than kMaximumMargin, then polished inside its bracket.
inline constexpr double kMaximumMargin = 1e-9;

struct SpinMaximum {
  int grid_index = 0;
  double theta = 0.0;  // refined location
  double value = 0.0;  // refined curve value
};

std::vector<SpinMaximum> detect_spin_maxima(int d,
                                            const std::vector<double>& grid,
                                            const std::vector<double>& curve);

}  // namespace entpower
