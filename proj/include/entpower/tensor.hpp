#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace entpower {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerance for exact-identity checks (gate algebra, trace preservation).
inline constexpr double kExactTol = 1e-12;
// Tolerance for quantities that pass through a factorization (SVD, eigen).
inline constexpr double kFactorTol = 1e-10;

// Composite basis ordering is fixed throughout: system 0 is the most
// significant digit, i.e. flat index = i0*(d1*d2*...) + i1*(d2*...) + ...
std::vector<std::int64_t> index_strides(const std::vector<int>& dims);

// A split of system positions into two nonempty complementary groups.
class Bipartition {
 public:
  Bipartition(std::vector<int> left, std::vector<int> right, int num_systems);

  // The first n_left systems vs the rest.
  static Bipartition prefix(int n_left, int num_systems);

  const std::vector<int>& left() const { return left_; }
  const std::vector<int>& right() const { return right_; }
  int num_systems() const { return num_systems_; }

  // True when left() is exactly {0, 1, ..., k-1}.
  bool is_contiguous_prefix() const;

 private:
  std::vector<int> left_;
  std::vector<int> right_;
  int num_systems_;
};

// Dense complex square matrix tagged with the ordered subsystem dimensions.
// Every dimension must be >= 2 and their product must match the matrix size.
class MultipartiteOperator {
 public:
  MultipartiteOperator(Matrix data, std::vector<int> dims);

  const Matrix& matrix() const { return data_; }
  const std::vector<int>& dims() const { return dims_; }
  int dim() const { return static_cast<int>(data_.rows()); }
  int num_systems() const { return static_cast<int>(dims_.size()); }
  int dim_of(const std::vector<int>& positions) const;

  MultipartiteOperator adjoint() const { return {data_.adjoint(), dims_}; }

 private:
  Matrix data_;
  std::vector<int> dims_;
};

MultipartiteOperator identity_operator(const std::vector<int>& dims);

// Tensor product; dims are concatenated (A's systems become most significant).
MultipartiteOperator kron(const MultipartiteOperator& a,
                          const MultipartiteOperator& b);
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(const Vector& a, const Vector& b);

// Relabels systems: new position p carries old system perm[p].
MultipartiteOperator permute_systems(const MultipartiteOperator& op,
                                     const std::vector<int>& perm);

// Traces out every system not listed in `keep`; result dims follow the
// original ordering restricted to `keep`.
MultipartiteOperator partial_trace(const MultipartiteOperator& op,
                                   const std::vector<int>& keep);

// Operator-Schmidt reshuffling across a contiguous split with left block of
// dimension dL and right block of dimension dR:
//   R[(iL,jL), (iR,jR)] = O[(iL,iR), (jL,jR)],
// a dL^2 x dR^2 matrix whose singular values are the operator Schmidt
// coefficients. Reshuffling is an involution and a Hilbert-Schmidt isometry.
Matrix reshuffle(const MultipartiteOperator& op, const Bipartition& split);

// Places U on the listed register positions, identity elsewhere.
MultipartiteOperator embed(const MultipartiteOperator& u,
                           const std::vector<int>& total_dims,
                           const std::vector<int>& positions);

// Hilbert-Schmidt product Tr(X^dag Y).
Complex hs_inner(const Matrix& x, const Matrix& y);
double hs_norm(const Matrix& x);

// Descending singular values; count = min(rows, cols).
RealVector singular_values(const Matrix& m);

// Descending real eigenvalues of a Hermitian matrix (Hermiticity enforced
// within kFactorTol).
RealVector hermitian_eigenvalues(const Matrix& h);

bool approx_equal(const Matrix& a, const Matrix& b, double tol);
// Entrywise equality after modding out one global phase, inferred from the
// largest entry of `a`.
bool approx_equal_up_to_phase(const Matrix& a, const Matrix& b, double tol);

}  // namespace entpower
