#include "entpower/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace entpower {

namespace {

std::int64_t checked_product(const std::vector<int>& dims) {
  std::int64_t p = 1;
  for (int d : dims) {
    if (d < 2) throw std::invalid_argument("subsystem dimension must be >= 2");
    p *= d;
  }
  return p;
}

// Digits of `flat` in the mixed-radix system given by dims (system 0 most
// significant).
std::vector<int> unflatten(std::int64_t flat, const std::vector<int>& dims) {
  std::vector<int> digits(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    digits[k] = static_cast<int>(flat % dims[k]);
    flat /= dims[k];
  }
  return digits;
}

void check_positions(const std::vector<int>& positions, int num_systems,
                     const char* what) {
  std::vector<bool> seen(num_systems, false);
  for (int p : positions) {
    if (p < 0 || p >= num_systems)
      throw std::invalid_argument(std::string(what) + ": position out of range");
    if (seen[p])
      throw std::invalid_argument(std::string(what) + ": duplicate position");
    seen[p] = true;
  }
}

}  // namespace

std::vector<std::int64_t> index_strides(const std::vector<int>& dims) {
  std::vector<std::int64_t> strides(dims.size(), 1);
  for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
    strides[k] = strides[k + 1] * dims[k + 1];
  return strides;
}

Bipartition::Bipartition(std::vector<int> left, std::vector<int> right,
                         int num_systems)
    : left_(std::move(left)), right_(std::move(right)), num_systems_(num_systems) {
  if (left_.empty() || right_.empty())
    throw std::invalid_argument("bipartition: both sides must be nonempty");
  std::vector<bool> seen(num_systems_, false);
  for (int p : left_) {
    if (p < 0 || p >= num_systems_ || seen[p])
      throw std::invalid_argument("bipartition: invalid left side");
    seen[p] = true;
  }
  for (int p : right_) {
    if (p < 0 || p >= num_systems_ || seen[p])
      throw std::invalid_argument("bipartition: invalid right side");
    seen[p] = true;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("bipartition: sides must cover all systems");
}

Bipartition Bipartition::prefix(int n_left, int num_systems) {
  if (n_left < 1 || n_left >= num_systems)
    throw std::invalid_argument("bipartition: prefix size out of range");
  std::vector<int> left(n_left), right(num_systems - n_left);
  std::iota(left.begin(), left.end(), 0);
  std::iota(right.begin(), right.end(), n_left);
  return {std::move(left), std::move(right), num_systems};
}

bool Bipartition::is_contiguous_prefix() const {
  std::vector<int> sorted = left_;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
    if (sorted[k] != k) return false;
  return true;
}

MultipartiteOperator::MultipartiteOperator(Matrix data, std::vector<int> dims)
    : data_(std::move(data)), dims_(std::move(dims)) {
  if (data_.rows() != data_.cols())
    throw std::invalid_argument("operator matrix must be square");
  if (checked_product(dims_) != data_.rows())
    throw std::invalid_argument("product of dims must equal matrix dimension");
}

int MultipartiteOperator::dim_of(const std::vector<int>& positions) const {
  int p = 1;
  for (int pos : positions) p *= dims_.at(pos);
  return p;
}

MultipartiteOperator identity_operator(const std::vector<int>& dims) {
  const std::int64_t d = checked_product(dims);
  return {Matrix::Identity(d, d), dims};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

MultipartiteOperator kron(const MultipartiteOperator& a,
                          const MultipartiteOperator& b) {
  std::vector<int> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return {kron(a.matrix(), b.matrix()), std::move(dims)};
}

MultipartiteOperator permute_systems(const MultipartiteOperator& op,
                                     const std::vector<int>& perm) {
  const int n = op.num_systems();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_systems: permutation size mismatch");
  check_positions(perm, n, "permute_systems");

  const auto& dims = op.dims();
  std::vector<int> new_dims(n);
  for (int p = 0; p < n; ++p) new_dims[p] = dims[perm[p]];

  const auto old_strides = index_strides(dims);
  const std::int64_t total = op.dim();
  // map[x] = old flat index of the basis vector that new index x refers to.
  std::vector<std::int64_t> map(total);
  for (std::int64_t x = 0; x < total; ++x) {
    const auto digits = unflatten(x, new_dims);
    std::int64_t old_flat = 0;
    for (int p = 0; p < n; ++p) old_flat += digits[p] * old_strides[perm[p]];
    map[x] = old_flat;
  }

  Matrix out(total, total);
  for (std::int64_t i = 0; i < total; ++i)
    for (std::int64_t j = 0; j < total; ++j)
      out(i, j) = op.matrix()(map[i], map[j]);
  return {std::move(out), std::move(new_dims)};
}

MultipartiteOperator partial_trace(const MultipartiteOperator& op,
                                   const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  check_positions(kept, op.num_systems(), "partial_trace");

  const auto& dims = op.dims();
  std::vector<int> traced;
  for (int p = 0; p < op.num_systems(); ++p)
    if (!std::binary_search(kept.begin(), kept.end(), p)) traced.push_back(p);

  std::vector<int> keep_dims, trace_dims;
  for (int p : kept) keep_dims.push_back(dims[p]);
  for (int p : traced) trace_dims.push_back(dims[p]);

  const auto strides = index_strides(dims);
  const std::int64_t dk = std::accumulate(keep_dims.begin(), keep_dims.end(),
                                          std::int64_t{1}, std::multiplies<>());
  const std::int64_t dt = traced.empty()
                              ? 1
                              : std::accumulate(trace_dims.begin(), trace_dims.end(),
                                                std::int64_t{1}, std::multiplies<>());

  // Offsets are additive because kept and traced positions are disjoint.
  std::vector<std::int64_t> keep_offset(dk, 0), trace_offset(dt, 0);
  for (std::int64_t k = 0; k < dk; ++k) {
    const auto digits = unflatten(k, keep_dims);
    for (size_t p = 0; p < kept.size(); ++p)
      keep_offset[k] += digits[p] * strides[kept[p]];
  }
  for (std::int64_t t = 0; t < dt; ++t) {
    if (traced.empty()) break;
    const auto digits = unflatten(t, trace_dims);
    for (size_t p = 0; p < traced.size(); ++p)
      trace_offset[t] += digits[p] * strides[traced[p]];
  }

  Matrix out = Matrix::Zero(dk, dk);
  for (std::int64_t i = 0; i < dk; ++i)
    for (std::int64_t j = 0; j < dk; ++j) {
      Complex acc = 0.0;
      for (std::int64_t t = 0; t < dt; ++t)
        acc += op.matrix()(keep_offset[i] + trace_offset[t],
                           keep_offset[j] + trace_offset[t]);
      out(i, j) = acc;
    }
  return {std::move(out), std::move(keep_dims)};
}

Matrix reshuffle(const MultipartiteOperator& op, const Bipartition& split) {
  if (split.num_systems() != op.num_systems())
    throw std::invalid_argument("reshuffle: split does not match operator");
  if (!split.is_contiguous_prefix())
    throw std::invalid_argument("reshuffle: split must be a contiguous prefix");
  const std::int64_t dl = op.dim_of(split.left());
  const std::int64_t dr = op.dim_of(split.right());
  if (dl * dr != op.dim())
    throw std::invalid_argument("reshuffle: split inconsistent with dims");

  Matrix r(dl * dl, dr * dr);
  for (std::int64_t il = 0; il < dl; ++il)
    for (std::int64_t jl = 0; jl < dl; ++jl)
      for (std::int64_t ir = 0; ir < dr; ++ir)
        for (std::int64_t jr = 0; jr < dr; ++jr)
          r(il * dl + jl, ir * dr + jr) = op.matrix()(il * dr + ir, jl * dr + jr);
  return r;
}

MultipartiteOperator embed(const MultipartiteOperator& u,
                           const std::vector<int>& total_dims,
                           const std::vector<int>& positions) {
  const int n = static_cast<int>(total_dims.size());
  if (static_cast<int>(positions.size()) != u.num_systems())
    throw std::invalid_argument("embed: one position per operator system required");
  check_positions(positions, n, "embed");
  for (size_t p = 0; p < positions.size(); ++p)
    if (total_dims[positions[p]] != u.dims()[p])
      throw std::invalid_argument("embed: dimension mismatch at position");

  const auto strides = index_strides(total_dims);
  std::vector<int> rest;
  for (int p = 0; p < n; ++p)
    if (std::find(positions.begin(), positions.end(), p) == positions.end())
      rest.push_back(p);

  std::vector<int> rest_dims;
  for (int p : rest) rest_dims.push_back(total_dims[p]);
  const std::int64_t du = u.dim();
  const std::int64_t drest =
      rest.empty() ? 1
                   : std::accumulate(rest_dims.begin(), rest_dims.end(),
                                     std::int64_t{1}, std::multiplies<>());

  std::vector<std::int64_t> u_offset(du, 0), rest_offset(drest, 0);
  for (std::int64_t x = 0; x < du; ++x) {
    const auto digits = unflatten(x, u.dims());
    for (size_t p = 0; p < positions.size(); ++p)
      u_offset[x] += digits[p] * strides[positions[p]];
  }
  for (std::int64_t r = 0; r < drest && !rest.empty(); ++r) {
    const auto digits = unflatten(r, rest_dims);
    for (size_t p = 0; p < rest.size(); ++p)
      rest_offset[r] += digits[p] * strides[rest[p]];
  }

  const std::int64_t total = du * drest;
  Matrix out = Matrix::Zero(total, total);
  for (std::int64_t i = 0; i < du; ++i)
    for (std::int64_t j = 0; j < du; ++j) {
      const Complex v = u.matrix()(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      for (std::int64_t r = 0; r < drest; ++r)
        out(u_offset[i] + rest_offset[r], u_offset[j] + rest_offset[r]) = v;
    }
  return {std::move(out), total_dims};
}

Complex hs_inner(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw std::invalid_argument("hs_inner: dimension mismatch");
  return (x.conjugate().cwiseProduct(y)).sum();
}

double hs_norm(const Matrix& x) { return x.norm(); }

RealVector singular_values(const Matrix& m) {
  if (!m.allFinite())
    throw std::invalid_argument("singular_values: non-finite entries");
  if (std::min(m.rows(), m.cols()) <= 32) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues();
  }
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues();
}

RealVector hermitian_eigenvalues(const Matrix& h) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kFactorTol)
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

bool approx_equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index mi = 0, mj = 0;
  a.cwiseAbs().maxCoeff(&mi, &mj);
  const double scale = std::abs(a(mi, mj));
  if (scale == 0.0) return b.cwiseAbs().maxCoeff() <= tol;
  if (std::abs(b(mi, mj)) == 0.0) return false;
  const Complex phase = (a(mi, mj) / std::abs(a(mi, mj))) /
                        (b(mi, mj) / std::abs(b(mi, mj)));
  return (a - phase * b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace entpower
