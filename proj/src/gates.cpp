#include "entpower/gates.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace entpower {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("gate dimension must be >= 2");
}

// Primitive d-th roots of unity, w^0 .. w^{d-1}; powers taken mod d keep the
// phase error independent of the exponent.
std::vector<Complex> root_table(int d) {
  std::vector<Complex> w(d);
  for (int k = 0; k < d; ++k) w[k] = std::polar(1.0, kTwoPi * k / d);
  return w;
}

void require_unitary_matrix(const Matrix& u, double tol, const char* what) {
  if (u.rows() != u.cols())
    throw std::invalid_argument(std::string(what) + ": block must be square");
  const Matrix gram = u.adjoint() * u;
  if ((gram - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument(std::string(what) + ": block not unitary");
}

}  // namespace

Matrix shift_x(int d) {
  require_dim(d);
  Matrix x = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) x((n + 1) % d, n) = 1.0;
  return x;
}

Matrix clock_z(int d) {
  require_dim(d);
  const auto w = root_table(d);
  Matrix z = Matrix::Zero(d, d);
  for (int n = 0; n < d; ++n) z(n, n) = w[n];
  return z;
}

Matrix fourier(int d) {
  require_dim(d);
  const auto w = root_table(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Matrix f(d, d);
  for (int n = 0; n < d; ++n)
    for (int k = 0; k < d; ++k) f(k, n) = scale * w[(n * k) % d];
  return f;
}

Matrix matrix_power(const Matrix& m, int exponent) {
  if (exponent < 0)
    return matrix_power(m.adjoint(), -exponent);  // unitary inverse
  Matrix out = Matrix::Identity(m.rows(), m.cols());
  for (int k = 0; k < exponent; ++k) out = (out * m).eval();
  return out;
}

ControlledGate::ControlledGate(std::vector<Matrix> blocks)
    : blocks_(std::move(blocks)) {
  const int d = static_cast<int>(blocks_.size());
  require_dim(d);
  for (const auto& b : blocks_) {
    if (b.rows() != d || b.cols() != d)
      throw std::invalid_argument("controlled gate: block dimension mismatch");
    require_unitary_matrix(b, kExactTol, "controlled gate");
  }
}

MultipartiteOperator ControlledGate::assemble() const {
  const int d = qudit_dim();
  Matrix out = Matrix::Zero(d * d, d * d);
  for (int n = 0; n < d; ++n)
    out.block(n * d, n * d, d, d) = blocks_[n];
  return {std::move(out), {d, d}};
}

MultipartiteOperator controlled_u(const std::vector<Matrix>& blocks) {
  return ControlledGate(blocks).assemble();
}

MultipartiteOperator sum_gate(int d, SumDirection dir) {
  require_dim(d);
  Matrix out = Matrix::Zero(d * d, d * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) out(m * d + (m + n) % d, m * d + n) = 1.0;
  MultipartiteOperator gate(std::move(out), {d, d});
  if (dir == SumDirection::kControlSecond) gate = permute_systems(gate, {1, 0});
  return gate;
}

MultipartiteOperator cphase_gate(int d) {
  require_dim(d);
  std::vector<Matrix> blocks;
  blocks.reserve(d);
  const auto w = root_table(d);
  for (int n = 0; n < d; ++n) {
    Matrix zn = Matrix::Zero(d, d);
    for (int k = 0; k < d; ++k) zn(k, k) = w[(n * k) % d];
    blocks.push_back(std::move(zn));
  }
  return controlled_u(blocks);
}

MultipartiteOperator dsum_gate(int d) {
  const Matrix fwd = sum_gate(d, SumDirection::kControlFirst).matrix();
  const Matrix rev_inv = sum_gate(d, SumDirection::kControlSecond).matrix().adjoint();
  return {rev_inv * fwd, {d, d}};
}

MultipartiteOperator spin_gate(double theta, int d) {
  require_dim(d);
  if (!std::isfinite(theta))
    throw std::invalid_argument("spin_gate: theta must be finite");
  double reduced = std::fmod(theta, kTwoPi);
  if (reduced < 0.0) reduced += kTwoPi;
  Matrix out = Matrix::Zero(d * d, d * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      out(m * d + n, m * d + n) = std::polar(1.0, reduced * m * n);
  return {std::move(out), {d, d}};
}

MultipartiteOperator swap_gate(int d) {
  return swap_builder({d, d}, 0, 1);
}

MultipartiteOperator swap_builder(const std::vector<int>& total_dims, int i, int j) {
  const int n = static_cast<int>(total_dims.size());
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw std::invalid_argument("swap_builder: invalid system positions");
  if (total_dims[i] != total_dims[j])
    throw std::invalid_argument("swap_builder: swapped systems must have equal dims");

  const auto strides = index_strides(total_dims);
  std::int64_t total = 1;
  for (int d : total_dims) total *= d;

  Matrix out = Matrix::Zero(total, total);
  for (std::int64_t col = 0; col < total; ++col) {
    const int di = static_cast<int>((col / strides[i]) % total_dims[i]);
    const int dj = static_cast<int>((col / strides[j]) % total_dims[j]);
    const std::int64_t row =
        col + (dj - di) * strides[i] + (di - dj) * strides[j];
    out(row, col) = 1.0;
  }
  return {std::move(out), total_dims};
}

Matrix haar_random_unitary(int d, std::mt19937_64& rng) {
  require_dim(d);
  std::normal_distribution<double> normal;
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const Complex rkk = r(k, k);
    const double mag = std::abs(rkk);
    q.col(k) *= (mag == 0.0) ? Complex(1.0, 0.0) : rkk / mag;
  }
  return q;
}

std::vector<Matrix> haar_random_blocks(int d, std::mt19937_64& rng) {
  std::vector<Matrix> blocks;
  blocks.reserve(d);
  for (int n = 0; n < d; ++n) blocks.push_back(haar_random_unitary(d, rng));
  return blocks;
}

GateSpec GateSpec::parse(const std::string& text, int d) {
  require_dim(d);
  GateSpec spec;
  spec.d = d;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);

  if (head == "identity" && arg.empty()) {
    spec.kind = GateKind::kIdentity;
  } else if (head == "x" && arg.empty()) {
    spec.kind = GateKind::kX;
  } else if (head == "z" && arg.empty()) {
    spec.kind = GateKind::kZ;
  } else if (head == "fourier" && arg.empty()) {
    spec.kind = GateKind::kFourier;
  } else if (head == "cphase" && arg.empty()) {
    spec.kind = GateKind::kCphase;
  } else if (head == "sum") {
    spec.kind = GateKind::kSum;
    if (arg == "2to1")
      spec.direction = SumDirection::kControlSecond;
    else if (!arg.empty() && arg != "1to2")
      throw std::invalid_argument("gate spec: unknown sum direction '" + arg + "'");
  } else if (head == "dsum" && arg.empty()) {
    spec.kind = GateKind::kDsum;
  } else if (head == "swap" && arg.empty()) {
    spec.kind = GateKind::kSwap;
  } else if (head == "spin") {
    spec.kind = GateKind::kSpin;
    try {
      size_t used = 0;
      spec.theta = std::stod(arg, &used);
      if (used != arg.size()) throw std::invalid_argument("trailing chars");
    } catch (const std::exception&) {
      throw std::invalid_argument("gate spec: bad spin angle '" + arg + "'");
    }
  } else if (head == "controlled") {
    spec.kind = GateKind::kControlled;
    spec.blocks = load_controlled_blocks(arg);
    spec.d = static_cast<int>(spec.blocks.size());
  } else {
    throw std::invalid_argument("gate spec: unknown gate '" + text + "'");
  }
  return spec;
}

std::string GateSpec::canonical_text() const {
  switch (kind) {
    case GateKind::kIdentity: return "identity";
    case GateKind::kX: return "x";
    case GateKind::kZ: return "z";
    case GateKind::kFourier: return "fourier";
    case GateKind::kCphase: return "cphase";
    case GateKind::kSum:
      return direction == SumDirection::kControlFirst ? "sum" : "sum:2to1";
    case GateKind::kDsum: return "dsum";
    case GateKind::kSwap: return "swap";
    case GateKind::kControlled: return "controlled";
    case GateKind::kSpin: {
      std::ostringstream os;
      os << "spin:" << theta;
      return os.str();
    }
  }
  return "identity";
}

bool GateSpec::is_two_qudit() const {
  switch (kind) {
    case GateKind::kIdentity:
    case GateKind::kX:
    case GateKind::kZ:
    case GateKind::kFourier:
      return false;
    default:
      return true;
  }
}

MultipartiteOperator build_gate(const GateSpec& spec) {
  switch (spec.kind) {
    case GateKind::kIdentity: return identity_operator({spec.d});
    case GateKind::kX: return {shift_x(spec.d), {spec.d}};
    case GateKind::kZ: return {clock_z(spec.d), {spec.d}};
    case GateKind::kFourier: return {fourier(spec.d), {spec.d}};
    case GateKind::kCphase: return cphase_gate(spec.d);
    case GateKind::kSum: return sum_gate(spec.d, spec.direction);
    case GateKind::kDsum: return dsum_gate(spec.d);
    case GateKind::kSwap: return swap_gate(spec.d);
    case GateKind::kControlled: return controlled_u(spec.blocks);
    case GateKind::kSpin: return spin_gate(spec.theta, spec.d);
  }
  throw std::invalid_argument("build_gate: unknown kind");
}

std::vector<Matrix> parse_controlled_blocks(std::istream& in) {
  int d = 0;
  if (!(in >> d) || d < 2)
    throw std::invalid_argument("controlled file: bad dimension line");
  std::vector<Matrix> blocks;
  blocks.reserve(d);
  for (int n = 0; n < d; ++n) {
    Matrix b(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        double re = 0.0, im = 0.0;
        if (!(in >> re >> im))
          throw std::invalid_argument("controlled file: truncated block data");
        b(r, c) = Complex(re, im);
      }
    require_unitary_matrix(b, kExactTol, "controlled file");
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::vector<Matrix> load_controlled_blocks(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("controlled file: cannot open '" + path + "'");
  return parse_controlled_blocks(in);
}

}  // namespace entpower
