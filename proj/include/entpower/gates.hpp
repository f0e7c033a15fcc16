#pragma once

#include <random>
#include <string>
#include <vector>

#include "entpower/tensor.hpp"

namespace entpower {

// Generalized Pauli shift X|n> = |n+1 mod d> and clock Z|n> = w^n |n>,
// w = exp(2 pi i / d).
Matrix shift_x(int d);
Matrix clock_z(int d);

// F|n> = (1/sqrt(d)) sum_k w^{nk} |k>; unitary, F^-1 Z F = X, Hadamard at d=2.
Matrix fourier(int d);

Matrix matrix_power(const Matrix& m, int exponent);

// Controlled gate C_U = sum_n |n><n| (x) U_n; each block must be unitary.
class ControlledGate {
 public:
  explicit ControlledGate(std::vector<Matrix> blocks);
  const std::vector<Matrix>& blocks() const { return blocks_; }
  int qudit_dim() const { return static_cast<int>(blocks_.size()); }
  MultipartiteOperator assemble() const;

 private:
  std::vector<Matrix> blocks_;
};

MultipartiteOperator controlled_u(const std::vector<Matrix>& blocks);

enum class SumDirection { kControlFirst, kControlSecond };

// SUM(1->2)|m,n> = |m, m+n mod d>; the 2->1 direction is the system-permuted
// image of the 1->2 gate.
MultipartiteOperator sum_gate(int d, SumDirection dir = SumDirection::kControlFirst);

// CPHASE = sum_n |n><n| (x) Z^n.
MultipartiteOperator cphase_gate(int d);

// DSUM = SUM^-1(2->1) SUM(1->2); reduces to the double CNOT at d=2.
MultipartiteOperator dsum_gate(int d);

// Diagonal U(theta)|m,n> = e^{i theta m n}|m,n>. The phase argument is
// reduced mod 2 pi so the 2 pi periodicity holds at the matrix level.
MultipartiteOperator spin_gate(double theta, int d);

// Two-qudit swap S|m,n> = |n,m>.
MultipartiteOperator swap_gate(int d);

// Swap of systems i and j on an arbitrary register (dims must match).
MultipartiteOperator swap_builder(const std::vector<int>& total_dims, int i, int j);

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases of
// the R diagonal absorbed into Q.
Matrix haar_random_unitary(int d, std::mt19937_64& rng);

std::vector<Matrix> haar_random_blocks(int d, std::mt19937_64& rng);

enum class GateKind {
  kIdentity,
  kX,
  kZ,
  kFourier,
  kCphase,
  kSum,
  kDsum,
  kSwap,
  kControlled,
  kSpin,
};

// Parsed gate request; canonical text forms are "identity", "x", "z",
// "fourier", "cphase", "sum", "dsum", "swap", "spin:<theta>" and
// "controlled:<file>".
struct GateSpec {
  GateKind kind = GateKind::kIdentity;
  int d = 2;
  SumDirection direction = SumDirection::kControlFirst;
  double theta = 0.0;
  std::vector<Matrix> blocks;

  static GateSpec parse(const std::string& text, int d);
  std::string canonical_text() const;
  bool is_two_qudit() const;
};

MultipartiteOperator build_gate(const GateSpec& spec);

// Text format for controlled:<file>: first line d, then d blocks of d rows,
// each row holding d "re im" pairs.
std::vector<Matrix> parse_controlled_blocks(std::istream& in);
std::vector<Matrix> load_controlled_blocks(const std::string& path);

}  // namespace entpower
