#include "entpower/gates.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"

using namespace entpower;

namespace {

bool is_unitary(const Matrix& u, double tol = kExactTol) {
  return approx_equal(u.adjoint() * u, Matrix::Identity(u.rows(), u.cols()), tol);
}

Vector basis(int d, int k) {
  Vector v = Vector::Zero(d);
  v(k) = 1.0;
  return v;
}

}  // namespace

TEST_CASE("shift and clock") {
  for (int d : {2, 3, 5}) {
    const Matrix x = shift_x(d), z = clock_z(d);
    CHECK(is_unitary(x));
    CHECK(is_unitary(z));

    // X|d-1> = |0>
    CHECK((x * basis(d, d - 1) - basis(d, 0)).cwiseAbs().maxCoeff() == 0.0);
    // Z|1> = w |1>
    const Complex w = std::polar(1.0, 2.0 * M_PI / d);
    CHECK(std::abs((z * basis(d, 1))(1) - w) < kExactTol);

    // ZX = w XZ, oracle: direct matrix products
    CHECK(approx_equal(z * x, w * (x * z), kExactTol));
  }
}

TEST_CASE("fourier") {
  SUBCASE("d=2 is the Hadamard gate") {
    Matrix h(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    CHECK(approx_equal(fourier(2), h, kExactTol));
  }
  for (int d : {2, 3, 4, 6}) {
    const Matrix f = fourier(d);
    CHECK(is_unitary(f));
    CHECK(approx_equal(f.adjoint() * clock_z(d) * f, shift_x(d), kExactTol));
  }
}

TEST_CASE("controlled_u") {
  SUBCASE("identity blocks give the identity") {
    const int d = 3;
    const std::vector<Matrix> blocks(d, Matrix::Identity(d, d));
    CHECK(approx_equal(controlled_u(blocks).matrix(),
                       Matrix::Identity(d * d, d * d), 0.0));
  }
  SUBCASE("Z-power blocks give CPHASE") {
    for (int d : {2, 3, 4}) {
      std::vector<Matrix> blocks;
      for (int n = 0; n < d; ++n) blocks.push_back(matrix_power(clock_z(d), n));
      CHECK(approx_equal(controlled_u(blocks).matrix(), cphase_gate(d).matrix(),
                         kExactTol));
    }
  }
  SUBCASE("X-power blocks give SUM") {
    for (int d : {2, 3, 4}) {
      std::vector<Matrix> blocks;
      for (int n = 0; n < d; ++n) blocks.push_back(matrix_power(shift_x(d), n));
      CHECK(approx_equal(controlled_u(blocks).matrix(), sum_gate(d).matrix(),
                         kExactTol));
    }
  }
  SUBCASE("non-unitary block rejected") {
    std::vector<Matrix> blocks(2, Matrix::Identity(2, 2));
    blocks[1](0, 0) = 2.0;
    CHECK_THROWS_AS(controlled_u(blocks), std::invalid_argument);
  }
}

TEST_CASE("sum_gate") {
  SUBCASE("d=2 reduces to CNOT") {
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
    CHECK(approx_equal(sum_gate(2).matrix(), cnot, 0.0));
  }
  SUBCASE("basis action |m,n> -> |m, m+n>") {
    const int d = 4;
    const Matrix s = sum_gate(d).matrix();
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        CHECK(s(m * d + (m + n) % d, m * d + n) == Complex(1.0, 0.0));
  }
  SUBCASE("local Fourier conjugation links SUM and CPHASE") {
    for (int d : {2, 3, 4, 5, 6}) {
      const Matrix f = fourier(d);
      const Matrix id = Matrix::Identity(d, d);
      const Matrix conj = kron(id, f.adjoint()) * cphase_gate(d).matrix() *
                          kron(id, f);
      CHECK(approx_equal_up_to_phase(sum_gate(d).matrix(), conj, kExactTol));
    }
  }
  SUBCASE("2->1 direction is the permuted image") {
    const int d = 3;
    const Matrix s21 = sum_gate(d, SumDirection::kControlSecond).matrix();
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        CHECK(s21(((m + n) % d) * d + n, m * d + n) == Complex(1.0, 0.0));
    CHECK(is_unitary(s21));
  }
}

TEST_CASE("spin_gate") {
  SUBCASE("theta = 0 gives the identity") {
    CHECK(approx_equal(spin_gate(0.0, 3).matrix(), Matrix::Identity(9, 9), 0.0));
  }
  SUBCASE("theta = 2 pi / d gives CPHASE") {
    for (int d : {2, 3, 4, 5})
      CHECK(approx_equal(spin_gate(2.0 * M_PI / d, d).matrix(),
                         cphase_gate(d).matrix(), kExactTol));
  }
  SUBCASE("2 pi periodicity") {
    // exact at theta = 0 (the reduction maps 2 pi back onto 0)
    CHECK(approx_equal(spin_gate(2.0 * M_PI, 4).matrix(),
                       spin_gate(0.0, 4).matrix(), 0.0));
    for (double theta : {0.3, 1.7, 4.4})
      CHECK(approx_equal(spin_gate(theta + 2.0 * M_PI, 5).matrix(),
                         spin_gate(theta, 5).matrix(), kExactTol));
  }
  SUBCASE("commutes with Z (x) Z exactly") {
    const int d = 4;
    const Matrix u = spin_gate(1.234, d).matrix();
    const Matrix zz = kron(clock_z(d), clock_z(d));
    CHECK((u * zz - zz * u).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("non-finite angle rejected") {
    CHECK_THROWS_AS(spin_gate(std::nan(""), 2), std::invalid_argument);
  }
}

TEST_CASE("dsum_gate") {
  SUBCASE("d=2 is the double CNOT") {
    Matrix cnot12 = Matrix::Zero(4, 4), cnot21 = Matrix::Zero(4, 4);
    cnot12(0, 0) = cnot12(1, 1) = cnot12(2, 3) = cnot12(3, 2) = 1.0;
    cnot21(0, 0) = cnot21(3, 1) = cnot21(2, 2) = cnot21(1, 3) = 1.0;
    CHECK(approx_equal(dsum_gate(2).matrix(), cnot21 * cnot12, 0.0));
  }
  SUBCASE("unitary") {
    for (int d : {2, 3, 5}) CHECK(is_unitary(dsum_gate(d).matrix()));
  }
  SUBCASE("swap factors into three SUMs and a Fourier square") {
    for (int d : {2, 3, 4, 5, 6}) {
      const Matrix f2 = matrix_power(fourier(d), 2);
      const Matrix lhs = swap_gate(d).matrix();
      const Matrix rhs = kron(f2, Matrix::Identity(d, d)) *
                         sum_gate(d).matrix() * dsum_gate(d).matrix();
      CHECK(approx_equal_up_to_phase(lhs, rhs, kExactTol));
    }
  }
}

TEST_CASE("swap_builder") {
  SUBCASE("basis action") {
    const int d = 3;
    const Matrix s = swap_gate(d).matrix();
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        CHECK(s(n * d + m, m * d + n) == Complex(1.0, 0.0));
    CHECK(approx_equal(s * s, Matrix::Identity(d * d, d * d), 0.0));
  }
  SUBCASE("(A (x) B) S = S (B (x) A) exactly") {
    std::mt19937_64 rng(14);
    for (int d : {2, 3}) {
      const Matrix a = haar_random_unitary(d, rng);
      const Matrix b = haar_random_unitary(d, rng);
      const Matrix s = swap_gate(d).matrix();
      CHECK((kron(a, b) * s - s * kron(b, a)).cwiseAbs().maxCoeff() == 0.0);
    }
  }
  SUBCASE("pair product matches the projector sum") {
    // S13 S24 = sum_{ijkl} (P_ij (x) P_kl) (x) (P_ji (x) P_lk)
    const int d = 2;
    const std::vector<int> dims{d, d, d, d};
    const Matrix pair = swap_builder(dims, 0, 2).matrix() *
                        swap_builder(dims, 1, 3).matrix();
    Matrix expected = Matrix::Zero(16, 16);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            Matrix pij = Matrix::Zero(d, d), pkl = Matrix::Zero(d, d);
            Matrix pji = Matrix::Zero(d, d), plk = Matrix::Zero(d, d);
            pij(i, j) = pkl(k, l) = pji(j, i) = plk(l, k) = 1.0;
            expected += kron(kron(pij, pkl), kron(pji, plk));
          }
    CHECK(approx_equal(pair, expected, 0.0));
  }
  SUBCASE("unequal dims rejected") {
    CHECK_THROWS_AS(swap_builder({2, 3}, 0, 1), std::invalid_argument);
  }
}

TEST_CASE("haar_random_unitary") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(is_unitary(haar_random_unitary(4, rng), 1e-13));
  std::mt19937_64 rng_a(5), rng_b(5);
  CHECK(approx_equal(haar_random_unitary(3, rng_a), haar_random_unitary(3, rng_b),
                     0.0));
}

TEST_CASE("gate spec parsing") {
  CHECK(GateSpec::parse("sum", 3).kind == GateKind::kSum);
  CHECK(GateSpec::parse("sum:2to1", 3).direction == SumDirection::kControlSecond);
  CHECK(GateSpec::parse("dsum", 2).kind == GateKind::kDsum);
  CHECK(GateSpec::parse("swap", 2).kind == GateKind::kSwap);
  CHECK(GateSpec::parse("cphase", 4).kind == GateKind::kCphase);
  const auto spin = GateSpec::parse("spin:1.25", 3);
  CHECK(spin.kind == GateKind::kSpin);
  CHECK(spin.theta == doctest::Approx(1.25));
  CHECK(GateSpec::parse("spin:1.25", 3).canonical_text() == "spin:1.25");
  CHECK_THROWS_AS(GateSpec::parse("nope", 2), std::invalid_argument);
  CHECK_THROWS_AS(GateSpec::parse("spin:abc", 2), std::invalid_argument);
  CHECK_FALSE(GateSpec::parse("fourier", 2).is_two_qudit());
  CHECK(GateSpec::parse("swap", 2).is_two_qudit());
}

TEST_CASE("controlled block file format") {
  // round-trip the d=2 CPHASE blocks through the text format
  std::ostringstream os;
  os << 2 << "\n";
  os << "1 0 0 0\n0 0 1 0\n";    // I
  os << "1 0 0 0\n0 0 -1 0\n";   // Z
  std::istringstream is(os.str());
  const auto blocks = parse_controlled_blocks(is);
  REQUIRE(blocks.size() == 2);
  CHECK(approx_equal(controlled_u(blocks).matrix(), cphase_gate(2).matrix(),
                     kExactTol));

  std::istringstream bad("2\n1 0 0 0\n0 0 1 0\n2 0 0 0\n0 0 1 0\n");
  CHECK_THROWS_AS(parse_controlled_blocks(bad), std::invalid_argument);
  std::istringstream truncated("2\n1 0 0 0\n");
  CHECK_THROWS_AS(parse_controlled_blocks(truncated), std::invalid_argument);
}
