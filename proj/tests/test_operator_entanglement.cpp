#include "entpower/operator_entanglement.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "entpower/gates.hpp"

using namespace entpower;

namespace {

// Brute-force oracle for the doubled-register trace: materializes
// V (x) V P_sigma V^dag (x) V^dag P_tau explicitly.
Complex doubled_trace_bruteforce(const MultipartiteOperator& v,
                                 const std::vector<int>& sigma,
                                 const std::vector<int>& tau) {
  const int n = v.num_systems();
  std::vector<int> doubled_dims = v.dims();
  doubled_dims.insert(doubled_dims.end(), v.dims().begin(), v.dims().end());

  const auto perm_op = [&](const std::vector<int>& subset) {
    Matrix p = Matrix::Identity(
        identity_operator(doubled_dims).dim(), identity_operator(doubled_dims).dim());
    for (int k : subset)
      p = (swap_builder(doubled_dims, k, k + n).matrix() * p).eval();
    return p;
  };

  const Matrix vv = kron(v.matrix(), v.matrix());
  return (vv * perm_op(sigma) * vv.adjoint() * perm_op(tau)).trace();
}

MultipartiteOperator random_two_qudit(int d, std::mt19937_64& rng) {
  return {haar_random_unitary(d * d, rng), {d, d}};
}

}  // namespace

TEST_CASE("operator_schmidt") {
  std::mt19937_64 rng(31);
  SUBCASE("product operator has a single coefficient |A| |B|") {
    const Matrix a = haar_random_unitary(2, rng);
    const Matrix b = haar_random_unitary(3, rng);
    const MultipartiteOperator ab(kron(a, b), {2, 3});
    const auto schmidt = operator_schmidt(ab, Bipartition::prefix(1, 2));
    CHECK(schmidt.coefficients(0) ==
          doctest::Approx(hs_norm(a) * hs_norm(b)).epsilon(1e-12));
    for (int k = 1; k < schmidt.coefficients.size(); ++k)
      CHECK(schmidt.coefficients(k) < kFactorTol);
  }
  SUBCASE("swap has d^2 coefficients all equal to one") {
    for (int d : {2, 3, 4}) {
      const auto schmidt =
          operator_schmidt(swap_gate(d), Bipartition::prefix(1, 2));
      CHECK(schmidt.coefficients.size() == d * d);
      for (int k = 0; k < schmidt.coefficients.size(); ++k)
        CHECK(schmidt.coefficients(k) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("SUM has d coefficients all sqrt(d)") {
    for (int d : {2, 3, 4}) {
      const auto schmidt = operator_schmidt(sum_gate(d), Bipartition::prefix(1, 2));
      const double root_d = std::sqrt(double(d));
      for (int k = 0; k < d; ++k)
        CHECK(schmidt.coefficients(k) == doctest::Approx(root_d).epsilon(1e-12));
      for (int k = d; k < schmidt.coefficients.size(); ++k)
        CHECK(schmidt.coefficients(k) < kFactorTol);
    }
  }
  SUBCASE("unitary normalization sum s^2 = dL dR") {
    for (int d : {2, 3}) {
      for (int trial = 0; trial < 10; ++trial) {
        const auto u = random_two_qudit(d, rng);
        const auto schmidt = operator_schmidt(u, Bipartition::prefix(1, 2));
        CHECK(schmidt.coefficients.squaredNorm() ==
              doctest::Approx(double(d) * d).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("linear and von Neumann operator entanglement") {
  SUBCASE("identity carries none") {
    const auto id = identity_operator({3, 3});
    CHECK(linear_operator_entanglement(id, Bipartition::prefix(1, 2)) == 0.0);
    CHECK(von_neumann_operator_entanglement(id, Bipartition::prefix(1, 2)) == 0.0);
  }
  SUBCASE("table values for SUM, SWAP, DSUM") {
    for (int d : {2, 3, 4, 5}) {
      const auto split = Bipartition::prefix(1, 2);
      CHECK(linear_operator_entanglement(sum_gate(d), split) ==
            doctest::Approx(1.0 - 1.0 / d).epsilon(1e-12));
      CHECK(linear_operator_entanglement(swap_gate(d), split) ==
            doctest::Approx(1.0 - 1.0 / (d * d)).epsilon(1e-12));
      CHECK(linear_operator_entanglement(dsum_gate(d), split) ==
            doctest::Approx(1.0 - 1.0 / (d * d)).epsilon(1e-12));
      CHECK(linear_operator_entanglement(cphase_gate(d), split) ==
            doctest::Approx(1.0 - 1.0 / d).epsilon(1e-12));
    }
  }
  SUBCASE("uniform-spectrum law: r equal coefficients give ln r and 1 - 1/r") {
    // SWAP: d^2 equal coefficients; SUM: d equal coefficients
    for (int d : {2, 3, 4}) {
      const auto split = Bipartition::prefix(1, 2);
      CHECK(von_neumann_operator_entanglement(swap_gate(d), split) ==
            doctest::Approx(2.0 * std::log(double(d))).epsilon(1e-10));
      CHECK(von_neumann_operator_entanglement(sum_gate(d), split) ==
            doctest::Approx(std::log(double(d))).epsilon(1e-10));
    }
  }
  SUBCASE("E(U) = E(U^dag)") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
      const int d = 2 + trial % 2;
      const auto u = random_two_qudit(d, rng);
      CHECK(std::abs(linear_operator_entanglement(u, Bipartition::prefix(1, 2)) -
                     linear_operator_entanglement(u.adjoint(),
                                                  Bipartition::prefix(1, 2))) <
            kFactorTol);
    }
  }
  SUBCASE("local unitaries leave the coefficients alone") {
    std::mt19937_64 rng(12);
    for (int d : {2, 3}) {
      const auto u = random_two_qudit(d, rng);
      const Matrix a = haar_random_unitary(d, rng), b = haar_random_unitary(d, rng);
      const Matrix c = haar_random_unitary(d, rng), e = haar_random_unitary(d, rng);
      const MultipartiteOperator dressed(kron(a, b) * u.matrix() * kron(c, e),
                                         {d, d});
      CHECK(std::abs(
                linear_operator_entanglement(u, Bipartition::prefix(1, 2)) -
                linear_operator_entanglement(dressed, Bipartition::prefix(1, 2))) <
            kFactorTol);
    }
  }
  SUBCASE("non-unitary input refused") {
    const MultipartiteOperator bad(2.0 * Matrix::Identity(4, 4), {2, 2});
    CHECK_THROWS_AS(linear_operator_entanglement(bad, Bipartition::prefix(1, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("doubled_swap_trace against the materialized oracle") {
  std::mt19937_64 rng(77);
  SUBCASE("two systems, all swap-subset combinations") {
    for (const auto& dims : {std::vector<int>{2, 2}, std::vector<int>{2, 3}}) {
      int total = 1;
      for (int d : dims) total *= d;
      const MultipartiteOperator u(haar_random_unitary(total, rng), dims);
      for (const auto& sigma : {std::vector<int>{0}, std::vector<int>{1},
                                std::vector<int>{0, 1}}) {
        for (const auto& tau : {std::vector<int>{0}, std::vector<int>{1},
                                std::vector<int>{0, 1}}) {
          const Complex fast = doubled_swap_trace(u, sigma, tau);
          const Complex slow = doubled_trace_bruteforce(u, sigma, tau);
          CHECK(std::abs(fast - slow) < 1e-8);
        }
      }
    }
  }
  SUBCASE("four systems at d=2") {
    const std::vector<int> dims{2, 2, 2, 2};
    const MultipartiteOperator u(haar_random_unitary(16, rng), dims);
    const std::vector<int> left{0, 1}, right{2, 3};
    CHECK(std::abs(doubled_swap_trace(u, left, left) -
                   doubled_trace_bruteforce(u, left, left)) < 1e-7);
    CHECK(std::abs(doubled_swap_trace(u, right, left) -
                   doubled_trace_bruteforce(u, right, left)) < 1e-7);
  }
}

TEST_CASE("linear_op_ent_via_trace") {
  std::mt19937_64 rng(41);
  SUBCASE("agrees with the SVD route on Haar unitaries") {
    for (int d : {2, 3}) {
      for (int trial = 0; trial < 50; ++trial) {
        const auto u = random_two_qudit(d, rng);
        const auto split = Bipartition::prefix(1, 2);
        CHECK(std::abs(linear_op_ent_via_trace(u, split) -
                       linear_operator_entanglement(u, split)) < kFactorTol);
      }
    }
  }
  SUBCASE("E(S13 S24) = 1 - 1/d^4") {
    for (int d : {2, 3}) {
      const std::vector<int> dims{d, d, d, d};
      const Matrix pair = swap_builder(dims, 0, 2).matrix() *
                          swap_builder(dims, 1, 3).matrix();
      const MultipartiteOperator op(pair, dims);
      const auto cut = Bipartition::prefix(2, 4);
      const double expected = 1.0 - 1.0 / std::pow(double(d), 4);
      CHECK(linear_op_ent_via_trace(op, cut) ==
            doctest::Approx(expected).epsilon(1e-12));
      CHECK(linear_operator_entanglement(op, cut) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("E(DSUM S13 S24) = 1 - 1/d^3") {
    for (int d : {2, 3}) {
      const std::vector<int> dims{d, d, d, d};
      const Matrix pair = swap_builder(dims, 0, 2).matrix() *
                          swap_builder(dims, 1, 3).matrix();
      const Matrix embedded = embed(dsum_gate(d), dims, {1, 2}).matrix();
      const MultipartiteOperator op(embedded * pair, dims);
      const auto cut = Bipartition::prefix(2, 4);
      const double expected = 1.0 - 1.0 / std::pow(double(d), 3);
      CHECK(linear_op_ent_via_trace(op, cut) ==
            doctest::Approx(expected).epsilon(1e-11));
      CHECK(linear_operator_entanglement(op, cut) ==
            doctest::Approx(expected).epsilon(1e-11));
    }
  }
  SUBCASE("cap applies to four-system inputs") {
    const std::vector<int> dims{4, 4, 4, 4};
    const auto op = identity_operator(dims);
    CHECK_THROWS_AS(linear_op_ent_via_trace(op, Bipartition::prefix(2, 4)),
                    std::invalid_argument);
  }
  SUBCASE("unequal sides refused") {
    const auto op = identity_operator({2, 3});
    CHECK_THROWS_AS(linear_op_ent_via_trace(op, Bipartition::prefix(1, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("spin A matrix") {
  SUBCASE("unit trace and 1/d diagonal") {
    for (int d : {2, 3, 5}) {
      const Matrix a = spin_A_matrix(0.77, d);
      CHECK(std::abs(a.trace() - Complex(1.0, 0.0)) < kExactTol);
      for (int m = 0; m < d; ++m)
        CHECK(std::abs(a(m, m) - Complex(1.0 / d, 0.0)) < kExactTol);
    }
  }
  SUBCASE("2x2 eigenvalues at theta = pi, closed-form oracle") {
    // A01(pi) = (1 + e^{-i pi})/4 = 0, so both eigenvalues equal 1/2
    const Matrix a = spin_A_matrix(M_PI, 2);
    CHECK(std::abs(a(0, 1)) < kExactTol);
    const auto mu = hermitian_eigenvalues(a);
    const double tr = a(0, 0).real() + a(1, 1).real();
    const double off = std::abs(a(0, 1));
    const double disc = std::sqrt(std::pow((a(0, 0) - a(1, 1)).real() / 2.0, 2) +
                                  off * off);
    CHECK(mu(0) == doctest::Approx(tr / 2.0 + disc).epsilon(1e-12));
    CHECK(mu(1) == doctest::Approx(tr / 2.0 - disc).epsilon(1e-12));
    CHECK(mu(0) == doctest::Approx(0.5));
    CHECK(mu(1) == doctest::Approx(0.5));
  }
  SUBCASE("spin-1/2 closed form E = sin^2(theta/2)/2") {
    for (double theta : {0.0, 0.4, 1.3, M_PI, 5.0}) {
      const double expected = 0.5 * std::pow(std::sin(theta / 2.0), 2);
      CHECK(spin_linear_entanglement(theta, 2) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
  SUBCASE("CPHASE point reaches 1 - 1/d") {
    for (int d : {2, 3, 4, 5})
      CHECK(spin_linear_entanglement(2.0 * M_PI / d, d) ==
            doctest::Approx(1.0 - 1.0 / d).epsilon(1e-12));
  }
  SUBCASE("A-matrix route equals the generic reshuffle route") {
    for (int d : {2, 3, 4}) {
      for (double theta : {0.3, 1.1, 2.9, 4.6}) {
        const double generic = linear_operator_entanglement(
            spin_gate(theta, d), Bipartition::prefix(1, 2));
        CHECK(std::abs(spin_linear_entanglement(theta, d) - generic) < kFactorTol);
      }
    }
  }
  SUBCASE("periodicity at the matrix level") {
    for (int d : {2, 4}) {
      CHECK(spin_linear_entanglement(2.0 * M_PI, d) ==
            spin_linear_entanglement(0.0, d));
      CHECK(std::abs(spin_linear_entanglement(1.3 + 2.0 * M_PI, d) -
                     spin_linear_entanglement(1.3, d)) < kExactTol);
    }
  }
}

TEST_CASE("controlled gates keep d^2 equal coefficients after a swap") {
  std::mt19937_64 rng(55);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto cu = controlled_u(haar_random_blocks(d, rng));
      const MultipartiteOperator cus(cu.matrix() * swap_gate(d).matrix(), {d, d});
      const auto schmidt = operator_schmidt(cus, Bipartition::prefix(1, 2));
      CHECK(schmidt.coefficients.size() == d * d);
      for (int k = 0; k < schmidt.coefficients.size(); ++k)
        CHECK(schmidt.coefficients(k) == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("spin maxima detection on the declared grid") {
  const auto grid = theta_grid(2001);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 2.0 * M_PI);

  const auto curve = spin_curve(2, grid);
  const auto maxima = detect_spin_maxima(2, grid, curve);
  REQUIRE(maxima.size() == 1);
  CHECK(maxima[0].grid_index == 1000);
  CHECK(maxima[0].value == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(maxima[0].theta - M_PI) < 1e-6);
}
