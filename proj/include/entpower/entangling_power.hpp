#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "entpower/gates.hpp"
#include "entpower/operator_entanglement.hpp"
#include "entpower/tensor.hpp"

namespace entpower {

using Rational = boost::rational<long long>;

enum class EntropyKind { kLinear, kVonNeumann };

// Haar-average linear-entropy entangling power on d1 x d2, by contraction of
// the doubled-register trace formula.
double ep_unassisted_trace(const MultipartiteOperator& u);

// (d/(d+1))^2 [E(U) + E(U S12) - E(S12)] on d x d, via reshuffle + SVD.
double ep_unassisted_schmidt(const MultipartiteOperator& u);

// (d^2/(d^2+1))^2 [E(U) + E(U S13 S24) - E(S13 S24)] on the four-system
// register (A', A, B, B') with U acting on (A, B) and the cut (A'A)|(BB').
double ep_assisted_schmidt(const MultipartiteOperator& u);

// Assisted trace formula on the doubled eight-system register; capped at
// qudit dimension d_cap (the contraction grows as d^12).
double ep_assisted_trace(const MultipartiteOperator& u,
                         int d_cap = kDefaultAssistedTraceCap);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

// Per-sample stream derived from (master seed, sample index); makes the
// estimate independent of how samples are scheduled.
std::uint64_t derive_sample_seed(std::uint64_t master, std::uint64_t index);

// Monte Carlo estimate of the (un)assisted entangling power for either
// entropy. Unassisted: average entropy of U(psi1 (x) psi2) over independent
// Haar factors. Assisted: Haar |alpha> and |beta> on the doubled sides,
// entanglement across the (A'A)|(BB') cut.
McEstimate ep_monte_carlo(const MultipartiteOperator& u, bool assisted,
                          EntropyKind kind, long n_samples, std::uint64_t seed);

// ebar = -ln(1 - e); requires 0 <= e < 1.
double bar_transform(double e);

struct MaxEntanglementResult {
  double value = 0.0;       // von Neumann entropy achieved by the witness
  Vector witness_left;      // product input factors
  Vector witness_right;
};

// Lower bound on Emax via random-restart projected ascent over product
// inputs; the returned value is re-evaluated at the stored witness.
MaxEntanglementResult max_entanglement_estimate(const MultipartiteOperator& u,
                                                bool assisted, int restarts = 12,
                                                int iterations = 400,
                                                std::uint64_t seed = 20240901);

// Closed forms in d (CPHASE shares the SUM row).
Rational closed_form_power(GateKind kind, long long d, bool assisted);
Rational closed_form_operator_entanglement(GateKind kind, long long d);

// -ln(1 - e_p) evaluated from the exact rational.
double bar_closed_form(GateKind kind, long long d, bool assisted);

// Leading asymptotic term of ebar (Table rows: SUM ln d - ln 3 / ln d,
// DSUM ln d - ln 3 / 2 ln d - ln 3, SWAP 0 / 2 ln d - ln 4).
double asymptotic_leading_term(GateKind kind, bool assisted, int d);

struct AsymptoticRow {
  GateKind gate;
  bool assisted;
  int d;
  double bar_value;
  double leading_term;
  double residual;
};

std::vector<AsymptoticRow> asymptotic_table(const std::vector<GateKind>& gates,
                                            const std::vector<int>& ds);

struct Prop1Report {
  int d = 0;
  double ep = 0.0;
  double ep_anc = 0.0;
  double operator_ent = 0.0;
  double dev_unassisted = 0.0;    // |ep - (d/(d+1))^2 E|
  double dev_assisted = 0.0;      // |ep_anc - (d^2/(d^2+1))^2 E|
  double dev_ratio = 0.0;         // |ep_anc - ((d^2+d)/(d^2+1))^2 ep|
  double dev_es1 = 0.0;           // |E(C_U S12) - (1 - 1/d^2)|
  double dev_e1324 = 0.0;         // |E(C_U S13 S24) - (1 - 1/d^4)|
  double tolerance = kFactorTol;
  bool passed = false;
};

Prop1Report prop1_check(const ControlledGate& gate);
// Same checks on an arbitrary two-qudit unitary (counterexample probe).
Prop1Report prop1_check_operator(const MultipartiteOperator& u);

}  // namespace entpower
