"""Entangling power and operator entanglement of two-qudit gates.

Thin Python layer over the C++ core. All heavy lifting (operator Schmidt
decompositions, doubled-register trace contractions, Monte Carlo averaging)
happens in the compiled module.
"""

from entpower._core import (
    __version__,
    bar_transform,
    clock_z,
    closed_form_operator_entanglement,
    closed_form_power,
    closed_form_power_fraction,
    controlled_u,
    cphase_gate,
    detect_spin_maxima,
    dsum_gate,
    ep_assisted_schmidt,
    ep_assisted_trace,
    ep_monte_carlo,
    ep_unassisted_schmidt,
    ep_unassisted_trace,
    fourier,
    haar_random_state,
    haar_random_unitary,
    linear_entropy,
    linear_op_ent_via_trace,
    linear_operator_entanglement,
    max_entanglement_estimate,
    maximally_entangled_pair,
    operator_schmidt_coefficients,
    prop1_check,
    schmidt_spectrum,
    shift_x,
    spin_A_matrix,
    spin_curve,
    spin_gate,
    spin_linear_entanglement,
    sum_gate,
    swap_gate,
    theta_grid,
    von_neumann_entropy,
    von_neumann_operator_entanglement,
)

__all__ = [
    "__version__",
    "bar_transform",
    "clock_z",
    "closed_form_operator_entanglement",
    "closed_form_power",
    "closed_form_power_fraction",
    "controlled_u",
    "cphase_gate",
    "detect_spin_maxima",
    "dsum_gate",
    "ep_assisted_schmidt",
    "ep_assisted_trace",
    "ep_monte_carlo",
    "ep_unassisted_schmidt",
    "ep_unassisted_trace",
    "fourier",
    "haar_random_state",
    "haar_random_unitary",
    "linear_entropy",
    "linear_op_ent_via_trace",
    "linear_operator_entanglement",
    "max_entanglement_estimate",
    "maximally_entangled_pair",
    "operator_schmidt_coefficients",
    "prop1_check",
    "schmidt_spectrum",
    "shift_x",
    "spin_A_matrix",
    "spin_curve",
    "spin_gate",
    "spin_linear_entanglement",
    "sum_gate",
    "swap_gate",
    "theta_grid",
    "von_neumann_entropy",
    "von_neumann_operator_entanglement",
]
