"""Closed-form overlap and approximation-error functionals.

Three families share one pattern: a reference state, a window of weight
vectors within radius r of an extremal weight, and an overlap delta
whose deficit 1-delta controls a reconstruction error.  The `weights`,
`su2_cg`, `symmetric`, and `heisenberg` modules carry the closed forms;
`oracle` re-derives everything by brute force and `verify` wires the two
together into pass/fail suites (also reachable via the `definetti`
command-line tool).
"""

from .exact import ExactReal, split_square
from .heisenberg import (
    HeisenbergTriple,
    alpha_coeff,
    alpha_weight,
    alpha_weight_tail_bound,
    coherent_bound,
    delta_number_space,
    epsilon_heisenberg,
)
from .radicals import RadicalSum
from .report import DeltaReport
from .su2_cg import TwoJ, as_twoj, cg, delta_su2
from .symmetric import (
    BoundPair,
    SymTriple,
    bound_exponential,
    closed_form_sum,
    delta_psi_weights,
    dim_sym,
    epsilon,
    exact_error_d2,
    term_overlap,
    weight_profile,
)
from .weights import (
    HeightDecomposition,
    Weight,
    exact_radius,
    height_down,
    height_up,
    lowest_weight,
    simple_root,
    sym_weights,
    type_class_size,
    w_r_set,
    weight_leq,
)

__all__ = [
    "ExactReal",
    "split_square",
    "RadicalSum",
    "DeltaReport",
    "Weight",
    "HeightDecomposition",
    "simple_root",
    "weight_leq",
    "height_down",
    "height_up",
    "lowest_weight",
    "sym_weights",
    "w_r_set",
    "type_class_size",
    "exact_radius",
    "TwoJ",
    "as_twoj",
    "cg",
    "delta_su2",
    "SymTriple",
    "dim_sym",
    "epsilon",
    "term_overlap",
    "weight_profile",
    "delta_psi_weights",
    "closed_form_sum",
    "BoundPair",
    "bound_exponential",
    "exact_error_d2",
    "HeisenbergTriple",
    "alpha_coeff",
    "alpha_weight",
    "alpha_weight_tail_bound",
    "delta_number_space",
    "epsilon_heisenberg",
    "coherent_bound",
]

__version__ = "0.1.0"
