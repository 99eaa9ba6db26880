"""Free-field realization of the twisted Heisenberg-Virasoro algebra at level zero.

Exact symbolic engine: rational-function scalars, lattice Fock spaces,
vertex operators of Pi(0), the realized L(n), I(n) and screening operators,
abstract Verma modules and the Whittaker module.
"""

from .fock import C, D, FockElement, LatticeVector, Pi0, PiPR, Whittaker, basis_vector, heis_apply, pairing
from .grammar import StateParseError, parse_fock, parse_state, parse_verma
from .hvrealize import (
    I,
    L,
    Q,
    RealizedOp,
    S_screen,
    UnsupportedSpace,
    W,
    apply,
    barW,
    calQ,
    kernel_filtration,
    make_bjmn,
    make_cosingular,
    make_v,
    phi_apply,
    verify_relacija,
)
from .scalars import DivisionByZeroScalar, Scalar, parse_scalar, scalar, substitute
from .verma import HWData, VermaElement, act, is_singular, phi_element, schur_singular_element
from .voperator import NonIntegerPower, exp_mode_apply, schur_apply, state_mode_apply, translate

__all__ = [
    "C", "D", "FockElement", "LatticeVector", "Pi0", "PiPR", "Whittaker", "basis_vector", "heis_apply", "pairing",
    "StateParseError", "parse_fock", "parse_state", "parse_verma",
    "I", "L", "Q", "RealizedOp", "S_screen", "UnsupportedSpace", "W", "apply", "barW", "calQ",
    "kernel_filtration", "make_bjmn", "make_cosingular", "make_v", "phi_apply", "verify_relacija",
    "DivisionByZeroScalar", "Scalar", "parse_scalar", "scalar", "substitute",
    "HWData", "VermaElement", "act", "is_singular", "phi_element", "schur_singular_element",
    "NonIntegerPower", "exp_mode_apply", "schur_apply", "state_mode_apply", "translate",
]
