"""The free-field operators of the twisted Heisenberg-Virasoro algebra.

Everything is derived from states of Pi(0) through
:func:`~hvfree.voperator.state_mode_apply`:

    I     = -cLI c(-1)
    omega = 1/2 c(-1)d(-1) + (cL-2)/24 c(-2) - 1/2 d(-2)

with I(n) = I_n and L(n) = omega_{n+1}.  The deformed action replaces
L(n) by L(n) + e^c_n.  Also here: the screening operators Q = e^c_0 and S,
the null operator s_0, Phi_p, the W(2,2) and beta-gamma states and the
Ker Q^m filtration of Pi(p, r).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .fock import (
    C,
    FockElement,
    Pi0,
    PiPR,
    Whittaker,
    basis_vector,
    create,
    d1,
    degree,
    heis_apply,
    lattice_mode_apply,
)
from .linalg import kernel
from .scalars import ONE, Scalar, cL, cLI, mu as MU, scalar
from .voperator import (
    exp_mode_apply,
    exp_state,
    partitions,
    schur_apply,
    state_mode_apply,
    translate,
    vacuum,
)


class UnsupportedSpace(TypeError):
    """The operator is not defined on the given space."""


# ----------------------------------------------------------------------
# generating states


@lru_cache(maxsize=None)
def omega() -> FockElement:
    return FockElement(
        Pi0(),
        {
            (0, (("c", 1), ("d", 1))): scalar(1) / 2,
            (0, (("c", 2),)): (cL - 2) / 24,
            (0, (("d", 2),)): scalar(-1) / 2,
        },
    )


@lru_cache(maxsize=None)
def heisenberg_state() -> FockElement:
    return FockElement(Pi0(), {(0, (("c", 1),)): -cLI})


@lru_cache(maxsize=None)
def barW_state() -> FockElement:
    return FockElement(Pi0(), {(0, (("c", 1), ("c", 1))): ONE, (0, (("c", 2),)): scalar(-2)})


# ----------------------------------------------------------------------
# realized operators


def L(n: int, v: FockElement, deformed: bool = False) -> FockElement:
    out = state_mode_apply(omega(), n + 1, v)
    if deformed:
        out = out + exp_mode_apply(1, n, v)
    return out


def I(n: int, v: FockElement) -> FockElement:  # noqa: E743
    return state_mode_apply(heisenberg_state(), n, v)


def barW(n: int, v: FockElement) -> FockElement:
    return state_mode_apply(barW_state(), n + 1, v)


def W(n: int, v: FockElement) -> FockElement:
    return barW(n, v) * cLI**2


def Q(v: FockElement) -> FockElement:
    """The screening operator Q = e^c_0."""
    return exp_mode_apply(1, 0, v)


def Q_power(k: int, v: FockElement) -> FockElement:
    for _ in range(k):
        if not v:
            break
        v = Q(v)
    return v


def d1_mode(n: int, v: FockElement) -> FockElement:
    return lattice_mode_apply(d1(), n, v)


def S_screen(v: FockElement) -> FockElement:
    """S = sum_{j>=1} (1/j) (d^1(-j) e^c_j - e^c_{-j} d^1(j)), truncated per term."""
    if not isinstance(v.space, PiPR):
        raise UnsupportedSpace("the screening operator S acts on Pi(p, r)")
    A = v.space.c_zero
    out = FockElement(v.space)
    for key, val in v.terms.items():
        b = FockElement._wrap(v.space, {key: val})
        deg = degree(key)
        top = max(deg, deg - 1 - A)
        for j in range(1, top + 1):
            first = d1_mode(-j, exp_mode_apply(1, j, b))
            second = exp_mode_apply(1, -j, d1_mode(j, b))
            out = out + (first - second) * (scalar(1) / j)
    return out


@lru_cache(maxsize=None)
def null_state() -> FockElement:
    """s = (L(-2) - (cL-26)/24 c(-2)) e^{-c} in Pi(0)."""
    e = exp_state(-1)
    return L(-2, e) - create(e, [("c", 2)], (cL - 26) / 24)


def calQ(v: FockElement) -> FockElement:
    """s_0, which vanishes identically on every Pi(0)-module."""
    if isinstance(v.space, Whittaker):
        raise UnsupportedSpace("calQ is checked on Pi(0) and Pi(p, r)")
    return state_mode_apply(null_state(), 0, v)


KINDS = ("L", "I", "barW", "W", "Q", "Sscreen", "calQ")


@dataclass(frozen=True)
class RealizedOp:
    kind: str
    mode: int = 0
    deformed: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        if self.deformed and self.kind != "L":
            raise ValueError("only L has a deformed version")

    def __call__(self, v: FockElement) -> FockElement:
        return apply(self, v)

    def __str__(self):
        name = "Lt" if self.deformed else self.kind
        if self.kind in ("Q", "Sscreen", "calQ"):
            return {"Q": "Q", "Sscreen": "S", "calQ": "calQ"}[self.kind]
        return f"{name}({self.mode})"


def apply(op: RealizedOp, v: FockElement) -> FockElement:
    if op.kind == "L":
        return L(op.mode, v, op.deformed)
    if op.kind == "I":
        return I(op.mode, v)
    if op.kind == "barW":
        return barW(op.mode, v)
    if op.kind == "W":
        return W(op.mode, v)
    if op.kind == "Q":
        return Q(v)
    if op.kind == "Sscreen":
        return S_screen(v)
    return calQ(v)


# ----------------------------------------------------------------------
# the relation L(-2)e^{-c} = (cL-26)/24 c(-2)e^{-c} - 1/2 L(-1)(d(-1)e^{-c})


def relacija_sides(coefficient=None):
    coefficient = (cL - 26) / 24 if coefficient is None else scalar(coefficient)
    e = exp_state(-1)
    lhs = L(-2, e)
    rhs = create(e, [("c", 2)], coefficient) - L(-1, create(e, [("d", 1)])) * (scalar(1) / 2)
    return lhs, rhs


def verify_relacija(bindings=None, coefficient=None) -> bool:
    lhs, rhs = relacija_sides(coefficient)
    return (lhs - rhs).substitute(bindings or {}).is_zero()


# ----------------------------------------------------------------------
# module generators


def make_v(p: int, r, shift: int = 0) -> FockElement:
    """v_{p, r-2*shift} inside Pi(p, r)."""
    return basis_vector(PiPR(p, scalar(r)), shift)


def make_cosingular(p: int, r, shift: int, m: int) -> FockElement:
    """v^{(m)}_{p, r-2 shift} = (-1)^m / (2^m m!) d(-p)^m v_{p, r-2 shift}."""
    if p < 1 or m < 1:
        raise ValueError("cosingular vectors need p >= 1 and m >= 1")
    from math import factorial

    coef = scalar((-1) ** m) / (2**m * factorial(m))
    return create(make_v(p, r, shift), [("d", p)] * m, coef)


def h_pr(p: int, r) -> Scalar:
    r = scalar(r)
    return (1 - p * p) * (cL - 26) / 24 + 1 - p + (1 - r) * p / 2


def phi_apply(p: int, v: FockElement, deformed: bool = False) -> FockElement:
    """Phi_p(L, c) v, built from L (or the deformed L) and Schur polynomials in -c."""
    if p < 1:
        raise ValueError("p must be positive")
    neg_c = -C
    out = FockElement(v.space)
    for i in range(1, p + 1):
        out = out + L(-i, schur_apply(neg_c, p - i, v), deformed)
    inner = L(0, v, deformed) + v * ((cL - 2) * (p - 1) / 24)
    out = out + schur_apply(neg_c, p, inner)
    tail = FockElement(v.space)
    for i in range(2, p + 1):
        tail = tail + heis_apply("c", -i, schur_apply(neg_c, p - i, v)) * (i - 1)
    return out - tail * ((cL - 26) / 24)


# ----------------------------------------------------------------------
# W(2,2) / beta-gamma states


def make_bjmn(kind: str, mu=None) -> FockElement:
    e_minus = exp_state(-1)
    if kind == "tildeOmega":
        mu = MU if mu is None else scalar(mu)
        d3 = translate(translate(translate(e_minus)))
        return omega() + d3 * (mu / 6)
    if kind == "w":
        return FockElement(Pi0(), {(1, (("d", 1),)): ONE, (1, (("c", 1),)): (cL - 14) / 12})
    if kind == "beta":
        return FockElement(Pi0(), {(1, (("d", 1),)): ONE, (1, (("c", 1),)): ONE})
    if kind == "weylGamma":
        return e_minus * (scalar(-1) / 2)
    raise ValueError(f"unknown BJMN state {kind!r}")


def beta_mode(n: int, v: FockElement) -> FockElement:
    """beta(n): coefficient of z^{-n-1}."""
    return state_mode_apply(make_bjmn("beta"), n, v)


def weyl_gamma_mode(n: int, v: FockElement) -> FockElement:
    """gamma(n): coefficient of z^{-n}."""
    return state_mode_apply(make_bjmn("weylGamma"), n - 1, v)


# ----------------------------------------------------------------------
# graded pieces and the Ker Q^m filtration


@lru_cache(maxsize=None)
def monomials(deg: int) -> tuple:
    """All creation monomials in c(-k), d(-k) of total level ``deg``."""
    out = []
    for dc in range(deg + 1):
        for lc in partitions(dc):
            for ld in partitions(deg - dc):
                modes = tuple(sorted([("c", k) for k in lc] + [("d", k) for k in ld]))
                out.append(modes)
    return tuple(sorted(out))


def graded_basis(space, max_degree: int, index: int = 0) -> list:
    """Basis vectors with fixed exponent index and degree <= max_degree."""
    return [basis_vector(space, index, ms) for d in range(max_degree + 1) for ms in monomials(d)]


def weight_piece_keys(p: int, N: int, max_degree: int) -> list:
    """Keys (l, modes) of Pi(p, r) with l*p + degree = N and degree <= max_degree.

    L(0) acts on v_{p,r-2l} with eigenvalue h_{p,r} + l*p, so these keys span
    the part of L(0)-weight h_{p,r} + N; Q preserves it.  For p <= 0 the sign
    of p is taken as is (Q then raises degree).
    """
    keys = []
    for d in range(max_degree + 1):
        if p == 0:
            continue
        if (N - d) % p:
            continue
        ell = (N - d) // p
        keys.extend((ell, ms) for ms in monomials(d))
    return keys


def _q_power_images(space, keys, power):
    images = []
    for key in keys:
        v = FockElement._wrap(space, {key: ONE})
        images.append(Q_power(power, v).terms)
    return images


def kernel_filtration(p: int, r, m: int, max_degree: int, weights=None) -> dict:
    """Ker Q^{m+1} on the weight pieces of Pi(p, r), truncated at max_degree.

    Returns {N: [FockElement, ...]} for N in ``weights`` (default 0..max_degree).
    The truncation is Q-stable since Q lowers the degree by p.
    """
    if p < 1:
        raise ValueError("kernel_filtration needs p >= 1")
    space = PiPR(p, scalar(r))
    weights = range(max_degree + 1) if weights is None else weights
    out = {}
    for N in weights:
        keys = weight_piece_keys(p, N, max_degree)
        ker = kernel(_q_power_images(space, keys, m + 1))
        out[N] = [FockElement(space, {keys[i]: c for i, c in vec.items()}) for vec in ker]
    return out


def piece_dimension(p: int, N: int, max_degree: int) -> int:
    return len(weight_piece_keys(p, N, max_degree))


def q_kernel_negative(p: int, r, N: int, max_degree: int) -> list:
    """Kernel of Q on a truncated weight piece of Pi(-p, r), p >= 1.

    Weight pieces: degree - l*p = N.  Q raises the degree by p.
    """
    space = PiPR(-p, scalar(r))
    keys = []
    for d in range(max_degree + 1):
        if (d - N) % p:
            continue
        keys.extend(((d - N) // p, ms) for ms in monomials(d))
    ker = kernel(_q_power_images(space, keys, 1))
    return [FockElement(space, {keys[i]: c for i, c in vec.items()}) for vec in ker]


def semisimple_L0(v: FockElement) -> FockElement:
    """Diagonal action h_{p,r-2l} + degree on Pi(p, r), from the weight formula."""
    space = v.space
    if not isinstance(space, PiPR):
        raise UnsupportedSpace("semisimple_L0 is defined on Pi(p, r)")
    out = {}
    for key, val in v.terms.items():
        idx = key[0]
        out[key] = val * (h_pr(space.p, space.r - 2 * idx) + degree(key))
    return FockElement._wrap(space, out)


def log_part(v: FockElement) -> FockElement:
    """Deformed L(0) minus its semisimple part."""
    return L(0, v, deformed=True) - semisimple_L0(v)


__all__ = [
    "UnsupportedSpace",
    "omega",
    "heisenberg_state",
    "barW_state",
    "L",
    "I",
    "barW",
    "W",
    "Q",
    "Q_power",
    "d1_mode",
    "S_screen",
    "null_state",
    "calQ",
    "RealizedOp",
    "apply",
    "relacija_sides",
    "verify_relacija",
    "make_v",
    "make_cosingular",
    "h_pr",
    "phi_apply",
    "make_bjmn",
    "beta_mode",
    "weyl_gamma_mode",
    "monomials",
    "graded_basis",
    "weight_piece_keys",
    "kernel_filtration",
    "piece_dimension",
    "q_kernel_negative",
    "semisimple_L0",
    "log_part",
    "vacuum",
]
