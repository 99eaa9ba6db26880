"""The Whittaker module Pi_lambda with the deformed action.

Basis vectors are d(0)^k times a monomial in c(-n), d(-n) applied to w_lambda;
c(0) = -1, u_n w = 0 for n >= 1 and u_0 w = lambda w with u = e^c.
"""

from __future__ import annotations

from math import comb

from .fock import FockElement, Whittaker, basis_vector, degree
from .hvrealize import I, L
from .linalg import Echelon, rank
from .scalars import Scalar, cL, scalar


def whittaker_space(lam) -> Whittaker:
    return Whittaker(scalar(lam))


def w_vector(lam, d0power: int = 0, modes=()) -> FockElement:
    return basis_vector(whittaker_space(lam), d0power, modes)


def top_operator(m: int, e: FockElement) -> FockElement:
    """The zero-degree part of e^{mc}: lambda^m and d(0) -> d(0) - 2m."""
    space = e.space
    if not isinstance(space, Whittaker):
        raise TypeError("top_operator acts on the Whittaker module")
    lam_m = space.lam**m
    out: dict = {}
    for (k, ms), val in e.terms.items():
        for j in range(k + 1):
            key = (j, ms)
            y = val * lam_m * (comb(k, j) * (-2 * m) ** (k - j))
            out[key] = out[key] + y if key in out else y
    return FockElement._wrap(space, out)


def deformed_apply(gen: str, n: int, e: FockElement) -> FockElement:
    if gen == "L":
        return L(n, e, deformed=True)
    if gen == "I":
        return I(n, e)
    raise ValueError(f"generator must be 'L' or 'I', got {gen!r}")


def highest_weight(lam) -> Scalar:
    """h = (cL-2)/24 + lambda."""
    return (cL - 2) / 24 + scalar(lam)


def _inside(e: FockElement, D: int, K: int) -> bool:
    return all(degree(k) <= D and k[0] <= K for k in e.terms)


def cyclic_span(lam, n: int, D: int, K: int) -> Echelon:
    """A spanning set of U(H).d(0)^n w_lambda inside degree <= D, d0power <= K.

    Breadth-first: apply deformed L(k), I(k) for |k| <= D (L(0) included,
    which yields the polynomials in L(0)) to every new vector, keeping only
    images that lie inside the bounds.  Everything kept lies in the cyclic
    module, so membership tests are sound (never a false positive).
    """
    start = w_vector(lam, n)
    ech = Echelon()
    ech.add(dict(start.terms))
    queue = [start]
    ops = [("L", k) for k in range(-D, D + 1)] + [("I", k) for k in range(-D, D + 1) if k]
    while queue:
        nxt = []
        for v in queue:
            for gen, k in ops:
                img = deformed_apply(gen, k, v)
                if not img or not _inside(img, D, K):
                    continue
                red = ech.reduce(dict(img.terms))
                if red and ech.add(red):
                    nxt.append(FockElement._wrap(v.space, red))
        queue = nxt
    return ech


def in_span(ech: Echelon, e: FockElement) -> bool:
    return ech.contains(dict(e.terms))


def slice_basis(lam, K: int) -> list:
    """d(0)^K w, ..., d(0)^0 w (descending powers)."""
    return [w_vector(lam, k) for k in range(K, -1, -1)]


def slice_matrix(lam, K: int, op=None) -> list:
    """Matrix of an operator (default deformed L(0)) on span{d(0)^k w}, descending order.

    Entry [i][j] is the coefficient of basis i in op(basis j).
    """
    op = op or (lambda e: deformed_apply("L", 0, e))
    basis = slice_basis(lam, K)
    keys = [next(iter(b.terms)) for b in basis]
    cols = [op(b) for b in basis]
    for c in cols:
        for key in c.terms:
            if key not in keys:
                raise ValueError("operator leaves the degree-zero slice")
    return [[cols[j].terms.get(keys[i], scalar(0)) for j in range(len(basis))] for i in range(len(basis))]


def nilpotent_rank(lam, K: int) -> int:
    """Rank of deformed L(0) - ((cL-2)/24 + lambda) on the degree-zero slice."""
    h = highest_weight(lam)
    vecs = []
    for b in slice_basis(lam, K):
        vecs.append(dict((deformed_apply("L", 0, b) - b * h).terms))
    return rank(vecs)


__all__ = [
    "whittaker_space",
    "w_vector",
    "top_operator",
    "deformed_apply",
    "highest_weight",
    "cyclic_span",
    "in_span",
    "slice_basis",
    "slice_matrix",
    "nilpotent_rank",
]
