"""Vertex operators of Pi(0) acting on Fock, lattice and Whittaker spaces.

Mode convention: for a state A, ``A_n`` is the coefficient of z^{-n-1} in
Y(A, z).  For the exponentials

    Y(e^{mc}, z) = exp(m sum_k c(-k) z^k / k) exp(-m sum_k c(k) z^-k / k) T_m z^A

with A = m <c, exponent> on lattice spaces (T_m shifts the exponent by mc,
trivial cocycle) and A = -m on the Whittaker module (T_m multiplies by
lambda^m and replaces d(0) by d(0) - 2m).  Descendant states are handled by
the iterate identity

    (h(-n)B)_k = sum_{j>=0} C(n+j-1, j) [h(-n-j) B_{k+j} - (-1)^n B_{k-n-j} h(j)].
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial

from .fock import (
    FockElement,
    LatticeVector,
    Pi0,
    Whittaker,
    add_modes,
    basis_vector,
    degree,
    heis_apply,
    lattice_mode_apply,
)
from .scalars import ONE

__all__ = [
    "NonIntegerPower",
    "partitions",
    "schur_terms",
    "schur_apply",
    "exp_mode_apply",
    "state_mode_apply",
    "translate",
    "vacuum",
    "exp_state",
    "vanishing_bound",
    "clear_caches",
]


class NonIntegerPower(ValueError):
    """The z-power of an exponential vertex operator is not an integer."""


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """Partitions of n as weakly decreasing tuples."""
    if n == 0:
        return ((),)
    out = []

    def rec(rest, maxpart, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for k in range(min(rest, maxpart), 0, -1):
            acc.append(k)
            rec(rest - k, k, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


@lru_cache(maxsize=None)
def schur_terms(p: int) -> tuple:
    """S_p(x_1, x_2, ...) as ((coefficient, parts), ...).

    S_p is the y^p coefficient of exp(sum_n x_n y^n / n); the term of a
    partition with m_k parts equal to k has coefficient prod 1/(k^m_k m_k!).
    """
    if p < 0:
        return ()
    out = []
    for lam in partitions(p):
        coef = Fraction(1)
        for k in set(lam):
            mk = lam.count(k)
            coef /= k**mk * factorial(mk)
        out.append((coef, lam))
    return tuple(out)


def schur_apply(g: LatticeVector, p: int, v: FockElement) -> FockElement:
    """Multiply v by S_p(g(-1), ..., g(-p))."""
    if p < 0:
        return FockElement(v.space)
    result = FockElement(v.space)
    if not g.beta:
        for coef, parts in schur_terms(p):
            x = g.alpha ** len(parts) * coef
            out = {}
            new = tuple(("c", k) for k in parts)
            for (idx, ms), val in v.terms.items():
                key = (idx, add_modes(ms, new))
                out[key] = out[key] + val * x if key in out else val * x
            result = result + FockElement._wrap(v.space, out)
        return result
    for coef, parts in schur_terms(p):
        w = v
        for k in parts:
            w = lattice_mode_apply(g, -k, w)
        result = result + w * coef
    return result


# ----------------------------------------------------------------------
# exponential operators


@lru_cache(maxsize=None)
def _exp_basis(m: int, n: int, A: int, modes: tuple) -> tuple:
    """e^{mc}_n on a monomial, before the T_m step.

    Returns ((coefficient, new_modes), ...) with rational coefficients.
    Conjugating by the annihilation part turns each d(-k) into
    d(-k) - 2m z^{-k}, so the annihilators are expanded binomially.
    """
    dcounts: dict = {}
    for g, k in modes:
        if g == "d":
            dcounts[k] = dcounts.get(k, 0) + 1
    levels = sorted(dcounts)
    out: dict = {}
    for choice in product(*(range(dcounts[k] + 1) for k in levels)):
        b = 0
        coef = Fraction(1)
        remaining = list(modes)
        for k, j in zip(levels, choice):
            if j:
                b += k * j
                coef *= comb(dcounts[k], j) * (-2 * m) ** j
                for _ in range(j):
                    remaining.remove(("d", k))
        if not coef:
            continue
        a = b - A - n - 1
        if a < 0:
            continue
        rem = tuple(remaining)
        for sc, parts in schur_terms(a):
            x = coef * sc * m ** len(parts)
            if not x:
                continue
            key = add_modes(rem, (("c", k) for k in parts))
            out[key] = out.get(key, 0) + x
    return tuple((c, k) for k, c in out.items() if c)


def _shift_power(space, m: int) -> int:
    cz = space.c_zero
    if not isinstance(cz, int):
        raise NonIntegerPower(f"<c, exponent> = {cz} is not an integer")
    return m * cz


def exp_mode_apply(m: int, n: int, v: FockElement) -> FockElement:
    """Apply e^{mc}_n (coefficient of z^{-n-1} in Y(e^{mc}, z))."""
    space = v.space
    A = _shift_power(space, m)
    out: dict = {}
    if isinstance(space, Whittaker):
        lam_m = space.lam**m
        for (idx, ms), val in v.terms.items():
            base = val * lam_m
            for q, newm in _exp_basis(m, n, A, ms):
                x = base * q
                # d(0)^idx -> (d(0) - 2m)^idx
                for j in range(idx + 1):
                    c = comb(idx, j) * (-2 * m) ** (idx - j)
                    if not c:
                        continue
                    key = (j, newm)
                    y = x * c
                    prev = out.get(key)
                    out[key] = y if prev is None else prev + y
        return FockElement._wrap(space, out)
    for (idx, ms), val in v.terms.items():
        for q, newm in _exp_basis(m, n, A, ms):
            key = (idx + m, newm)
            y = val * q
            prev = out.get(key)
            out[key] = y if prev is None else prev + y
    return FockElement._wrap(space, out)


# ----------------------------------------------------------------------
# descendant states


def vacuum() -> FockElement:
    return basis_vector(Pi0(), 0)


def exp_state(m: int, modes=()) -> FockElement:
    """The state (modes) e^{mc} of Pi(0)."""
    return basis_vector(Pi0(), m, modes)


def vanishing_bound(state_modes: tuple, m: int, space, deg: int) -> int:
    """Largest k for which (modes e^{mc})_k can be nonzero on degree ``deg``."""
    return deg + sum(k for _, k in state_modes) - 1 - _shift_power(space, m)


@lru_cache(maxsize=None)
def _word_basis(modes: tuple, m: int, k: int, space, key) -> FockElement:
    v = FockElement._wrap(space, {key: ONE})
    if not modes:
        return exp_mode_apply(m, k, v)
    D = degree(key)
    if k > vanishing_bound(modes, m, space, D):
        return FockElement(space)
    (g, n), rest = modes[0], modes[1:]
    bound = vanishing_bound(rest, m, space, D)
    result: dict = {}

    def acc(el: FockElement, coef):
        for kk, val in el.terms.items():
            y = val * coef
            prev = result.get(kk)
            result[kk] = y if prev is None else prev + y

    j = 0
    while k + j <= bound:
        inner = _word_basis(rest, m, k + j, space, key)
        if inner:
            acc(heis_apply(g, -n - j, inner), comb(n + j - 1, j))
        j += 1
    sign = -1 if n % 2 == 0 else 1  # -(-1)^n
    for j in range(0, D + 1):
        hv = heis_apply(g, j, v)
        if not hv:
            continue
        acc(_word_apply(rest, m, k - n - j, hv), sign * comb(n + j - 1, j))
    return FockElement._wrap(space, result)


def _word_apply(modes: tuple, m: int, k: int, v: FockElement) -> FockElement:
    result: dict = {}
    for key, val in v.terms.items():
        for kk, c in _word_basis(modes, m, k, v.space, key).terms.items():
            y = c * val
            prev = result.get(kk)
            result[kk] = y if prev is None else prev + y
    return FockElement._wrap(v.space, result)


@lru_cache(maxsize=None)
def _state_basis(state: FockElement, k: int, space, key) -> FockElement:
    result: dict = {}
    for (m, modes), coef in state.terms.items():
        for kk, c in _word_basis(modes, m, k, space, key).terms.items():
            y = c * coef
            prev = result.get(kk)
            result[kk] = y if prev is None else prev + y
    return FockElement._wrap(space, result)


def state_mode_apply(state: FockElement, k: int, v: FockElement) -> FockElement:
    """Apply the k-th mode of a Pi(0) state to v."""
    if not isinstance(state.space, Pi0):
        raise TypeError("vertex operators come from states of Pi(0)")
    if len(v.terms) == 1:
        ((key, val),) = v.terms.items()
        res = _state_basis(state, k, v.space, key)
        return res if val == 1 else res * val
    result: dict = {}
    for key, val in v.terms.items():
        for kk, c in _state_basis(state, k, v.space, key).terms.items():
            y = c * val
            prev = result.get(kk)
            result[kk] = y if prev is None else prev + y
    return FockElement._wrap(v.space, result)


def translate(state: FockElement) -> FockElement:
    """The translation operator D on Pi(0): D h(-n) = n h(-n-1), D e^{mc} = m c(-1) e^{mc}."""
    if not isinstance(state.space, Pi0):
        raise TypeError("translate acts on states of Pi(0)")
    out: dict = {}

    def acc(key, val):
        prev = out.get(key)
        out[key] = val if prev is None else prev + val

    for (m, modes), coef in state.terms.items():
        for mode in set(modes):
            g, n = mode
            t = modes.count(mode)
            i = modes.index(mode)
            rest = modes[:i] + modes[i + 1:]
            acc((m, add_modes(rest, [(g, n + 1)])), coef * (t * n))
        if m:
            acc((m, add_modes(modes, [("c", 1)])), coef * m)
    return FockElement._wrap(Pi0(), out)


def clear_caches() -> None:
    _exp_basis.cache_clear()
    _word_basis.cache_clear()
    _state_basis.cache_clear()
