"""Lattice Fock spaces for the rank-two hyperbolic lattice spanned by c, d.

The Gram matrix is <c,c> = <d,d> = 0, <c,d> = 2.  Three kinds of spaces
are supported, all modules for the vertex algebra Pi(0) = M(1) (x) C[Zc]:

* ``Pi0``             -- Pi(0) itself; basis vectors carry e^{mc}.
* ``PiPR(p, r)``      -- Pi(p, r) = Pi(0).e^{gamma_{p,r}}; the basis index l
                         stands for the exponent gamma_{p,r} + l c, that is
                         the vector v_{p,r-2l}.
* ``Whittaker(lam)``  -- Pi_lam = C[d(0)] (x) M(1); the basis index is the
                         power of the free variable d(0).

A basis vector is the pair ``(index, modes)`` where ``modes`` is a sorted
tuple of creation modes ``("c", k)`` / ``("d", k)`` standing for c(-k),
d(-k) with k >= 1.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Iterable

from .scalars import ONE, ZERO, Scalar, cL, scalar

__all__ = [
    "LatticeVector",
    "C",
    "D",
    "pairing",
    "d1",
    "d2",
    "gamma",
    "Pi0",
    "PiPR",
    "Whittaker",
    "FockElement",
    "basis_vector",
    "degree",
    "heis_apply",
    "lattice_mode_apply",
    "create",
    "add_modes",
]


@dataclass(frozen=True)
class LatticeVector:
    """alpha*c + beta*d in the complexified lattice."""

    alpha: Scalar
    beta: Scalar

    def __post_init__(self):
        object.__setattr__(self, "alpha", scalar(self.alpha))
        object.__setattr__(self, "beta", scalar(self.beta))

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.alpha + other.alpha, self.beta + other.beta)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.alpha - other.alpha, self.beta - other.beta)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.alpha, -self.beta)

    def __mul__(self, k) -> "LatticeVector":
        k = scalar(k)
        return LatticeVector(self.alpha * k, self.beta * k)

    __rmul__ = __mul__

    def __str__(self):
        return f"({self.alpha})*c + ({self.beta})*d"


C = LatticeVector(1, 0)
D = LatticeVector(0, 1)


def pairing(a: LatticeVector, b: LatticeVector) -> Scalar:
    return 2 * (a.alpha * b.beta + a.beta * b.alpha)


def d1() -> LatticeVector:
    return D + C * ((cL - 26) / 12)


def d2() -> LatticeVector:
    return D - C * ((cL - 26) / 12)


def gamma(p: int, r) -> LatticeVector:
    """gamma_{p,r} = (p-1)/2 d^2 + (1-r)/2 c; e^{gamma_{p,r}} = v_{p,r}."""
    r = scalar(r)
    return d2() * (scalar(p - 1) / 2) + C * ((1 - r) / 2)


# ----------------------------------------------------------------------
# spaces


@dataclass(frozen=True)
class Pi0:
    def exponent(self, index: int) -> LatticeVector:
        return C * index

    @property
    def c_zero(self) -> int:
        return 0

    def d_zero(self, index: int) -> Scalar:
        return scalar(2 * index)

    def label(self, index: int) -> str:
        return f"E[m={index}]"

    def substitute(self, bindings) -> "Pi0":
        return self


@dataclass(frozen=True)
class PiPR:
    p: int
    r: Scalar

    def __post_init__(self):
        if not isinstance(self.p, int):
            raise TypeError("p must be an integer")
        object.__setattr__(self, "r", scalar(self.r))

    def exponent(self, index: int) -> LatticeVector:
        return gamma(self.p, self.r) + C * index

    @property
    def c_zero(self) -> int:
        # <c, gamma_{p,s}> = p - 1 for every s
        return self.p - 1

    def d_zero(self, index: int) -> Scalar:
        return _d_zero_base(self.p, self.r) + 2 * index

    def label(self, index: int) -> str:
        return f"E[p={self.p},r={self.r},l={index}]"

    def substitute(self, bindings) -> "PiPR":
        return PiPR(self.p, self.r.substitute(bindings))


@dataclass(frozen=True)
class Whittaker:
    lam: Scalar

    def __post_init__(self):
        object.__setattr__(self, "lam", scalar(self.lam))
        if self.lam.is_zero():
            raise ValueError("the Whittaker module needs lambda != 0")

    def exponent(self, index: int):
        return None

    @property
    def c_zero(self) -> int:
        # c(0) = -Id on Pi_lambda
        return -1

    def label(self, index: int) -> str:
        return f"W[{self.lam}]"

    def substitute(self, bindings) -> "Whittaker":
        return Whittaker(self.lam.substitute(bindings))


_D_ZERO_CACHE: dict = {}


def _d_zero_base(p: int, r: Scalar) -> Scalar:
    key = (p, r)
    val = _D_ZERO_CACHE.get(key)
    if val is None:
        val = pairing(D, gamma(p, r))
        _D_ZERO_CACHE[key] = val
    return val


# ----------------------------------------------------------------------
# elements


def _term_order(key):
    index, modes = key
    return (sum(k for _, k in modes), index, modes)


class FockElement:
    """A finite Scalar-linear combination of basis vectors of one space.

    Instances are treated as immutable; ``terms`` maps ``(index, modes)``
    to a nonzero Scalar.
    """

    __slots__ = ("space", "terms", "_hash")

    def __init__(self, space, terms=None):
        self.space = space
        clean = {}
        if terms:
            for key, coef in terms.items():
                if type(coef) is not Scalar:
                    coef = scalar(coef)
                if coef:
                    clean[key] = coef
        self.terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, space, terms: dict) -> "FockElement":
        """Build from an accumulator dict, dropping zeros (no copy)."""
        el = object.__new__(cls)
        el.space = space
        el.terms = {k: v for k, v in terms.items() if v}
        el._hash = None
        return el

    @classmethod
    def zero(cls, space) -> "FockElement":
        return cls(space)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _term_order(kv[0]))

    def _check(self, other):
        if not isinstance(other, FockElement):
            raise TypeError(f"cannot combine FockElement with {type(other).__name__}")
        if other.space != self.space:
            raise ValueError(f"space mismatch: {self.space} vs {other.space}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            prev = out.get(k)
            out[k] = v if prev is None else prev + v
        return FockElement._wrap(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return FockElement._wrap(self.space, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            prev = out.get(k)
            out[k] = -v if prev is None else prev - v
        return FockElement._wrap(self.space, out)

    def __mul__(self, k):
        k = scalar(k)
        if not k:
            return FockElement(self.space)
        return FockElement._wrap(self.space, {key: v * k for key, v in self.terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * scalar(k).inverse()

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, FockElement):
            return NotImplemented
        return self.space == other.space and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space, frozenset(self.terms.items())))
        return self._hash

    def coefficient(self, index: int, modes=()) -> Scalar:
        return self.terms.get((index, tuple(sorted(modes))), ZERO)

    def max_degree(self) -> int:
        return max((degree(k) for k in self.terms), default=-1)

    def substitute(self, bindings) -> "FockElement":
        if not bindings:
            return self
        space = self.space.substitute(bindings)
        out = {}
        for k, v in self.terms.items():
            out[k] = v.substitute(bindings)
        return FockElement._wrap(space, out)

    def __str__(self):
        from .grammar import format_fock

        return format_fock(self)

    def __repr__(self):
        return f"FockElement({self})"


def basis_vector(space, index: int = 0, modes: Iterable = ()) -> FockElement:
    return FockElement(space, {(index, tuple(sorted(modes))): ONE})


def degree(key) -> int:
    """Heisenberg degree of a basis key: the sum of creation-mode levels."""
    return sum(k for _, k in key[1])


def add_modes(modes: tuple, new: Iterable) -> tuple:
    lst = list(modes)
    for m in new:
        insort(lst, m)
    return tuple(lst)


def create(v: FockElement, modes: Iterable, coef=ONE) -> FockElement:
    """Multiply every term of ``v`` by the creation monomial ``modes``."""
    modes = tuple(modes)
    out = {}
    for (idx, ms), val in v.terms.items():
        key = (idx, add_modes(ms, modes))
        prev = out.get(key)
        x = val * coef
        out[key] = x if prev is None else prev + x
    return FockElement._wrap(v.space, out)


def _opposite(g: str) -> str:
    return "d" if g == "c" else "c"


def _remove_one(modes: tuple, m) -> tuple:
    i = modes.index(m)
    return modes[:i] + modes[i + 1:]


def heis_apply(g: str, n: int, v: FockElement) -> FockElement:
    """Apply the Heisenberg mode g(n), g in {"c", "d"}."""
    if g not in ("c", "d"):
        raise ValueError(f"generator must be 'c' or 'd', got {g!r}")
    space = v.space
    out: dict = {}
    if n < 0:
        return create(v, [(g, -n)])
    if n > 0:
        target = (_opposite(g), n)
        for (idx, ms), val in v.terms.items():
            cnt = ms.count(target)
            if cnt:
                key = (idx, _remove_one(ms, target))
                x = val * (2 * n * cnt)
                prev = out.get(key)
                out[key] = x if prev is None else prev + x
        return FockElement._wrap(space, out)
    # zero mode
    if isinstance(space, Whittaker):
        if g == "c":
            return -v
        for (idx, ms), val in v.terms.items():
            out[(idx + 1, ms)] = val
        return FockElement._wrap(space, out)
    if g == "c":
        return v * space.c_zero
    for (idx, ms), val in v.terms.items():
        out[(idx, ms)] = val * space.d_zero(idx)
    return FockElement._wrap(space, out)


def lattice_mode_apply(vec: LatticeVector, n: int, v: FockElement) -> FockElement:
    """Apply (alpha c + beta d)(n)."""
    result = FockElement(v.space)
    if vec.alpha:
        result = result + heis_apply("c", n, v) * vec.alpha
    if vec.beta:
        result = result + heis_apply("d", n, v) * vec.beta
    return result
