"""Verma modules of the twisted Heisenberg-Virasoro algebra at level zero.

PBW basis: L(-a_1)...L(-a_s) I(-b_1)...I(-b_t) v with a, b weakly
decreasing.  Brackets (C_I = 0):

    [L(n), L(m)] = (n-m) L(n+m) + delta_{n,-m} (n^3-n)/12 cL
    [L(n), I(m)] = -m I(n+m) - delta_{n,-m} (n^2+n) cLI
    [I(n), I(m)] = 0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import kernel
from .scalars import ONE, Scalar, cL as CL, cLI as CLI, scalar, h as H, hI as HI
from .voperator import partitions, schur_terms

Key = tuple  # (Ls, Is): two weakly decreasing tuples of positive levels


@dataclass(frozen=True)
class HWData:
    h: Scalar = H
    hI: Scalar = HI
    cL: Scalar = CL
    cLI: Scalar = CLI

    def __post_init__(self):
        for f in ("h", "hI", "cL", "cLI"):
            object.__setattr__(self, f, scalar(getattr(self, f)))

    def reducibility(self):
        """True/False when hI/cLI is an explicit rational, else "indeterminate"."""
        if self.cLI.is_zero():
            return "indeterminate"
        q = self.hI / self.cLI
        if not q.is_constant():
            return "indeterminate"
        x = q.to_fraction() - 1
        return x.denominator == 1 and x != 0

    def substitute(self, bindings) -> "HWData":
        return HWData(*(getattr(self, f).substitute(bindings) for f in ("h", "hI", "cL", "cLI")))


def level(key: Key) -> int:
    return sum(key[0]) + sum(key[1])


class VermaElement:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: scalar(v) for k, v in (terms or {}).items() if scalar(v)}

    @classmethod
    def _wrap(cls, terms):
        el = object.__new__(cls)
        el.terms = {k: v for k, v in terms.items() if v}
        return el

    @classmethod
    def highest(cls) -> "VermaElement":
        return cls._wrap({((), ()): ONE})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return VermaElement._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return VermaElement._wrap({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = scalar(c)
        return VermaElement._wrap({k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, VermaElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (level(kv[0]), kv[0]))

    def substitute(self, bindings):
        return VermaElement._wrap({k: v.substitute(bindings) for k, v in self.terms.items()})

    def __str__(self):
        from .grammar import format_verma

        return format_verma(self)

    def __repr__(self):
        return f"VermaElement({self})"


def monomial(Ls=(), Is=()) -> VermaElement:
    return VermaElement._wrap({(tuple(sorted(Ls, reverse=True)), tuple(sorted(Is, reverse=True))): ONE})


def _acc(out: dict, el: dict, coef):
    for k, v in el.items():
        y = v * coef
        out[k] = out[k] + y if k in out else y


# acting on basis keys; results are plain dicts key -> Scalar


@lru_cache(maxsize=None)
def _act_I(n: int, Is: tuple, hw: HWData):
    """I(n) applied to I(-b_1)...I(-b_t) v (I-modes commute)."""
    if n < 0:
        return {((), tuple(sorted(Is + (-n,), reverse=True))): ONE}
    if n > 0:
        return {}
    return {((), Is): hw.hI}


@lru_cache(maxsize=None)
def _act_L_on_I(n: int, Is: tuple, hw: HWData):
    """L(n) applied to I(-b_1)...I(-b_t) v."""
    if not Is:
        if n < 0:
            return {((-n,), ()): ONE}
        if n > 0:
            return {}
        return {((), ()): hw.h}
    if n < 0:
        return {((-n,), Is): ONE}
    b, rest = Is[0], Is[1:]
    out: dict = {}
    # L(n) I(-b) = I(-b) L(n) + [L(n), I(-b)]
    inner = _act_L_on_I(n, rest, hw)
    for key, val in inner.items():
        _acc(out, _act_I_general(-b, key, hw), val)
    # [L(n), I(-b)] = b I(n-b) - delta_{n,b} (n^2+n) cLI
    _acc(out, _act_I(n - b, rest, hw), scalar(b))
    if n == b:
        out[((), rest)] = out.get(((), rest), scalar(0)) - (n * n + n) * hw.cLI
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _act_I_general(n: int, key: Key, hw: HWData):
    """I(n) applied to a PBW monomial."""
    Ls, Is = key
    if not Ls:
        return _act_I(n, Is, hw)
    a, rest = Ls[0], Ls[1:]
    out: dict = {}
    # I(n) L(-a) = L(-a) I(n) + [I(n), L(-a)];  [I(n), L(m)] = n I(n+m) + delta_{m,-n}(m^2+m) cLI
    inner = _act_I_general(n, (rest, Is), hw)
    for k2, val in inner.items():
        _acc(out, _act_L(-a, k2, hw), val)
    _acc(out, _act_I_general(n - a, (rest, Is), hw), scalar(n))
    if n == a:
        m = -a
        k0 = (rest, Is)
        out[k0] = out.get(k0, scalar(0)) + (m * m + m) * hw.cLI
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _act_L(n: int, key: Key, hw: HWData):
    """L(n) applied to a PBW monomial."""
    Ls, Is = key
    if not Ls:
        return _act_L_on_I(n, Is, hw)
    a, rest = Ls[0], Ls[1:]
    if n < 0 and -n >= a:
        return {((-n,) + Ls, Is): ONE}
    out: dict = {}
    # L(n) L(-a) = L(-a) L(n) + (n+a) L(n-a) + delta_{n,a} (n^3-n)/12 cL
    inner = _act_L(n, (rest, Is), hw)
    for k2, val in inner.items():
        _acc(out, _act_L(-a, k2, hw), val)
    _acc(out, _act_L(n - a, (rest, Is), hw), scalar(n + a))
    if n == a:
        k0 = (rest, Is)
        out[k0] = out.get(k0, scalar(0)) + hw.cL * Fraction(n**3 - n, 12)
    return {k: v for k, v in out.items() if v}


def act(gen: str, n: int, e: VermaElement, hw: HWData = HWData()) -> VermaElement:
    """Apply L(n) or I(n) and return the PBW normal form."""
    if gen not in ("L", "I"):
        raise ValueError(f"generator must be 'L' or 'I', got {gen!r}")
    f = _act_L if gen == "L" else _act_I_general
    out: dict = {}
    for key, val in e.terms.items():
        _acc(out, f(n, key, hw), val)
    return VermaElement._wrap(out)


def apply_word(word, e: VermaElement, hw: HWData = HWData()) -> VermaElement:
    """Apply a word [(gen, n), ...], rightmost first."""
    for gen, n in reversed(list(word)):
        e = act(gen, n, e, hw)
    return e


# ----------------------------------------------------------------------
# singular vectors


def _schur_in_I(p: int, sign: int, hw: HWData) -> VermaElement:
    """S_p(sign * c) v with c(-k) := -I(-k)/cLI."""
    if hw.cLI.is_zero():
        from .scalars import DivisionByZeroScalar

        raise DivisionByZeroScalar("cLI must be nonzero")
    x = -sign / hw.cLI
    out: dict = {}
    for coef, parts in schur_terms(p):
        key = ((), tuple(parts))
        out[key] = out.get(key, scalar(0)) + x ** len(parts) * coef
    return VermaElement._wrap(out)


def _c_mode(i: int, e: VermaElement, hw: HWData) -> VermaElement:
    """c(-i) = -I(-i)/cLI."""
    return act("I", -i, e, hw) * (-1 / hw.cLI)


def phi_element(p: int, hw: HWData = HWData()) -> VermaElement:
    """Phi_p(L, c) v in the Verma module."""
    if p < 1:
        raise ValueError("p must be positive")
    out = VermaElement()
    for i in range(1, p + 1):
        out = out + act("L", -i, _schur_in_I(p - i, -1, hw), hw)
    out = out + _schur_in_I(p, -1, hw) * (hw.h + (hw.cL - 2) * (p - 1) / 24)
    tail = VermaElement()
    for i in range(2, p + 1):
        tail = tail + _c_mode(i, _schur_in_I(p - i, -1, hw), hw) * (i - 1)
    return out - tail * ((hw.cL - 26) / 24)


def schur_singular_element(p: int, hw: HWData = HWData()) -> VermaElement:
    """S_p(c) v with c = -I/cLI."""
    if p < 1:
        raise ValueError("p must be positive")
    return _schur_in_I(p, 1, hw)


def is_singular(e: VermaElement, p: int, hw: HWData = HWData()) -> bool:
    for k in range(1, max(p, 1) + 1):
        if act("L", k, e, hw) or act("I", k, e, hw):
            return False
    return True


def pbw_basis(n: int) -> list:
    """PBW keys of level n."""
    out = []
    for a in range(n + 1):
        for Ls in partitions(a):
            for Is in partitions(n - a):
                out.append((Ls, Is))
    return out


def graded_dimension(n: int) -> int:
    return len(pbw_basis(n))


def singular_subspace(p: int, hw: HWData = HWData()) -> list:
    """Basis of the level-p singular vectors, by exact linear algebra."""
    keys = pbw_basis(p)
    images = []
    for key in keys:
        img = {}
        e = VermaElement._wrap({key: ONE})
        for k in (1, 2):
            for gen in ("L", "I"):
                for kk, v in act(gen, k, e, hw).terms.items():
                    img[(gen, k, kk)] = v
        images.append(img)
    # L(1), L(2), I(1) already generate the positive part
    return [VermaElement._wrap({keys[i]: c for i, c in vec.items()}) for vec in kernel(images)]


def h_pr(p: int, r) -> Scalar:
    r = scalar(r)
    return (1 - p * p) * (CL - 26) / 24 + 1 - p + (1 - r) * p / 2


def phi_operator(p: int, e: VermaElement, hw: HWData = HWData()) -> VermaElement:
    """Phi_p(L, c) as an element of U(H) applied to an arbitrary e, c(-k) := -I(-k)/cLI."""
    if p < 1:
        raise ValueError("p must be positive")
    out = VermaElement()
    for i in range(1, p + 1):
        out = out + act("L", -i, schur_from(p - i, e, hw), hw)
    out = out + schur_from(p, act("L", 0, e, hw) + e * ((hw.cL - 2) * (p - 1) / 24), hw)
    tail = VermaElement()
    for i in range(2, p + 1):
        tail = tail + _c_mode(i, schur_from(p - i, e, hw), hw) * (i - 1)
    return out - tail * ((hw.cL - 26) / 24)


def schur_from(q: int, x: VermaElement, hw: HWData) -> VermaElement:
    """S_q(-c) x."""
    out = VermaElement()
    for coef, parts in schur_terms(q):
        y = x
        for k in parts:
            y = act("I", -k, y, hw) * (1 / hw.cLI)
        out = out + y * coef
    return out


__all__ = [
    "HWData",
    "VermaElement",
    "monomial",
    "act",
    "apply_word",
    "phi_element",
    "schur_singular_element",
    "is_singular",
    "pbw_basis",
    "graded_dimension",
    "singular_subspace",
    "level",
    "h_pr",
    "phi_operator",
    "schur_from",
]
