"""Exact rational functions in the fixed parameter set of the realization.

Every coefficient in the package is a :class:`Scalar`: a quotient of two
polynomials with rational coefficients in the parameters

    cL, cLI, r, h, hI, lambda, mu, cW

(in that order).  Scalars are kept in canonical form: the numerator and
denominator are coprime and the denominator is monic under the graded
lexicographic order.  A denominator equal to ``1`` is stored as ``None`` so
that the common polynomial case stays cheap.

The polynomial arithmetic is delegated to FLINT (``python-flint``).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Mapping, Union

import flint

__all__ = [
    "PARAMS",
    "Scalar",
    "DivisionByZeroScalar",
    "ScalarParseError",
    "scalar",
    "param",
    "scalar_arith",
    "substitute",
    "parse_scalar",
    "ZERO",
    "ONE",
    "cL",
    "cLI",
    "r",
    "h",
    "hI",
    "lam",
    "mu",
    "cW",
]

PARAMS = ("cL", "cLI", "r", "h", "hI", "lambda", "mu", "cW")
# Spellings accepted on input only.
_ALIASES = {"lam": "lambda", "cLi": "cLI"}

_CTX = flint.fmpq_mpoly_ctx.get(PARAMS, "deglex")
_GENS = _CTX.gens()
_PZERO = _CTX.constant(0)


class DivisionByZeroScalar(ZeroDivisionError):
    """Raised when a Scalar is divided by zero or a binding kills a denominator."""


class ScalarParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


Number = Union[int, Fraction, "Scalar"]


def _to_fmpq(x) -> flint.fmpq:
    if isinstance(x, Fraction):
        return flint.fmpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return _to_fmpq(Fraction(x))
    return flint.fmpq(x)


class Scalar:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        # num, den: fmpq_mpoly (den may be None, meaning 1)
        if den is None:
            self.num = num
            self.den = None
        else:
            if den.is_zero():
                raise DivisionByZeroScalar("zero denominator")
            if den.is_constant():
                self.num = num / den.leading_coefficient()
                self.den = None
            else:
                g = num.gcd(den)
                if not g.is_one():
                    num = num / g
                    den = den / g
                if den.is_constant():
                    self.num = num / den.leading_coefficient()
                    self.den = None
                else:
                    lc = den.leading_coefficient()
                    if lc != 1:
                        num = num / lc
                        den = den / lc
                    self.num = num
                    self.den = den
        self._hash = None

    @classmethod
    def _poly(cls, num) -> "Scalar":
        s = object.__new__(cls)
        s.num = num
        s.den = None
        s._hash = None
        return s

    # ------------------------------------------------------------------
    # arithmetic

    def __add__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, (int, Fraction)):
                if self.den is None:
                    return Scalar._poly(self.num + _to_fmpq(other))
                other = scalar(other)
            else:
                return NotImplemented
        if self.den is None and other.den is None:
            return Scalar._poly(self.num + other.num)
        if self.den is None:
            return Scalar(self.num * other.den + other.num, other.den)
        if other.den is None:
            return Scalar(self.num + other.num * self.den, self.den)
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        s = object.__new__(Scalar)
        s.num = -self.num
        s.den = self.den
        s._hash = None
        return s

    def __sub__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, (int, Fraction)):
                other = scalar(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, (int, Fraction)):
                if not other:
                    return ZERO
                s = object.__new__(Scalar)
                s.num = self.num * _to_fmpq(other)
                s.den = self.den
                s._hash = None
                return s
            return NotImplemented
        if self.den is None and other.den is None:
            return Scalar._poly(self.num * other.num)
        if self.den is None:
            return Scalar(self.num * other.num, other.den)
        if other.den is None:
            return Scalar(self.num * other.num, self.den)
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if self.num.is_zero():
            raise DivisionByZeroScalar("division by the zero Scalar")
        if self.den is None:
            return Scalar(_CTX.constant(1), self.num)
        return Scalar(self.den, self.num)

    def __truediv__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, (int, Fraction)):
                if not other:
                    raise DivisionByZeroScalar("division by the zero Scalar")
                return self * (Fraction(1) / other)
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return scalar(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if self.den is None:
            return Scalar._poly(self.num ** k)
        s = object.__new__(Scalar)
        s.num = self.num ** k
        s.den = self.den ** k
        s._hash = None
        return s

    # ------------------------------------------------------------------
    # predicates and conversion

    def __bool__(self):
        return not self.num.is_zero()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den is None and self.num.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        if self.num.is_zero():
            return Fraction(0)
        c = self.num.leading_coefficient()
        return Fraction(int(c.p), int(c.q))

    def is_integer(self) -> bool:
        return self.is_constant() and self.to_fraction().denominator == 1

    def __int__(self):
        f = self.to_fraction()
        if f.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return f.numerator

    def __eq__(self, other):
        if type(other) is not Scalar:
            if isinstance(other, (int, Fraction)):
                other = scalar(other)
            else:
                return NotImplemented
        if self.den is None:
            return other.den is None and self.num == other.num
        return other.den is not None and self.num == other.num and self.den == other.den

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if self._hash is None:
            if self.den is None and self.num.is_constant():
                # agree with hash(int) / hash(Fraction) for constants
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash((str(self.num), str(self.den)))
        return self._hash

    def canonicalize(self) -> "Scalar":
        return Scalar(self.num, self.den)

    def free_params(self) -> set:
        used = set()
        for poly in (self.num, self.den):
            if poly is None:
                continue
            for mono in poly.monoms():
                used.update(PARAMS[i] for i, e in enumerate(mono) if e)
        return used

    def substitute(self, bindings: Mapping[str, Number]) -> "Scalar":
        return substitute(self, bindings)

    def __str__(self):
        return _format(self)

    def __repr__(self):
        return f"Scalar({_format(self)!r})"


# ----------------------------------------------------------------------
# constructors


def scalar(x) -> Scalar:
    """Coerce an int, Fraction, string or Scalar to a Scalar."""
    if type(x) is Scalar:
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a Scalar")
    if isinstance(x, (int, Fraction)):
        return Scalar._poly(_CTX.constant(_to_fmpq(x)))
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot make a Scalar from {type(x).__name__}")


def param(name: str) -> Scalar:
    name = _ALIASES.get(name, name)
    try:
        return Scalar._poly(_GENS[PARAMS.index(name)])
    except ValueError:
        raise KeyError(f"unknown parameter {name!r}; expected one of {PARAMS}") from None


ZERO = scalar(0)
ONE = scalar(1)
cL, cLI, r, h, hI, lam, mu, cW = (param(p) for p in PARAMS)


def scalar_arith(op: str, a, b) -> Scalar:
    a, b = scalar(a), scalar(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def substitute(s, bindings: Mapping[str, Number]) -> Scalar:
    """Eliminate the bound parameters from ``s``.

    Values may be ints, Fractions, rational strings like ``"3/2"`` or
    constant Scalars.
    """
    s = scalar(s)
    if not bindings:
        return s
    vals = {}
    for k, v in bindings.items():
        k = _ALIASES.get(k, k)
        if k not in PARAMS:
            raise KeyError(f"unknown parameter {k!r}")
        if type(v) is Scalar:
            v = v.to_fraction()
        vals[k] = _to_fmpq(v)
    num = s.num.subs(vals)
    if s.den is None:
        return Scalar._poly(num)
    den = s.den.subs(vals)
    if den.is_zero():
        raise DivisionByZeroScalar(f"binding {dict(bindings)} annihilates the denominator of {s}")
    return Scalar(num, den)


# ----------------------------------------------------------------------
# printing


def _poly_to_int(poly, scale) -> list:
    """Terms of ``scale*poly`` as (int coefficient, monomial) in deglex order."""
    return [(int((c * scale).p), m) for m, c in poly.terms()]


def _mono_str(mono) -> str:
    parts = []
    for name, e in zip(PARAMS, mono):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _terms_str(terms) -> str:
    out = []
    for i, (c, mono) in enumerate(terms):
        ms = _mono_str(mono)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not ms:
            body = str(a)
        elif a == 1:
            body = ms
        else:
            body = f"{a}*{ms}"
        if i == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def _format(s: Scalar) -> str:
    if s.num.is_zero():
        return "0"
    polys = [s.num] if s.den is None else [s.num, s.den]
    denoms = [int(c.q) for p in polys for c in p.coeffs()]
    scale = 1
    for q in denoms:
        scale = scale * q // _gcd(scale, q)
    num_terms = _poly_to_int(s.num, scale)
    den_terms = _poly_to_int(s.den, scale) if s.den is not None else [(scale, (0,) * len(PARAMS))]
    content = 0
    for c, _ in num_terms + den_terms:
        content = _gcd(content, abs(c))
    num_terms = [(c // content, m) for c, m in num_terms]
    den_terms = [(c // content, m) for c, m in den_terms]
    ns = _terms_str(num_terms)
    if len(den_terms) == 1 and not any(den_terms[0][1]) and den_terms[0][0] == 1:
        return ns
    ds = _terms_str(den_terms)
    if len(num_terms) > 1:
        ns = f"({ns})"
    single_atom = len(den_terms) == 1 and (
        not any(den_terms[0][1]) or (den_terms[0][0] == 1 and sum(den_terms[0][1]) == 1)
    )
    if not single_atom:
        ds = f"({ds})"
    return f"{ns}/{ds}"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ----------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ScalarParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ScalarParseError(f"expected {value!r}", tok[2])
        return tok

    def expr(self) -> Scalar:
        val = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            val = val + rhs if op == "+" else val - rhs
        return val

    def term(self) -> Scalar:
        val = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                val = val * rhs
            else:
                if rhs.is_zero():
                    raise DivisionByZeroScalar(f"division by zero at position {tok[2]}")
                val = val / rhs
        return val

    def unary(self) -> Scalar:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("-", "+"):
            self.take()
            val = self.unary()
            return -val if tok[1] == "-" else val
        return self.power()

    def power(self) -> Scalar:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok[0] != "int":
                raise ScalarParseError("expected integer exponent", tok[2])
            return base ** (-tok[1] if neg else tok[1])
        return base

    def atom(self) -> Scalar:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return scalar(val)
        if kind == "name":
            try:
                return param(val)
            except KeyError:
                raise ScalarParseError(f"unknown parameter {val!r}", pos) from None
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ScalarParseError(f"unexpected token {val!r}", pos)


def parse_scalar(text: str) -> Scalar:
    """Parse the textual Scalar syntax, e.g. ``"(cL - 26)/24"``."""
    p = _Parser(text)
    val = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ScalarParseError(f"unexpected token {tok[1]!r}", tok[2])
    return val
