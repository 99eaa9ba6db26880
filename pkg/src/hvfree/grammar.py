"""Text form of Fock, Whittaker and Verma states.

Printing and parsing round-trip:

    (cL - 24)/24 * c(-1)^2 d(-3) E[p=2,r=r,l=0]
    lambda * d0^3 c(-2) W[lambda]
    -2 * L(-2) L(-1)^2 I(-3) v[h,hI]

Basis tokens: ``E[p=..,r=..,l=..]`` (v_{p,r-2l} in Pi(p,r)), ``E[m=..]``
(e^{mc} in Pi(0)), ``vac``, ``W[lam]`` and ``v`` / ``v[h,hI]`` for the
highest-weight vector of a Verma module.  Shorthands: ``v[p,r,l]`` and
``vac-verma[h,hI]``.
"""

from __future__ import annotations

import re

from .fock import FockElement, Pi0, PiPR, Whittaker, add_modes
from .scalars import (
    ONE,
    DivisionByZeroScalar,
    Scalar,
    ScalarParseError,
    param,
    scalar,
)

__all__ = [
    "StateParseError",
    "format_scalar_factor",
    "format_fock",
    "format_verma",
    "parse_state",
    "parse_fock",
    "parse_verma",
]


class StateParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ----------------------------------------------------------------------
# printing


def _needs_parens(text: str) -> bool:
    depth = 0
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == " " and depth == 0:
            return True
    return False


def format_scalar_factor(c: Scalar) -> str:
    s = str(c)
    return f"({s})" if _needs_parens(s) else s


def _join(terms) -> str:
    """terms: list of (Scalar, body) with nonempty body."""
    if not terms:
        return "0"
    parts = []
    for i, (c, body) in enumerate(terms):
        neg = str(c).startswith("-")
        a = -c if neg else c
        piece = body if a == 1 else f"{format_scalar_factor(a)} * {body}"
        if i == 0:
            parts.append(f"-{piece}" if neg else piece)
        else:
            parts.append(f" - {piece}" if neg else f" + {piece}")
    return "".join(parts)


def _power(tok: str, k: int) -> str:
    return tok if k == 1 else f"{tok}^{k}"


def _modes_text(modes) -> list:
    out = []
    seen = []
    for m in modes:
        if m not in seen:
            seen.append(m)
    for g, k in seen:
        out.append(_power(f"{g}(-{k})", modes.count((g, k))))
    return out


def _base_text(space, index: int) -> str:
    if isinstance(space, Whittaker):
        return f"W[{space.lam}]"
    return space.label(index)


def format_fock(e: FockElement) -> str:
    terms = []
    for (idx, modes), c in e.items():
        words = []
        if isinstance(e.space, Whittaker) and idx:
            words.append(_power("d0", idx))
        words += _modes_text(modes)
        words.append(_base_text(e.space, idx))
        terms.append((c, " ".join(words)))
    return _join(terms)


def format_verma(e, label: str = "v") -> str:
    terms = []
    for (Ls, Is), c in e.items():
        words = _modes_text(tuple(("L", k) for k in Ls)) + _modes_text(tuple(("I", k) for k in Is))
        words.append(label)
        terms.append((c, " ".join(words)))
    return _join(terms)


# ----------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()\[\],=]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise StateParseError(f"unexpected character {text[pos]!r}", pos)
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


class _Lin:
    """Linear combination of (factor word, base) with Scalar coefficients.

    base is None for pure scalars/operator words.  Factor words are tuples
    of ("c", k), ("d", k), ("d0", 0), ("L", k), ("I", k) in product order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def const(cls, c):
        return cls({((), None): scalar(c)})

    @classmethod
    def atom(cls, word=(), base=None):
        return cls({(tuple(word), base): ONE})

    def scalar_value(self):
        if not self.terms:
            return scalar(0)
        if set(self.terms) == {((), None)}:
            return self.terms[((), None)]
        return None

    def add(self, other, sign=1):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v * sign if k in out else v * sign
        return _Lin(out)

    def mul(self, other, pos):
        out: dict = {}
        for (w1, b1), c1 in self.terms.items():
            for (w2, b2), c2 in other.terms.items():
                if b1 is not None:
                    if w2 or b2 is not None:
                        raise StateParseError("nothing may follow a basis vector", pos)
                    base = b1
                else:
                    base = b2
                key = (w1 + w2, base)
                out[key] = out[key] + c1 * c2 if key in out else c1 * c2
        return _Lin(out)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, ahead=0):
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def is_op(self, value, ahead=0):
        tok = self.peek(ahead)
        return tok[0] == "op" and tok[1] == value

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise StateParseError(f"expected {value!r}, found {tok[1]!r}", tok[2])
        return tok

    def expr(self) -> _Lin:
        val = self.term()
        while self.is_op("+") or self.is_op("-"):
            sign = 1 if self.take()[1] == "+" else -1
            val = val.add(self.term(), sign)
        return val

    def _starts_factor(self):
        kind, val, _ = self.peek()
        return kind in ("int", "name") or (kind == "op" and val == "(")

    def term(self) -> _Lin:
        val = self.unary()
        while True:
            tok = self.peek()
            if self.is_op("*"):
                self.take()
                val = val.mul(self.unary(), tok[2])
            elif self.is_op("/"):
                self.take()
                rhs = self.unary()
                s = rhs.scalar_value()
                if s is None:
                    raise StateParseError("can only divide by a scalar", tok[2])
                if s.is_zero():
                    raise StateParseError("division by zero", tok[2])
                val = val.mul(_Lin.const(s.inverse()), tok[2])
            elif self._starts_factor():
                val = val.mul(self.unary(), tok[2])
            else:
                return val

    def unary(self) -> _Lin:
        if self.is_op("-"):
            self.take()
            return self.unary().mul(_Lin.const(-1), 0)
        if self.is_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def _int(self) -> int:
        neg = False
        if self.is_op("-"):
            self.take()
            neg = True
        tok = self.take()
        if tok[0] != "int":
            raise StateParseError("expected an integer", tok[2])
        return -tok[1] if neg else tok[1]

    def power(self) -> _Lin:
        pos = self.peek()[2]
        base = self.atom()
        if self.is_op("^"):
            self.take()
            k = self._int()
            s = base.scalar_value()
            if s is not None:
                if s.is_zero() and k < 0:
                    raise StateParseError("division by zero", pos)
                return _Lin.const(s**k)
            if k < 0:
                raise StateParseError("negative power of a mode", pos)
            out = _Lin.const(1)
            for _ in range(k):
                out = out.mul(base, pos)
            return out
        return base

    def _mode_level(self, name, pos) -> int:
        self.expect("(")
        k = self._int()
        self.expect(")")
        if k >= 0:
            raise StateParseError(f"{name}({k}) is not a creation mode", pos)
        return -k

    def _bracket_args(self):
        """[a, b, ...] or [key=a, ...]; returns list of (key or None, text)."""
        self.expect("[")
        args = []
        while True:
            key = None
            if self.peek()[0] == "name" and self.is_op("=", 1):
                key = self.take()[1]
                self.take()
            start = self.peek()[2]
            depth = 0
            while True:
                tok = self.peek()
                if tok[0] == "end":
                    raise StateParseError("unterminated '['", start)
                if tok[0] == "op" and tok[1] in ("(", "["):
                    depth += 1
                elif tok[0] == "op" and tok[1] in (")", "]") and depth:
                    depth -= 1
                elif depth == 0 and tok[0] == "op" and tok[1] in (",", "]"):
                    break
                self.take()
            end = self.peek()[2]
            args.append((key, self.text[start:end].strip(), start))
            if self.take()[1] == "]":
                return args

    def _scalar_arg(self, arg) -> Scalar:
        _, text, pos = arg
        try:
            return scalar(text)
        except (ScalarParseError, DivisionByZeroScalar) as exc:
            raise StateParseError(f"bad scalar {text!r}: {exc}", pos) from None

    def _int_arg(self, arg) -> int:
        s = self._scalar_arg(arg)
        if not s.is_integer():
            raise StateParseError(f"expected an integer, got {arg[1]!r}", arg[2])
        return int(s)

    def atom(self) -> _Lin:
        kind, val, pos = self.take()
        if kind == "int":
            return _Lin.const(val)
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind != "name":
            raise StateParseError(f"unexpected token {val!r}", pos)
        if val in ("c", "d") and self.is_op("("):
            return _Lin.atom([(val, self._mode_level(val, pos))])
        if val in ("L", "I") and self.is_op("("):
            return _Lin.atom([(val, self._mode_level(val, pos))])
        if val == "d0":
            return _Lin.atom([("d0", 0)])
        if val == "vac":
            if self.is_op("-") and self.peek(1)[:2] == ("name", "verma"):
                self.take()
                self.take()
                return self._verma_base(pos)
            return _Lin.atom((), ("fock", Pi0(), 0))
        if val == "E" and self.is_op("["):
            args = {a[0]: a for a in self._bracket_args()}
            if set(args) == {"m"}:
                return _Lin.atom((), ("fock", Pi0(), self._int_arg(args["m"])))
            if set(args) == {"p", "r", "l"}:
                p = self._int_arg(args["p"])
                space = PiPR(p, self._scalar_arg(args["r"]))
                return _Lin.atom((), ("fock", space, self._int_arg(args["l"])))
            raise StateParseError("E[...] needs m=.. or p=..,r=..,l=..", pos)
        if val == "W" and self.is_op("["):
            args = self._bracket_args()
            if len(args) != 1:
                raise StateParseError("W[...] takes one argument", pos)
            lam = self._scalar_arg(args[0])
            if lam.is_zero():
                raise StateParseError("the Whittaker module needs lambda != 0", pos)
            return _Lin.atom((), ("fock", Whittaker(lam), 0))
        if val == "v":
            if not self.is_op("["):
                return _Lin.atom((), ("verma", None))
            args = self._bracket_args()
            if len(args) == 3:
                p = self._int_arg(args[0])
                space = PiPR(p, self._scalar_arg(args[1]))
                return _Lin.atom((), ("fock", space, self._int_arg(args[2])))
            if len(args) == 2:
                return _Lin.atom((), ("verma", (self._scalar_arg(args[0]), self._scalar_arg(args[1]))))
            raise StateParseError("v[...] takes [p,r,l] or [h,hI]", pos)
        try:
            return _Lin.const(param(val))
        except KeyError:
            raise StateParseError(f"unknown name {val!r}", pos) from None

    def _verma_base(self, pos) -> _Lin:
        if not self.is_op("["):
            return _Lin.atom((), ("verma", None))
        args = self._bracket_args()
        if len(args) != 2:
            raise StateParseError("vac-verma[...] takes [h,hI]", pos)
        return _Lin.atom((), ("verma", (self._scalar_arg(args[0]), self._scalar_arg(args[1]))))


def _parse_lin(text: str) -> _Lin:
    p = _Parser(text)
    val = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise StateParseError(f"unexpected token {tok[1]!r}", tok[2])
    return val


def _bases(lin: _Lin, text: str):
    bases = {b for (_, b) in lin.terms}
    if None in bases:
        raise StateParseError("every term needs a basis vector", len(text))
    return bases


def parse_fock(text: str) -> FockElement:
    lin = _parse_lin(text)
    if not lin.terms:
        raise StateParseError("cannot infer the space of 0", 0)
    spaces = {b[1] for b in _bases(lin, text) if b[0] == "fock"}
    if len(spaces) != 1 or any(b[0] != "fock" for (_, b) in lin.terms):
        raise StateParseError("all terms must live in one Fock space", 0)
    (space,) = spaces
    out: dict = {}
    for (word, (_, _, index)), c in lin.terms.items():
        modes = []
        for g, k in word:
            if g == "d0":
                if not isinstance(space, Whittaker):
                    raise StateParseError("d0 only exists in the Whittaker module", 0)
                index += 1
            elif g in ("c", "d"):
                modes.append((g, k))
            else:
                raise StateParseError(f"{g}(-{k}) is not a Fock mode", 0)
        key = (index, add_modes((), modes))
        out[key] = out[key] + c if key in out else c
    return FockElement(space, out)


def parse_verma(text: str, hw=None):
    """Parse a PBW expression; factor words are applied as operators, so any order is allowed."""
    from .verma import HWData, VermaElement, apply_word

    lin = _parse_lin(text)
    labels = {b[1] for b in _bases(lin, text) if b[0] == "verma"}
    if any(b[0] != "verma" for (_, b) in lin.terms):
        raise StateParseError("all terms must be Verma states", 0)
    if len(labels) > 1:
        raise StateParseError("terms use different highest weights", 0)
    label = next(iter(labels), None)
    if hw is None:
        hw = HWData() if label is None else HWData(h=label[0], hI=label[1])
    out = VermaElement()
    for (word, _), c in lin.terms.items():
        for g, _k in word:
            if g not in ("L", "I"):
                raise StateParseError(f"{g} is not a Verma generator", 0)
        e = apply_word([(g, -k) for g, k in word], VermaElement.highest(), hw)
        out = out + e * c
    return out, hw


def parse_state(text: str):
    """Parse either kind of state; Verma results come back as (element, HWData)."""
    lin = _parse_lin(text)
    kinds = {b[0] for (_, b) in lin.terms if b is not None}
    if kinds == {"verma"}:
        return parse_verma(text)
    return parse_fock(text)
