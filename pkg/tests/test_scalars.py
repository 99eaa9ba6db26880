from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from hvfree.scalars import (
    PARAMS,
    DivisionByZeroScalar,
    ScalarParseError,
    cL,
    cLI,
    param,
    parse_scalar,
    r,
    scalar,
    scalar_arith,
    substitute,
)
from hvfree.hvrealize import h_pr

from oracles import h_pr_sympy

small = st.integers(-5, 5)
names = st.sampled_from(PARAMS[:5])


@st.composite
def polys(draw, max_terms=3):
    out = scalar(draw(small))
    for _ in range(draw(st.integers(0, max_terms))):
        mono = scalar(draw(small.filter(bool)))
        for _ in range(draw(st.integers(1, 2))):
            mono = mono * param(draw(names))
        out = out + mono
    return out


@st.composite
def scalars(draw):
    num = draw(polys())
    den = draw(polys().filter(lambda s: not s.is_zero()))
    return num / den


fast = settings(max_examples=60, deadline=None)


@fast
@given(scalars(), scalars(), scalars())
def test_associativity_and_distributivity(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@fast
@given(scalars(), scalars())
def test_commutativity_and_inverses(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a - a).is_zero()
    if not a.is_zero():
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@fast
@given(scalars())
def test_canonicalize_idempotent(a):
    once = a.canonicalize()
    assert once.canonicalize() == once
    assert str(once.canonicalize()) == str(once)


@fast
@given(scalars())
def test_print_parse_round_trip(a):
    assert parse_scalar(str(a)) == a


@fast
@given(scalars())
def test_denominator_monic(a):
    if a.den is not None:
        assert a.den.leading_coefficient() == 1


@fast
@given(scalars(), st.fractions(max_denominator=7), st.fractions(max_denominator=7))
def test_substitution_is_a_homomorphism(a, x, y):
    binding = {"cL": x, "r": y}
    b = a * a + a
    try:
        lhs = substitute(b, binding)
        rhs = substitute(a, binding) ** 2 + substitute(a, binding)
    except DivisionByZeroScalar:
        return
    assert lhs == rhs


def test_spec_examples():
    x = cL / 3 + r
    assert scalar_arith("add", x, 0) == x
    assert scalar_arith("mul", cLI, 1 / cLI) == 1
    assert h_pr(2, r) == -(cL - 26) / 8 - r
    assert h_pr(1, r) == (1 - r) / 2
    assert substitute(cL - 26, {"cL": 26}) == 0
    assert substitute((cL - 2) / 24, {"cL": 26}) == 1


@pytest.mark.parametrize("p", range(-3, 5))
def test_h_pr_against_sympy(p):
    expr, (cl, rr) = h_pr_sympy(p)
    for a, b in [(0, 0), (26, 1), (Fraction(3, 2), -7), (-11, Fraction(5, 3))]:
        want = sp.Rational(expr.subs({cl: sp.Rational(str(a)), rr: sp.Rational(str(b))}))
        got = substitute(h_pr(p, r), {"cL": a, "r": b})
        assert got.to_fraction() == Fraction(int(want.p), int(want.q))


def test_division_by_zero():
    with pytest.raises(DivisionByZeroScalar):
        cL / scalar(0)
    with pytest.raises(DivisionByZeroScalar):
        scalar_arith("div", 1, cL - cL)
    with pytest.raises(DivisionByZeroScalar):
        substitute(1 / (cL - 26), {"cL": 26})


def test_parse_and_print():
    assert parse_scalar("(cL - 26)/24") == (cL - 26) / 24
    assert parse_scalar("lambda^2 * lam") == param("lambda") ** 3
    assert str(scalar(Fraction(-3, 4))) == "-3/4"
    assert parse_scalar("2*cLI/(cLI*cLI)") == 2 / cLI
    with pytest.raises(ScalarParseError):
        parse_scalar("cL +")
    with pytest.raises(ScalarParseError):
        parse_scalar("gamma")


def test_constants_hash_like_numbers():
    assert scalar(3) == 3
    assert hash(scalar(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert {scalar(2): "x"}[scalar(2)] == "x"
    assert scalar(7).is_integer() and int(scalar(7)) == 7
    assert (cL / cL).is_constant()
    assert (cL * r).free_params() == {"cL", "r"}
