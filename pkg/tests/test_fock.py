import pytest
from hypothesis import given, settings, strategies as st

from hvfree.fock import (
    C,
    D,
    FockElement,
    LatticeVector,
    Pi0,
    PiPR,
    Whittaker,
    basis_vector,
    create,
    d1,
    d2,
    degree,
    gamma,
    heis_apply,
    lattice_mode_apply,
    pairing,
)
from hvfree.hvrealize import graded_basis
from hvfree.scalars import cL, r, scalar

LAM = scalar("lambda")

SPACES = [Pi0(), PiPR(2, r), PiPR(-1, r), Whittaker(LAM)]


def test_pairing_examples():
    assert pairing(C, C) == 0
    assert pairing(D, D) == 0
    assert pairing(C, D) == 2
    for p in range(-3, 5):
        assert pairing(C, gamma(p, r)) == p - 1


def test_d1_d2():
    assert pairing(d1(), d2()) == 0
    assert pairing(d1(), d1()) == (cL - 26) / 3
    assert pairing(d2(), d2()) == -(cL - 26) / 3
    assert d1() + d2() == D * 2
    # d1(0) = 1 - r on v_{p,r}
    for p in range(-2, 4):
        assert pairing(d1(), gamma(p, r)) == 1 - r


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
def test_pairing_bilinear_symmetric(a, b, x, y):
    u, v = LatticeVector(a, b), LatticeVector(x, y)
    assert pairing(u, v) == pairing(v, u)
    assert pairing(u * 3, v) == pairing(u, v) * 3
    assert pairing(u + v, v) == pairing(u, v) + pairing(v, v)


def test_heis_apply_examples():
    space = PiPR(2, r)
    e = basis_vector(space)
    assert heis_apply("c", 1, basis_vector(space, 0, [("d", 1)])) == e * 2
    assert not heis_apply("d", 2, basis_vector(space, 0, [("c", 1)]))
    w = basis_vector(Whittaker(LAM))
    assert heis_apply("c", 0, w) == -w
    assert heis_apply("d", 0, w) == basis_vector(Whittaker(LAM), 1)


def test_zero_modes_on_pi_pr():
    v = basis_vector(PiPR(3, r), 1)
    assert heis_apply("c", 0, v) == v * 2
    assert heis_apply("d", 0, v) == v * pairing(D, gamma(3, r - 2))


def test_degree_examples():
    space = PiPR(2, r)
    assert degree(next(iter(basis_vector(space).terms))) == 0
    assert degree(next(iter(basis_vector(space, 0, [("c", 1), ("d", 3)]).terms))) == 4
    assert degree(next(iter(basis_vector(Whittaker(LAM), 5).terms))) == 0


def test_whittaker_needs_nonzero_lambda():
    with pytest.raises(ValueError):
        Whittaker(scalar(0))


def test_space_mismatch():
    with pytest.raises(ValueError):
        basis_vector(PiPR(2, r)) + basis_vector(PiPR(1, r))


def test_canonical_form():
    space = Pi0()
    a = basis_vector(space, 0, [("d", 2), ("c", 1)])
    b = basis_vector(space, 0, [("c", 1), ("d", 2)])
    assert a == b
    assert not (a - b)
    assert (a * 0).is_zero()
    assert FockElement(space, {(0, ()): 0}).is_zero()
    assert create(basis_vector(space), [("c", 1), ("d", 2)]) == a


_vectors = {}


def _basis(space):
    if space not in _vectors:
        _vectors[space] = graded_basis(space, 4) + graded_basis(space, 3, 1)
    return _vectors[space]


@st.composite
def states(draw):
    space = draw(st.sampled_from(SPACES))
    basis = _basis(space)
    picks = draw(st.lists(st.sampled_from(range(len(basis))), min_size=1, max_size=3))
    out = FockElement(space)
    for i in picks:
        out = out + basis[i] * draw(st.integers(-3, 3))
    return out


gens = st.sampled_from(["c", "d"])
modes = st.integers(-5, 5)


@settings(max_examples=150, deadline=None)
@given(states(), gens, gens, modes, modes)
def test_heisenberg_bracket(v, g, h, m, k):
    lhs = heis_apply(g, m, heis_apply(h, k, v)) - heis_apply(h, k, heis_apply(g, m, v))
    form = 0 if g == h else 2
    assert lhs == v * (m * form if m + k == 0 else 0)


@settings(max_examples=100, deadline=None)
@given(states(), gens, modes)
def test_degree_shift(v, g, n):
    out = heis_apply(g, n, v)
    for key in out.terms:
        assert any(degree(key) == degree(k) - n for k in v.terms)


@settings(max_examples=100, deadline=None)
@given(states(), states(), gens, modes)
def test_linearity(a, b, g, n):
    if a.space != b.space:
        return
    assert heis_apply(g, n, a + b * 3) == heis_apply(g, n, a) + heis_apply(g, n, b) * 3
    vec = LatticeVector(2, -1)
    assert lattice_mode_apply(vec, n, a) == heis_apply("c", n, a) * 2 - heis_apply("d", n, a)
