import pytest

from hvfree.fock import FockElement, basis_vector, heis_apply
from hvfree.hvrealize import make_v
from hvfree.scalars import cL, cLI, r, scalar
from hvfree.voperator import exp_mode_apply
from hvfree.whittaker import (
    cyclic_span,
    deformed_apply,
    highest_weight,
    in_span,
    nilpotent_rank,
    slice_matrix,
    top_operator,
    w_vector,
    whittaker_space,
)

LAM = scalar("lambda")


def test_top_operator_examples():
    w = w_vector(LAM)
    assert top_operator(1, w) == w * LAM
    assert top_operator(-1, w) == w / LAM
    assert top_operator(1, w_vector(LAM, 1)) == (w_vector(LAM, 1) - w * 2) * LAM
    with pytest.raises(TypeError):
        top_operator(1, make_v(2, r))


def test_top_operator_commutes_with_nonzero_modes():
    v = w_vector(LAM, 2, [("c", 1), ("d", 2)])
    for g in "cd":
        for k in (-2, -1, 1, 2):
            for m in (-1, 1, 2):
                assert top_operator(m, heis_apply(g, k, v)) == heis_apply(g, k, top_operator(m, v))


def test_eigenmodes_of_exponentials():
    w = w_vector(LAM)
    assert exp_mode_apply(1, 0, w) == w * LAM
    # the degree-preserving mode of e^{-c} sits at ordinary index -2
    assert exp_mode_apply(-1, -2, w) == w / LAM
    for n in range(1, 4):
        assert not exp_mode_apply(1, n, w)
    assert heis_apply("c", 0, w) == -w


def test_deformed_eigenvalues():
    w = w_vector(LAM)
    assert deformed_apply("L", 0, w) == w * ((cL - 2) / 24 + LAM)
    assert deformed_apply("I", 0, w) == w * cLI
    assert highest_weight(LAM) == (cL - 2) / 24 + LAM
    x = deformed_apply("L", 0, w_vector(LAM, 1)) - w_vector(LAM, 1) * highest_weight(LAM)
    assert x == w * (-2 * LAM)
    with pytest.raises(ValueError):
        deformed_apply("W", 0, w)


@pytest.mark.parametrize("K", (1, 3, 6))
def test_slice_matrix(K):
    M = slice_matrix(LAM, K)
    U = slice_matrix(LAM, K, lambda e: exp_mode_apply(1, 0, e))
    for i in range(K + 1):
        for j in range(K + 1):
            assert M[i][j] == U[i][j] + ((cL - 2) / 24 if i == j else 0)
    assert nilpotent_rank(LAM, K) == K


def test_slice_matrix_rejects_degree_raising():
    with pytest.raises(ValueError):
        slice_matrix(LAM, 2, lambda e: heis_apply("c", -1, e))


def test_numeric_lambda():
    space = whittaker_space("3/2")
    w = basis_vector(space)
    assert deformed_apply("L", 0, w) == w * ((cL - 2) / 24 + scalar("3/2"))
    assert nilpotent_rank("3/2", 4) == 4


@pytest.mark.parametrize("n", (0, 1, 2))
def test_cyclic_span_contains_lower_powers(n):
    span = cyclic_span(LAM, n, 2, n + 2)
    for m in range(n + 1):
        assert in_span(span, w_vector(LAM, m))
    assert not in_span(span, w_vector(LAM, n + 1))


def test_cyclic_generator_slice():
    span = cyclic_span(LAM, 0, 2, 2)
    assert in_span(span, w_vector(LAM))
    assert not in_span(span, w_vector(LAM, 1))


@pytest.mark.parametrize("n", (0, 1, 2))
def test_quotient_is_highest_weight(n):
    span = cyclic_span(LAM, n, 3, n + 3)
    v = w_vector(LAM, n + 1)
    h = highest_weight(LAM)
    for m in range(3):
        y = deformed_apply("L", m, v) - (v * h if m == 0 else FockElement(v.space))
        assert in_span(span, y)
    for m in (1, 2):
        assert in_span(span, deformed_apply("I", m, v))
    assert in_span(span, deformed_apply("I", 0, v) - v * cLI)
    # a negative mode leaves the submodule
    assert not in_span(span, deformed_apply("L", -1, v))
