import pytest
from hypothesis import given, settings, strategies as st

from hvfree.scalars import DivisionByZeroScalar, cL, cLI, h, hI, r, scalar
from hvfree.verma import (
    HWData,
    VermaElement,
    act,
    apply_word,
    graded_dimension,
    h_pr,
    is_singular,
    monomial,
    pbw_basis,
    phi_element,
    phi_operator,
    schur_singular_element,
    singular_subspace,
)

from oracles import WordVerma, word_to_key

V = VermaElement.highest()
HW = HWData()


def test_act_examples():
    assert act("L", 1, monomial([1]), HW) == V * (2 * h)
    assert act("L", 2, monomial([2]), HW) == V * (4 * h + cL / 2)
    assert act("I", 1, monomial([1]), HW) == V * hI
    assert act("L", 0, V, HW) == V * h
    assert act("I", 0, V, HW) == V * hI
    assert not act("L", 3, V, HW)


def test_pbw_ordering():
    # I(-1) L(-1) v = L(-1) I(-1) v - [L(-1), I(-1)] v = L(-1) I(-1) v - I(-2) v
    e = act("I", -1, monomial([1]), HW)
    assert e == monomial([1], [1]) - monomial([], [2])
    # L(-1) L(-2) v = L(-2) L(-1) v + L(-3) v
    assert act("L", -1, monomial([2]), HW) == monomial([2, 1]) + monomial([3])


def test_apply_word_rightmost_first():
    word = [("L", -1), ("I", -2)]
    assert apply_word(word, V, HW) == act("L", -1, act("I", -2, V, HW), HW)


def test_phi_one():
    assert phi_element(1, HW) == monomial([1]) + monomial([], [1]) * (h / cLI)
    hw0 = HWData(hI=0)
    assert is_singular(phi_element(1, hw0), 1, hw0)


def test_schur_one():
    assert schur_singular_element(1, HW) == monomial([], [1]) * (-1 / cLI)
    hw = HWData(hI=2 * cLI)
    assert is_singular(schur_singular_element(1, hw), 1, hw)


def test_singularity_examples():
    assert is_singular(V, 0, HW)
    assert not is_singular(monomial([1]), 1, HW)
    hw = HWData(h=h_pr(3, r + 2), hI=-2 * cLI)
    assert is_singular(phi_element(3, hw), 3, hw)
    assert not is_singular(phi_element(3, HW), 3, HW)
    hw3 = HWData(hI=3 * cLI)
    assert is_singular(schur_singular_element(2, hw3), 2, hw3)
    assert not is_singular(schur_singular_element(2, HW), 2, HW)


def _bipartitions(n):
    from sympy import partition

    return sum(int(partition(a)) * int(partition(n - a)) for a in range(n + 1))


@pytest.mark.parametrize("n", range(7))
def test_graded_dimensions(n):
    assert graded_dimension(n) == _bipartitions(n)
    assert len(set(pbw_basis(n))) == graded_dimension(n)


def test_singular_subspace_is_spanned_by_phi():
    for p in (1, 2, 3):
        hw = HWData(h=h_pr(p, r + 2), hI=(1 - p) * cLI)
        basis = singular_subspace(p, hw)
        assert len(basis) == 1
        phi = phi_element(p, hw)
        (key, c), *_ = basis[0].items()
        assert phi * (c / phi.terms[key]) == basis[0]


def test_phi_operator_on_highest_weight():
    for p in (1, 2, 3):
        assert phi_operator(p, V, HW) == phi_element(p, HW)


def test_reducibility_flag():
    assert HWData(hI=3 * cLI).reducibility() is True
    assert HWData(hI=cLI).reducibility() is False
    assert HWData(hI=cLI / 2).reducibility() is False
    assert HWData().reducibility() == "indeterminate"
    assert HWData(cLI=0).reducibility() == "indeterminate"


def test_division_by_zero_cLI():
    hw = HWData(cLI=0)
    with pytest.raises(DivisionByZeroScalar):
        phi_element(2, hw)
    with pytest.raises(DivisionByZeroScalar):
        schur_singular_element(1, hw)


def test_errors():
    with pytest.raises(ValueError):
        phi_element(0)
    with pytest.raises(ValueError):
        schur_singular_element(0)


ORACLE = WordVerma(h, hI)
KEYS = [k for n in range(4) for k in pbw_basis(n)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(KEYS), st.sampled_from("LI"), st.integers(-3, 4))
def test_act_against_bubble_sort(key, gen, n):
    Ls, Is = key
    word = tuple(("L", -k) for k in Ls) + tuple(("I", -k) for k in Is)
    got = act(gen, n, VermaElement._wrap({key: scalar(1)}), HW)
    want = {word_to_key(w): c for w, c in ORACLE.act(gen, n, {word: scalar(1)}).items()}
    assert dict(got.terms) == want


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(KEYS), st.integers(-3, 3), st.integers(-3, 3))
def test_brackets_on_verma(key, m, n):
    e = VermaElement._wrap({key: scalar(1)})
    LL = act("L", m, act("L", n, e)) - act("L", n, act("L", m, e))
    want = act("L", m + n, e) * (m - n) + (e * (cL * (m**3 - m) / 12) if m + n == 0 else VermaElement())
    assert LL == want
    LI = act("L", m, act("I", n, e)) - act("I", n, act("L", m, e))
    want = act("I", m + n, e) * (-n) - (e * (cLI * (m * m + m)) if m + n == 0 else VermaElement())
    assert LI == want
    assert act("I", m, act("I", n, e)) == act("I", n, act("I", m, e))


def test_substitute_and_text():
    e = phi_element(2, HW).substitute({"cL": 26, "cLI": 1})
    assert "cL" not in str(e) and "cLI" not in str(e)
    assert str(V) == "v"
