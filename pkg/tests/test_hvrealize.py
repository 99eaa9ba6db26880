import pytest
from hypothesis import given, settings, strategies as st

from hvfree.fock import C, FockElement, Pi0, PiPR, Whittaker, basis_vector, heis_apply
from hvfree.hvrealize import (
    I,
    L,
    Q,
    Q_power,
    RealizedOp,
    S_screen,
    UnsupportedSpace,
    W,
    apply,
    barW,
    beta_mode,
    calQ,
    d1_mode,
    graded_basis,
    h_pr,
    kernel_filtration,
    log_part,
    make_bjmn,
    make_cosingular,
    make_v,
    phi_apply,
    q_kernel_negative,
    verify_relacija,
    weyl_gamma_mode,
)
from hvfree.linalg import Echelon
from hvfree.scalars import cL, cLI, r, scalar
from hvfree.suites import ls_commutator_residuals, module_states
from hvfree.voperator import exp_mode_apply, schur_apply

from oracles import L_quadratic

LAM = scalar("lambda")

POOL = (
    graded_basis(PiPR(2, 1), 4)
    + graded_basis(PiPR(3, r), 3, 1)
    + graded_basis(PiPR(-2, r), 3)
    + graded_basis(Pi0(), 3, -1)
    + [basis_vector(Whittaker(LAM), k, ms) for k in (0, 1, 3) for ms in ((), (("d", 2),), (("c", 1), ("d", 1)))]
)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(POOL), st.integers(-5, 5))
def test_L_matches_quadratic_expansion(v, n):
    assert L(n, v) == L_quadratic(n, v)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(POOL), st.sampled_from(["L", "I", "barW", "W"]), st.integers(-3, 3))
def test_realized_ops_shift_degree(v, kind, n):
    out = apply(RealizedOp(kind, n), v)
    for key in out.terms:
        assert sum(k for _, k in key[1]) == v.max_degree() - n


def test_realized_op_validation():
    with pytest.raises(ValueError):
        RealizedOp("X")
    with pytest.raises(ValueError):
        RealizedOp("I", 1, deformed=True)
    assert str(RealizedOp("L", -2, deformed=True)) == "Lt(-2)"
    assert str(RealizedOp("Sscreen")) == "S"
    v = make_v(2, r)
    assert RealizedOp("Q")(v) == Q(v)
    assert RealizedOp("L", 0, True)(v) == L(0, v, deformed=True)
    assert RealizedOp("calQ")(v) == FockElement(v.space)


def test_W_is_scaled_barW():
    for v in graded_basis(PiPR(2, r), 2):
        for n in range(-2, 3):
            assert W(n, v) == barW(n, v) * cLI**2


def test_W22_brackets():
    # W(2,2) with cW = -24 cLI^2
    c_w = -24 * cLI**2
    vectors = graded_basis(PiPR(2, r), 3)
    for m in range(-2, 3):
        for n in range(-2, 3):
            for v in vectors:
                lhs = L(m, W(n, v)) - W(n, L(m, v))
                rhs = W(m + n, v) * (m - n) + (v * (c_w * (m**3 - m) / 12) if m + n == 0 else FockElement(v.space))
                assert lhs == rhs
                assert W(m, W(n, v)) == W(n, W(m, v))


def test_calQ_vanishes_small():
    for v in graded_basis(PiPR(2, 1), 3) + graded_basis(Pi0(), 2, 1):
        assert not calQ(v)


def test_unsupported_spaces():
    w = basis_vector(Whittaker(LAM))
    with pytest.raises(UnsupportedSpace):
        S_screen(w)
    with pytest.raises(UnsupportedSpace):
        S_screen(basis_vector(Pi0()))
    with pytest.raises(UnsupportedSpace):
        calQ(w)


def _S_long(v, extra=5):
    """S with a generous fixed j-range."""
    out = FockElement(v.space)
    top = v.max_degree() + abs(v.space.c_zero) + extra
    for j in range(1, top + 1):
        out = out + (d1_mode(-j, exp_mode_apply(1, j, v)) - exp_mode_apply(1, -j, d1_mode(j, v))) * (scalar(1) / j)
    return out


def test_S_truncation_sound():
    for p in (-1, 1, 2, 3):
        for v in graded_basis(PiPR(p, r), 3):
            assert S_screen(v) == _S_long(v)


STATES = module_states(2, r, 3) + module_states(1, r, 2)


@pytest.mark.parametrize("m", range(-3, 4))
def test_L_S_commutator_corrected_signs(m):
    for label, x in ls_commutator_residuals(STATES, m, "corrected"):
        assert not x, label


@pytest.mark.parametrize("m", range(-2, 3))
def test_L_S_target_signs_hold_when_r_is_one(m):
    # the disputed term is (1 - r) e^c_m on W_{p,r}
    for label, x in ls_commutator_residuals(module_states(2, 1, 2), m, "target"):
        assert not x, label


@pytest.mark.parametrize("n", range(-3, 4))
def test_S_I_commutator_sign(n):
    for v in STATES:
        lhs = S_screen(I(n, v)) - I(n, S_screen(v))
        rhs = (exp_mode_apply(1, n, v) - (Q(v) if n == 0 else FockElement(v.space))) * (2 * cLI)
        assert lhs == rhs


def test_Q_kills_W_pr_states():
    for v in STATES:
        assert not Q(v)


def test_phi_one_is_L_minus_c_L0():
    for v in graded_basis(PiPR(2, r), 3):
        assert phi_apply(1, v) == L(-1, v) - heis_apply("c", -1, L(0, v))


@pytest.mark.parametrize("p", (1, 2, 3))
def test_deformed_L_minus_p(p):
    for n in range(3):
        v = make_v(p, r, n)
        assert L(-p, v, deformed=True) == L(-p, v) + make_v(p, r, n + 1)


def test_relacija():
    assert verify_relacija()
    assert verify_relacija({"cL": 26})
    assert not verify_relacija(coefficient=(cL - 25) / 24)


def test_constructor_errors():
    with pytest.raises(ValueError):
        make_cosingular(0, r, 0, 1)
    with pytest.raises(ValueError):
        make_cosingular(2, r, 0, 0)
    with pytest.raises(ValueError):
        make_bjmn("delta")
    with pytest.raises(ValueError):
        phi_apply(0, make_v(1, r))
    with pytest.raises(ValueError):
        kernel_filtration(0, r, 0, 2)


@pytest.mark.parametrize("p", (1, 2))
@pytest.mark.parametrize("m", (1, 2))
def test_cosingular_filtration(p, m):
    w = make_cosingular(p, r, 1, m)
    assert Q_power(m, w) == make_v(p, r, m + 1)
    assert not Q_power(m + 1, w)
    for ell in range(3):
        assert not Q(make_v(p, r, ell))
    kers = kernel_filtration(p, r, m, 4)
    ech = Echelon()
    for v in kers[m * p]:
        ech.add(dict(v.terms))
    assert ech.contains(dict(make_cosingular(p, r, 0, m).terms))
    lower = kernel_filtration(p, r, m - 1, 4)[m * p]
    assert len(lower) < len(kers[m * p])
    # rank bound for the logarithmic part on Ker Q^{m+1}
    for N, vecs in kers.items():
        for v in vecs:
            x = v
            for _ in range(m + 1):
                x = log_part(x)
            assert not x
            assert log_part(v) == Q(v)


@pytest.mark.parametrize("p", (1, 2, 3))
def test_Q_injective_on_negative_modules(p):
    for N in range(-3, 4):
        assert q_kernel_negative(p, r, N, 3) == []
    assert Q(make_v(-p, r)) == schur_apply(C, p, make_v(-p, r, 1))


def test_weyl_pairing_samples():
    vectors = graded_basis(Pi0(), 2, 0) + graded_basis(Pi0(), 1, 1)
    for n in range(-2, 3):
        for m in range(-2, 3):
            for v in vectors:
                lhs = beta_mode(n, weyl_gamma_mode(m, v)) - weyl_gamma_mode(m, beta_mode(n, v))
                assert lhs == (v if n + m == 0 else FockElement(v.space))


def test_h_pr_shift():
    for p in range(-3, 5):
        assert h_pr(p, r + 2) == h_pr(p, r) - p
