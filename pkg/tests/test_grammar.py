import pytest
from hypothesis import given, settings, strategies as st

from hvfree.fock import FockElement, Pi0, PiPR, Whittaker, basis_vector
from hvfree.grammar import StateParseError, format_fock, format_verma, parse_fock, parse_state, parse_verma
from hvfree.hvrealize import Q, graded_basis, make_v
from hvfree.scalars import cL, cLI, r, scalar
from hvfree.verma import HWData, VermaElement, pbw_basis, phi_element

LAM = scalar("lambda")


def test_documented_examples():
    x = parse_fock("(cL/24 - 1) * c(-1)^2 d(-3) E[p=2,r=r,l=0]")
    assert x == basis_vector(PiPR(2, r), 0, [("c", 1), ("c", 1), ("d", 3)]) * (cL / 24 - 1)
    y = parse_fock("lam * d0^3 c(-2) W[lam]")
    assert y == basis_vector(Whittaker(LAM), 3, [("c", 2)]) * LAM
    e, hw = parse_verma("L(-2)L(-1)^2 I(-3) v[h,hI]")
    assert e == VermaElement._wrap({((2, 1, 1), (3,)): scalar(1)})
    assert hw == HWData()


def test_q_image_text():
    text = format_fock(Q(make_v(-2, r)))
    assert text == "1/2 * c(-1)^2 E[p=-2,r=r,l=1] + 1/2 * c(-2) E[p=-2,r=r,l=1]"
    assert parse_fock(text) == Q(make_v(-2, r))


def test_named_vectors():
    assert parse_state("v[3,r,0]") == make_v(3, r)
    assert parse_state("vac") == basis_vector(Pi0())
    e, hw = parse_state("vac-verma[h,0]")
    assert e == VermaElement.highest() and hw.hI == 0
    assert parse_fock("d0 W[2]") == basis_vector(Whittaker(scalar(2)), 1)


def test_verma_words_normal_order():
    # I(-1) L(-1) v is reordered on input
    e, _ = parse_verma("I(-1) L(-1) v")
    assert e == VermaElement._wrap({((1,), (1,)): scalar(1), ((), (2,)): scalar(-1)})


@pytest.mark.parametrize(
    "bad",
    ["c(-1", "c(1) vac", "E[p=2]", "foo", "", "c(-1) E[m=1] + W[lam]", "v[h,hI] + c(-1) vac", "W[0]", "2 +* vac"],
)
def test_parse_errors(bad):
    with pytest.raises(StateParseError) as info:
        parse_state(bad)
    assert info.value.position >= 0


coefs = st.sampled_from([scalar(1), scalar(-2), scalar("3/4"), cL / 24 - 1, 1 / cLI, (cL - 26) / (cLI * 3), LAM**2, -r])

SPACE_BASES = {
    "pr": graded_basis(PiPR(2, r), 3, 1),
    "pr2": graded_basis(PiPR(-1, 3 * r - 1), 2, -2),
    "pi0": graded_basis(Pi0(), 3, -1) + graded_basis(Pi0(), 2, 2),
    "wh": [basis_vector(Whittaker(LAM), k, ms) for k in (0, 1, 4) for ms in ((), (("d", 1),), (("c", 2), ("d", 1)))],
    "wh2": [basis_vector(Whittaker(scalar("3/2")), k) for k in range(3)],
}


@st.composite
def fock_elements(draw):
    basis = SPACE_BASES[draw(st.sampled_from(sorted(SPACE_BASES)))]
    out = FockElement(basis[0].space)
    for _ in range(draw(st.integers(1, 4))):
        out = out + draw(st.sampled_from(basis)) * draw(coefs)
    return out


@settings(max_examples=120, deadline=None)
@given(fock_elements())
def test_fock_round_trip(x):
    if not x:
        return
    assert parse_fock(format_fock(x)) == x
    assert format_fock(parse_fock(format_fock(x))) == format_fock(x)


KEYS = [k for n in range(5) for k in pbw_basis(n)]


@settings(max_examples=80, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(KEYS), coefs), min_size=1, max_size=4))
def test_verma_round_trip(terms):
    e = VermaElement()
    for key, c in terms:
        e = e + VermaElement._wrap({key: c})
    if not e:
        return
    back, _ = parse_verma(format_verma(e))
    assert back == e


def test_phi_text_round_trip():
    e = phi_element(3, HWData())
    back, _ = parse_verma(str(e))
    assert back == e
