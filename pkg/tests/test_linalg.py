from hypothesis import given, settings, strategies as st

from hvfree.linalg import Echelon, kernel, rank
from hvfree.scalars import cL, scalar

entries = st.sampled_from([scalar(0), scalar(1), scalar(-2), scalar("1/3"), cL, cL - 26])
matrices = st.lists(st.lists(entries, min_size=4, max_size=4), min_size=1, max_size=5)


def _vec(row):
    return {i: c for i, c in enumerate(row) if c}


def test_small_examples():
    e = Echelon()
    assert e.add({0: scalar(1), 1: scalar(1)})
    assert e.add({1: cL})
    assert not e.add({0: scalar(2)})
    assert e.rank == 2 and len(e) == 2
    assert e.contains({0: scalar(5), 1: scalar(-1)})
    assert not e.contains({2: scalar(1)})
    assert rank([{0: scalar(1)}, {0: scalar(2)}, {}]) == 1


def test_kernel_example():
    # images of e0, e1, e2: x, 2x, y
    ker = kernel([{"x": scalar(1)}, {"x": scalar(2)}, {"y": scalar(1)}])
    assert ker == [{0: scalar(-2), 1: scalar(1)}] or ker == [{0: scalar(2), 1: scalar(-1)}]


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_rank_nullity(rows):
    images = [_vec(row) for row in rows]
    ker = kernel(images)
    assert rank(images) + len(ker) == len(images)
    for vec in ker:
        total = {}
        for i, c in vec.items():
            for k, v in images[i].items():
                total[k] = total.get(k, scalar(0)) + c * v
        assert all(not v for v in total.values())


@settings(max_examples=100, deadline=None)
@given(matrices, st.lists(entries, min_size=5, max_size=5))
def test_combinations_are_contained(rows, coefs):
    e = Echelon()
    combo = {}
    for row, c in zip(rows, coefs):
        e.add(_vec(row))
        for k, v in _vec(row).items():
            combo[k] = combo.get(k, scalar(0)) + c * v
    assert e.contains(combo)
